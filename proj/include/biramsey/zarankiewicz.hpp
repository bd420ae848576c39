#ifndef BIRAMSEY_ZARANKIEWICZ_HPP
#define BIRAMSEY_ZARANKIEWICZ_HPP

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "biramsey/bigraph.hpp"
#include "biramsey/detail/bits.hpp"
#include "biramsey/errors.hpp"

namespace biramsey {

struct ZarankiewiczOptions {
  bool ignore_scale_guard = false;
};

/// Exact maximum together with one extremal K_{t,t}-free subgraph.
struct ZarankiewiczResult {
  BipartiteHost host;
  int t;
  int value;
  BiGraph witness;
};

/// Admissible bound for the branch-and-bound: current edges plus
/// columns_remaining times the largest column degree the row-tuple capacity
/// still admits. The capacity constraint is
///   sum over columns of C(d_j, t)  <=  (t-1) * C(m, t),
/// since each row t-subset lies in at most t-1 columns of a K_{t,t}-free
/// graph.
inline int ktt_free_upper_bound(const BipartiteHost& host, int t, const BiGraph& partial,
                                int columns_remaining) {
  if (t < 2) throw std::invalid_argument("ktt_free_upper_bound: t must be >= 2");
  if (columns_remaining < 0) throw std::invalid_argument("ktt_free_upper_bound: negative remainder");
  const std::uint64_t budget = (t - 1) * detail::binomial(host.m, t);
  std::uint64_t cap_used = 0;
  for (int j = 0; j < partial.n(); ++j) cap_used += detail::binomial(partial.col_degree(j), t);
  int d_max = 0;
  for (int d = host.m; d >= 0; --d)
    if (cap_used + detail::binomial(d, t) <= budget) {
      d_max = d;
      break;
    }
  return partial.edge_count() + columns_remaining * d_max;
}

namespace detail {

/// Best achievable total degree of c columns, each of degree <= cap, under a
/// remaining capacity of rest, where a column of degree d costs C(d, t).
/// Water-filling is exact for the relaxation because the marginal cost
/// C(L, t-1) of the (L+1)-th edge grows with L.
inline std::uint64_t degree_waterfill(int c, int cap, std::uint64_t rest, int t) {
  if (c <= 0 || cap <= 0) return 0;
  int level = std::min(t - 1, cap);
  std::uint64_t total = static_cast<std::uint64_t>(c) * level;
  while (level < cap) {
    const std::uint64_t marginal = binomial(level, t - 1);
    const std::uint64_t step = static_cast<std::uint64_t>(c) * marginal;
    if (step <= rest) {
      rest -= step;
      ++level;
      total += c;
    } else {
      total += rest / marginal;
      break;
    }
  }
  return total;
}

/// Column-by-column search over patterns in non-increasing order under the
/// degree-major total order (popcount first, then numeric value with row 0
/// most significant). Any fixed total order breaks column symmetry exactly;
/// this one makes the remaining-degree cap of the water-fill bound tight,
/// because every later column has degree at most the current one.
///
/// The driver deepens iteratively on the target value: a run either finds a
/// subgraph with >= target edges or proves none exists, and the first
/// succeeding target is exact. Patterns live in key space: bit (m-1-i) of a
/// pattern is row i.
template <unsigned W>
class ZarankiewiczKernel {
 public:
  ZarankiewiczKernel(int m, int n, int t) : m_(m), n_(n), t_(t), subsets_(m, t) {
    budget_ = (t - 1) * binomial(m, t);
    counts_.assign(subsets_.masks.size(), 0);
    cols_.assign(n, 0);
    best_cols_.assign(n, 0);
    for (int d = 0; d <= m; ++d) deg_cost_[d] = binomial(d, t);
    for (std::uint32_t p = (1u << m) - 1; p >= 1; --p) order_.push_back(p);
    std::sort(order_.begin(), order_.end(), [](std::uint32_t a, std::uint32_t b) {
      const int pa = std::popcount(a), pb = std::popcount(b);
      return pa != pb ? pa > pb : a > b;
    });
  }

  int run() {
    const int ub = static_cast<int>(
        std::min<std::uint64_t>(std::uint64_t{static_cast<std::uint64_t>(m_)} * n_,
                                degree_waterfill(n_, m_, budget_, t_)));
    for (int target = ub; target >= 1; --target) {
      target_ = target;
      if (descend(0, 0)) return target;
    }
    std::fill(best_cols_.begin(), best_cols_.end(), 0u);
    return 0;
  }

  BiGraph witness(BipartiteHost host) const {
    std::vector<std::uint64_t> rows(m_, 0);
    for (int j = 0; j < n_; ++j)
      for (int i = 0; i < m_; ++i)
        if ((best_cols_[j] >> (m_ - 1 - i)) & 1) rows[i] |= std::uint64_t{1} << j;
    return BiGraph(host, std::move(rows));
  }

 private:
  bool descend(int k, std::size_t min_idx) {
    if (edges_ >= target_) {
      found_edges_ = edges_;
      std::copy(cols_.begin(), cols_.begin() + k, best_cols_.begin());
      std::fill(best_cols_.begin() + k, best_cols_.end(), 0u);
      return true;
    }
    if (k == n_) return false;

    for (std::size_t idx = min_idx; idx < order_.size(); ++idx) {
      const std::uint32_t p = order_[idx];
      const int pc = std::popcount(p);
      const std::uint64_t cost = deg_cost_[pc];
      if (cap_used_ + cost > budget_) continue;
      if (subsets_.contained_in[p].intersects(saturated_)) continue;
      // Later columns have degree <= pc under the degree-major order.
      const std::uint64_t bound =
          edges_ + pc + degree_waterfill(n_ - k - 1, pc, budget_ - cap_used_ - cost, t_);
      if (bound < static_cast<std::uint64_t>(target_)) continue;

      place(p, k);
      const bool found = descend(k + 1, idx);
      unplace(p, k);
      if (found) {
        assert(static_cast<std::uint64_t>(found_edges_) <= bound);
        return true;
      }
    }
    return false;
  }

  void place(std::uint32_t p, int k) {
    cols_[k] = p;
    edges_ += std::popcount(p);
    cap_used_ += deg_cost_[std::popcount(p)];
    subsets_.contained_in[p].for_each([&](int s) {
      if (++counts_[s] == t_ - 1) saturated_.set(s);
    });
  }

  void unplace(std::uint32_t p, int k) {
    cols_[k] = 0;
    edges_ -= std::popcount(p);
    cap_used_ -= deg_cost_[std::popcount(p)];
    subsets_.contained_in[p].for_each([&](int s) {
      if (counts_[s]-- == t_ - 1) saturated_.clear(s);
    });
  }

  int m_, n_, t_;
  SubsetIndex<W> subsets_;
  std::uint64_t budget_ = 0;
  std::uint64_t deg_cost_[BipartiteHost::max_rows + 1] = {};
  std::vector<std::uint32_t> order_;

  std::vector<std::uint8_t> counts_;
  SmallBitset<W> saturated_;
  std::vector<std::uint32_t> cols_, best_cols_;
  std::uint64_t cap_used_ = 0;
  int edges_ = 0;
  int target_ = 0;
  int found_edges_ = 0;
};

}  // namespace detail

/// Exact z((m,n), K_{t,t}): the maximum edge count of a K_{t,t}-free
/// subgraph of the host, certified by exhausted column-ordered search.
/// Hosts beyond 9x9 are refused unless the override flag is set.
inline ZarankiewiczResult zarankiewicz(BipartiteHost host, int t, ZarankiewiczOptions opts = {}) {
  if (t < 2) throw std::invalid_argument("zarankiewicz: t must be >= 2");
  if (!opts.ignore_scale_guard && (host.m > 9 || host.n > 9))
    throw ScaleGuardError("zarankiewicz scale guard: host " + std::to_string(host.m) + "x" +
                          std::to_string(host.n) +
                          " exceeds 9x9; set ignore_scale_guard to override");

  const std::uint64_t subset_count = detail::binomial(host.m, t);
  const std::uint64_t words = (subset_count + 63) / 64;
  if (words <= 2) {
    detail::ZarankiewiczKernel<2> kernel(host.m, host.n, t);
    const int value = kernel.run();
    return {host, t, value, kernel.witness(host)};
  }
  if (words <= 9) {
    detail::ZarankiewiczKernel<9> kernel(host.m, host.n, t);
    const int value = kernel.run();
    return {host, t, value, kernel.witness(host)};
  }
  throw ScaleGuardError("zarankiewicz: C(m,t) = " + std::to_string(subset_count) +
                        " row tuples exceed the supported index width");
}

}  // namespace biramsey

#endif
