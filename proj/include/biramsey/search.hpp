#ifndef BIRAMSEY_SEARCH_HPP
#define BIRAMSEY_SEARCH_HPP

#include <atomic>
#include <bit>
#include <chrono>
#include <cstdint>
#include <functional>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "biramsey/bigraph.hpp"
#include "biramsey/detail/bits.hpp"
#include "biramsey/errors.hpp"
#include "biramsey/good_coloring.hpp"
#include "biramsey/zarankiewicz.hpp"

namespace biramsey {

/// Knobs for the good-coloring search. The pruning flags never change
/// verdicts, only node counts: every branch they cut is one that cannot
/// contain a good coloring.
struct SearchConfig {
  bool use_lemma1_prune = true;
  bool use_edge_window_prune = true;
  /// Precomputed z((m,n), K_{3,3}) for the edge window. Any upper bound on
  /// the true value is sound; when absent it is computed on the fly if the
  /// host is within the zarankiewicz scale guard, else the prune is skipped.
  std::optional<int> zarankiewicz_blue_bound;
  int parallel_width = 1;
  /// Count every column-sorted good red graph instead of stopping at the
  /// first. Disables the root row-symmetry restriction so the count matches
  /// the canonicalized brute-force solution set.
  bool find_all = false;
  /// With find_all, also keep the solutions themselves.
  bool collect_solutions = false;
  bool ignore_scale_guard = false;
};

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t prunes_pair = 0;
  std::uint64_t prunes_triple = 0;
  std::uint64_t prunes_lemma1 = 0;
  std::uint64_t prunes_edge_window = 0;
  std::uint64_t solutions = 0;
  double elapsed_ms = 0.0;

  void merge(const SearchStats& o) {
    nodes += o.nodes;
    prunes_pair += o.prunes_pair;
    prunes_triple += o.prunes_triple;
    prunes_lemma1 += o.prunes_lemma1;
    prunes_edge_window += o.prunes_edge_window;
    solutions += o.solutions;
  }
};

/// Verdict of the existence search. A Witness payload has already passed
/// full verification; Exhausted means the column-ordered enumeration covered
/// every coloring up to column permutation.
struct SearchOutcome {
  enum class Verdict { witness, exhausted };
  Verdict verdict;
  std::optional<GoodColoring> witness;
  SearchStats stats;
  std::vector<BiGraph> solutions;  // populated only with collect_solutions

  bool is_witness() const { return verdict == Verdict::witness; }
};

struct BrmResult {
  enum class Kind { value, does_not_exist, unknown };
  int m = 0;
  Kind kind = Kind::unknown;
  int n = 0;  // the value for Kind::value, the exhausted n_max for Kind::unknown

  static BrmResult value(int m, int n) { return {m, Kind::value, n}; }
  static BrmResult does_not_exist(int m) { return {m, Kind::does_not_exist, 0}; }
  static BrmResult unknown(int m, int n_max) { return {m, Kind::unknown, n_max}; }

  friend bool operator==(const BrmResult&, const BrmResult&) = default;
};

namespace detail {

/// Immutable per-host tables shared by all search workers.
template <unsigned TW>
struct SearchTables {
  int m, n;
  std::uint32_t full;
  SubsetIndex<2> pairs;     // row pairs, masks in column-key space
  SubsetIndex<TW> triples;  // row triples likewise
  std::vector<std::uint8_t> maxpc;

  SearchTables(int m_, int n_)
      : m(m_), n(n_), full((1u << m_) - 1), pairs(m_, 2), triples(m_, 3),
        maxpc(max_popcount_le(m_)) {}
};

/// One worker's search state. Columns are chosen left to right, each new
/// column's key <= the previous one's, which breaks all column symmetry
/// exactly. Patterns are in key space: bit (m-1-i) is row i.
template <unsigned TW>
class ArrowWorker {
 public:
  static constexpr int lemma1_degree_cap = 5;

  ArrowWorker(const SearchTables<TW>* t, bool lemma1, int min_edges, bool find_all, bool collect,
              std::atomic<bool>* stop)
      : t_(t), lemma1_(lemma1), min_edges_(min_edges), find_all_(find_all), collect_(collect),
        stop_(stop) {
    tcnt_.assign(t_->triples.masks.size(), 0);
    cols_.assign(t_->n, 0);
  }

  SearchStats stats;
  std::optional<std::vector<std::uint64_t>> first_rows;  // row vectors of the first solution
  std::vector<std::vector<std::uint64_t>> collected;

  enum class Reject { none, lemma1, pair, triple, window };

  Reject check(std::uint32_t p, int k) const {
    if (lemma1_ && (p & capped_)) return Reject::lemma1;
    if (t_->pairs.contained_in[p].intersects(used_pairs_)) return Reject::pair;
    if (t_->triples.contained_in[~p & t_->full].intersects(saturated_)) return Reject::triple;
    if (min_edges_ >= 0) {
      const std::int64_t reach =
          edges_ + std::popcount(p) + std::int64_t{t_->n - k - 1} * t_->maxpc[p];
      if (reach < min_edges_) return Reject::window;
    }
    return Reject::none;
  }

  void place(std::uint32_t p, int k) {
    cols_[k] = p;
    edges_ += std::popcount(p);
    used_pairs_.or_with(t_->pairs.contained_in[p]);
    t_->triples.contained_in[~p & t_->full].for_each([&](int s) {
      if (++tcnt_[s] == 2) saturated_.set(s);
    });
    if (lemma1_) {
      std::uint32_t bits = p;
      while (bits) {
        const int b = std::countr_zero(bits);
        if (++deg_[b] == lemma1_degree_cap) capped_ |= 1u << b;
        bits &= bits - 1;
      }
    }
    ++stats.nodes;
  }

  void unplace(std::uint32_t p, int k) {
    cols_[k] = 0;
    edges_ -= std::popcount(p);
    used_pairs_.and_not(t_->pairs.contained_in[p]);
    t_->triples.contained_in[~p & t_->full].for_each([&](int s) {
      if (tcnt_[s]-- == 2) saturated_.clear(s);
    });
    if (lemma1_) {
      std::uint32_t bits = p;
      while (bits) {
        const int b = std::countr_zero(bits);
        if (deg_[b]-- == lemma1_degree_cap) capped_ &= ~(1u << b);
        bits &= bits - 1;
      }
    }
  }

  void count_reject(Reject r) {
    switch (r) {
      case Reject::lemma1: ++stats.prunes_lemma1; break;
      case Reject::pair: ++stats.prunes_pair; break;
      case Reject::triple: ++stats.prunes_triple; break;
      case Reject::window: ++stats.prunes_edge_window; break;
      case Reject::none: break;
    }
  }

  /// Returns true when a find-first run can stop.
  bool dfs(int k, std::uint32_t prev) {
    if (stop_ && stop_->load(std::memory_order_relaxed)) return false;
    if (k == t_->n) return emit();
    std::uint32_t p = prev;
    while (true) {
      const Reject r = check(p, k);
      if (r == Reject::none) {
        place(p, k);
        const bool done = dfs(k + 1, p);
        unplace(p, k);
        if (done) return true;
        if (stop_ && stop_->load(std::memory_order_relaxed)) return false;
      } else {
        count_reject(r);
      }
      if (p == 0) break;
      --p;
    }
    return false;
  }

  /// Row-symmetry break at the root of a find-first run: the first column is
  /// a top-aligned run of rows, valid because row permutations act
  /// transitively on patterns of fixed popcount.
  bool run_find_first() {
    for (int d = t_->m; d >= 0; --d) {
      const std::uint32_t p = top_run(d);
      const Reject r = check(p, 0);
      if (r != Reject::none) {
        count_reject(r);
        continue;
      }
      place(p, 0);
      const bool done = dfs(1, p);
      unplace(p, 0);
      if (done) return true;
    }
    return false;
  }

  bool run_find_all() { return dfs(0, t_->full); }

  /// Enumerates the valid prefixes of the first two columns for
  /// branch-parallel execution. Each task is replayed by one worker.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> prefixes(bool root_runs_only) {
    constexpr std::uint32_t none = 0xffffffffu;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> tasks;
    auto roots = [&](auto&& visit) {
      if (root_runs_only) {
        for (int d = t_->m; d >= 0; --d) visit(top_run(d));
      } else {
        std::uint32_t p = t_->full;
        while (true) {
          visit(p);
          if (p == 0) break;
          --p;
        }
      }
    };
    roots([&](std::uint32_t c1) {
      if (check(c1, 0) != Reject::none) return;
      if (t_->n == 1) {
        tasks.emplace_back(c1, none);
        return;
      }
      place(c1, 0);
      std::uint32_t c2 = c1;
      while (true) {
        if (check(c2, 1) == Reject::none) tasks.emplace_back(c1, c2);
        if (c2 == 0) break;
        --c2;
      }
      unplace(c1, 0);
    });
    return tasks;
  }

  /// Replays a prefix and searches below it.
  bool run_prefix(std::uint32_t c1, std::uint32_t c2) {
    constexpr std::uint32_t none = 0xffffffffu;
    place(c1, 0);
    bool done;
    if (c2 == none) {
      done = (t_->n == 1) ? emit() : dfs(1, c1);
    } else {
      place(c2, 1);
      done = dfs(2, c2);
      unplace(c2, 1);
    }
    unplace(c1, 0);
    return done;
  }

  std::uint32_t top_run(int d) const {
    return d == 0 ? 0u : ((1u << d) - 1) << (t_->m - d);
  }

 private:
  bool emit() {
    ++stats.solutions;
    std::vector<std::uint64_t> rows(t_->m, 0);
    for (int j = 0; j < t_->n; ++j)
      for (int i = 0; i < t_->m; ++i)
        if ((cols_[j] >> (t_->m - 1 - i)) & 1) rows[i] |= std::uint64_t{1} << j;
    if (!first_rows) first_rows = rows;
    if (collect_) collected.push_back(std::move(rows));
    return !find_all_;
  }

  const SearchTables<TW>* t_;
  bool lemma1_;
  int min_edges_;  // -1 when the edge window is off
  bool find_all_;
  bool collect_;
  std::atomic<bool>* stop_;

  std::vector<std::uint8_t> tcnt_;
  SmallBitset<TW> saturated_;
  SmallBitset<2> used_pairs_;
  std::vector<std::uint32_t> cols_;
  int deg_[BipartiteHost::max_rows] = {};
  std::uint32_t capped_ = 0;
  int edges_ = 0;
};

template <unsigned TW>
SearchOutcome run_search(BipartiteHost host, const SearchConfig& config, int min_edges) {
  const SearchTables<TW> tables(host.m, host.n);
  const bool lemma1 = config.use_lemma1_prune && host.m >= 4 && host.n >= 6;

  SearchStats stats;
  std::optional<std::vector<std::uint64_t>> first_rows;
  std::vector<std::vector<std::uint64_t>> collected;

  const int width = std::max(1, config.parallel_width);
  if (width == 1) {
    ArrowWorker<TW> w(&tables, lemma1, min_edges, config.find_all, config.collect_solutions,
                      nullptr);
    if (config.find_all)
      w.run_find_all();
    else
      w.run_find_first();
    stats = w.stats;
    first_rows = std::move(w.first_rows);
    collected = std::move(w.collected);
  } else {
    ArrowWorker<TW> gen(&tables, lemma1, min_edges, config.find_all, false, nullptr);
    auto tasks = gen.prefixes(/*root_runs_only=*/!config.find_all);
    stats = gen.stats;  // prefix-generation work

    std::atomic<bool> stop{false};
    std::atomic<std::size_t> next{0};
    std::mutex sink;
    const int threads = static_cast<int>(
        std::min<std::size_t>(width, std::max<std::size_t>(tasks.size(), 1)));
    std::vector<std::thread> pool;
    for (int ti = 0; ti < threads; ++ti) {
      pool.emplace_back([&] {
        ArrowWorker<TW> w(&tables, lemma1, min_edges, config.find_all, config.collect_solutions,
                          config.find_all ? nullptr : &stop);
        while (true) {
          const std::size_t i = next.fetch_add(1);
          if (i >= tasks.size()) break;
          if (!config.find_all && stop.load()) break;
          if (w.run_prefix(tasks[i].first, tasks[i].second) && !config.find_all) {
            stop.store(true);
            break;
          }
        }
        std::lock_guard<std::mutex> lock(sink);
        stats.merge(w.stats);
        if (w.first_rows && !first_rows) first_rows = std::move(w.first_rows);
        for (auto& rows : w.collected) collected.push_back(std::move(rows));
      });
    }
    for (auto& th : pool) th.join();
  }

  SearchOutcome out{SearchOutcome::Verdict::exhausted, std::nullopt, stats, {}};
  if (first_rows) {
    out.verdict = SearchOutcome::Verdict::witness;
    out.witness = verify_good_coloring(BiGraph(host, std::move(*first_rows)));
  }
  for (auto& rows : collected) out.solutions.emplace_back(host, std::move(rows));
  return out;
}

}  // namespace detail

/// Decides whether the host admits a coloring with no red K_{2,2} and no
/// blue K_{3,3}. Search state per node: pairwise column intersections <= 1,
/// triple-miss counts <= 2 (counts never decrease as columns are appended,
/// so a count of 3 is final), the optional row-degree cap from the degree-6
/// rule, and the optional red edge window m*n - z((m,n), K_{3,3}).
inline SearchOutcome good_coloring_exists(BipartiteHost host, const SearchConfig& config = {}) {
  const auto t0 = std::chrono::steady_clock::now();

  if (!config.ignore_scale_guard && host.m > 8)
    throw ScaleGuardError("search scale guard: host " + std::to_string(host.m) + "x" +
                          std::to_string(host.n) +
                          " exceeds 8 rows; set ignore_scale_guard to override");

  SearchOutcome out{SearchOutcome::Verdict::exhausted, std::nullopt, {}, {}};
  if (host.m < 3 && !config.find_all) {
    // Fewer than 3 rows: blue can never hold a K_{3,3}, so empty red wins.
    out.verdict = SearchOutcome::Verdict::witness;
    out.witness = verify_good_coloring(BiGraph(host));
    out.stats.solutions = 1;
    if (config.collect_solutions) out.solutions.emplace_back(host);
  } else {
    std::optional<int> z_bound = config.zarankiewicz_blue_bound;
    if (config.use_edge_window_prune && !z_bound && host.m <= 9 && host.n <= 9)
      z_bound = zarankiewicz(host, 3).value;
    int min_edges = -1;
    if (config.use_edge_window_prune && z_bound)
      min_edges = std::max(0, host.m * host.n - *z_bound);
    out = detail::binomial(host.m, 3) <= 64
              ? detail::run_search<1>(host, config, min_edges)
              : detail::run_search<9>(host, config, min_edges);
  }

  out.stats.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

/// The good-coloring family certifying that no n forces a red K_{2,2} or a
/// blue K_{3,3} when the host has at most 3 rows. For m <= 2 the red graph
/// is empty; for m = 3 each column j carries the single red edge
/// (j mod 3, j), so red column degrees stay <= 1 and no column misses the
/// unique row triple.
inline GoodColoring small_m_certificate(int m, int n) {
  if (m < 1 || m > 3)
    throw std::invalid_argument("small_m_certificate: m must be 1, 2 or 3, got " +
                                std::to_string(m));
  BipartiteHost host(m, n);
  std::vector<std::pair<int, int>> edges;
  if (m == 3)
    for (int j = 0; j < n; ++j) edges.emplace_back(j % 3, j);
  return verify_good_coloring(from_edge_list(host, edges));
}

/// Computes BR_m(K_{2,2}, K_{3,3}) by scanning n upward: the first n whose
/// search exhausts is the value (exhaustion at (m,n) persists for every
/// larger n by restriction). For m <= 3 the certificate family shows no n
/// ever works.
inline BrmResult brm(int m, int n_max, const SearchConfig& config = {}, int n_start = 1,
                     const std::function<void(int, const SearchOutcome&)>& progress = nullptr) {
  if (m < 1) throw std::invalid_argument("brm: m must be >= 1");
  if (n_max < 1 || n_max > BipartiteHost::max_cols)
    throw std::invalid_argument("brm: n_max must be in [1," +
                                std::to_string(BipartiteHost::max_cols) + "]");
  if (m <= 3) {
    small_m_certificate(m, n_max);  // spot verification at the scan limit
    return BrmResult::does_not_exist(m);
  }

  n_start = std::max(1, std::min(n_start, n_max));
  bool witness_below = false;
  for (int n = n_start; n <= n_max; ++n) {
    SearchOutcome outcome = good_coloring_exists(BipartiteHost(m, n), config);
    if (progress) progress(n, outcome);
    if (outcome.is_witness()) {
      witness_below = true;
      continue;
    }
    if (!witness_below) {
      // A caller-supplied lower bound may overshoot; walk back to the
      // boundary so Value(n) pairs a witness at n-1 with exhaustion at n.
      while (n > 1) {
        SearchOutcome below = good_coloring_exists(BipartiteHost(m, n - 1), config);
        if (progress) progress(n - 1, below);
        if (below.is_witness()) break;
        --n;
      }
    }
    return BrmResult::value(m, n);
  }
  return BrmResult::unknown(m, n_max);
}

}  // namespace biramsey

#endif
