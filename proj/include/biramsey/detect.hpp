#ifndef BIRAMSEY_DETECT_HPP
#define BIRAMSEY_DETECT_HPP

#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "biramsey/bigraph.hpp"

namespace biramsey {

/// Rows and columns of a complete bipartite subgraph, as found by find_kst.
struct KstWitness {
  std::vector<int> rows;
  std::vector<int> cols;
};

/// Searches for K_{s,t} with s rows and t columns: s rows whose column sets
/// share at least t common columns. Returns the first one in lexicographic
/// row order, with the t lowest common columns.
inline std::optional<KstWitness> find_kst(const BiGraph& g, int s, int t) {
  if (s < 1 || t < 1) throw std::invalid_argument("find_kst: s and t must be >= 1");
  if (s > g.m() || t > g.n()) return std::nullopt;

  std::vector<int> pick(s);
  std::vector<std::uint64_t> meet(s + 1);
  meet[0] = g.host().all_columns();

  // Depth-first over row combinations, intersecting as we go.
  int depth = 0;
  pick[0] = 0;
  while (depth >= 0) {
    if (pick[depth] > g.m() - (s - depth)) {
      --depth;
      if (depth >= 0) ++pick[depth];
      continue;
    }
    std::uint64_t inter = meet[depth] & g.row_bits(pick[depth]);
    if (std::popcount(inter) < t) {
      ++pick[depth];
      continue;
    }
    if (depth == s - 1) {
      KstWitness w;
      w.rows.assign(pick.begin(), pick.end());
      for (int j = 0; j < g.n() && static_cast<int>(w.cols.size()) < t; ++j)
        if ((inter >> j) & 1) w.cols.push_back(j);
      return w;
    }
    meet[depth + 1] = inter;
    pick[depth + 1] = pick[depth] + 1;
    ++depth;
  }
  return std::nullopt;
}

/// True iff g contains K_{s,t} (s on the row side, t on the column side).
/// For orientation-free K_{t,t} pass s = t.
inline bool has_kst(const BiGraph& g, int s, int t) { return find_kst(g, s, t).has_value(); }

/// True iff every pair of distinct columns shares at most one common row,
/// i.e. g is K_{2,2}-free.
inline bool pairwise_column_intersection_ok(const BiGraph& g) {
  std::vector<std::uint32_t> cols(g.n());
  for (int j = 0; j < g.n(); ++j) cols[j] = g.col_bits(j);
  for (int a = 0; a < g.n(); ++a)
    for (int b = a + 1; b < g.n(); ++b)
      if (std::popcount(cols[a] & cols[b]) >= 2) return false;
  return true;
}

/// For every 3-element row subset T, the number of columns whose red column
/// set is disjoint from T. After all n columns are processed, the complement
/// has a K_{3,3} on some row triple iff some count reaches 3. Counts never
/// decrease as columns are appended.
class TripleMissTable {
 public:
  explicit TripleMissTable(BipartiteHost host) : host_(host) {
    if (host_.m < 3)
      throw std::invalid_argument("TripleMissTable: host needs at least 3 rows");
    for (int i = 0; i < host_.m; ++i)
      for (int j = i + 1; j < host_.m; ++j)
        for (int k = j + 1; k < host_.m; ++k)
          triples_.push_back((1u << i) | (1u << j) | (1u << k));
    counts_.assign(triples_.size(), 0);
  }

  const BipartiteHost& host() const { return host_; }

  /// Row masks of the triples, in lexicographic (i<j<k) order.
  const std::vector<std::uint32_t>& triples() const { return triples_; }
  const std::vector<std::uint8_t>& counts() const { return counts_; }

  /// Processes one column given by its row mask (bit i = row i).
  void add_column(std::uint32_t col_row_mask) {
    for (std::size_t idx = 0; idx < triples_.size(); ++idx)
      if ((triples_[idx] & col_row_mask) == 0) {
        ++counts_[idx];
        if (counts_[idx] > max_count_) max_count_ = counts_[idx];
      }
  }

  int count(int i, int j, int k) const {
    std::uint32_t mask = (1u << i) | (1u << j) | (1u << k);
    for (std::size_t idx = 0; idx < triples_.size(); ++idx)
      if (triples_[idx] == mask) return counts_[idx];
    throw std::out_of_range("TripleMissTable: not a row triple of this host");
  }

  int max_count() const { return max_count_; }

 private:
  BipartiteHost host_;
  std::vector<std::uint32_t> triples_;
  std::vector<std::uint8_t> counts_;
  int max_count_ = 0;
};

/// Batch recompute over all columns of g.
inline TripleMissTable triple_miss_counts(const BiGraph& g) {
  TripleMissTable table(g.host());
  for (int j = 0; j < g.n(); ++j) table.add_column(g.col_bits(j));
  return table;
}

/// True iff the degree-6 row rule applies to g: the host has m >= 4 and
/// n >= 6 and some row of g has degree >= 6. Under those hypotheses such a
/// graph cannot extend to a coloring avoiding both red K_{2,2} and blue
/// K_{3,3}. Row side only; the column-side analogue needs different
/// hypotheses and is deliberately not assumed.
inline bool degree_prune_applies(const BiGraph& g) {
  if (g.m() < 4 || g.n() < 6) return false;
  for (int i = 0; i < g.m(); ++i)
    if (g.row_degree(i) >= 6) return true;
  return false;
}

}  // namespace biramsey

#endif
