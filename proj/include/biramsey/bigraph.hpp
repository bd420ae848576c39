#ifndef BIRAMSEY_BIGRAPH_HPP
#define BIRAMSEY_BIGRAPH_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace biramsey {

/// Dimensions of a complete bipartite host K_{m,n}: m rows (part X), n
/// columns (part Y). One machine word must hold a full row of column bits
/// and a full column of row bits, hence the limits below.
struct BipartiteHost {
  static constexpr int max_rows = 16;
  static constexpr int max_cols = 63;

  BipartiteHost(int m_, int n_) : m(m_), n(n_) {
    if (m < 1 || m > max_rows)
      throw std::invalid_argument("BipartiteHost: m must be in [1," +
                                  std::to_string(max_rows) + "], got " + std::to_string(m));
    if (n < 1 || n > max_cols)
      throw std::invalid_argument("BipartiteHost: n must be in [1," +
                                  std::to_string(max_cols) + "], got " + std::to_string(n));
  }

  int m;
  int n;

  /// Mask with one bit per column position.
  std::uint64_t all_columns() const { return (std::uint64_t{1} << n) - 1; }
  /// Mask with one bit per row position.
  std::uint32_t all_rows() const { return (std::uint32_t{1} << m) - 1; }

  friend bool operator==(const BipartiteHost&, const BipartiteHost&) = default;
};

/// Subgraph of a host, stored as one column-set bit vector per row: bit j of
/// row i is the edge x_{i+1} y_{j+1}. Values are immutable after
/// construction and safe to share across threads.
class BiGraph {
 public:
  explicit BiGraph(BipartiteHost host) : host_(host), rows_(host.m, 0) {}

  BiGraph(BipartiteHost host, std::vector<std::uint64_t> rows)
      : host_(host), rows_(std::move(rows)) {
    if (rows_.size() != static_cast<std::size_t>(host_.m))
      throw std::invalid_argument("BiGraph: expected exactly m row vectors");
    for (std::uint64_t r : rows_)
      if (r & ~host_.all_columns())
        throw std::out_of_range("BiGraph: row vector has a bit beyond column n-1");
  }

  const BipartiteHost& host() const { return host_; }
  int m() const { return host_.m; }
  int n() const { return host_.n; }

  bool has_edge(int i, int j) const {
    check_row(i);
    check_col(j);
    return (rows_[i] >> j) & 1;
  }

  /// Column bits of row i (bit j = column j).
  std::uint64_t row_bits(int i) const {
    check_row(i);
    return rows_[i];
  }

  /// Row bits of column j (bit i = row i).
  std::uint32_t col_bits(int j) const {
    check_col(j);
    std::uint32_t c = 0;
    for (int i = 0; i < host_.m; ++i) c |= static_cast<std::uint32_t>((rows_[i] >> j) & 1) << i;
    return c;
  }

  int edge_count() const {
    int total = 0;
    for (std::uint64_t r : rows_) total += std::popcount(r);
    return total;
  }

  int row_degree(int i) const {
    check_row(i);
    return std::popcount(rows_[i]);
  }

  int col_degree(int j) const { return std::popcount(col_bits(j)); }

  /// Key of column j in the fixed total order on column patterns: the
  /// numeric value with row 0 as the most significant bit.
  std::uint32_t col_sort_key(int j) const {
    check_col(j);
    std::uint32_t key = 0;
    for (int i = 0; i < host_.m; ++i)
      key |= static_cast<std::uint32_t>((rows_[i] >> j) & 1) << (host_.m - 1 - i);
    return key;
  }

  friend bool operator==(const BiGraph&, const BiGraph&) = default;

 private:
  void check_row(int i) const {
    if (i < 0 || i >= host_.m) throw std::out_of_range("BiGraph: row index " + std::to_string(i));
  }
  void check_col(int j) const {
    if (j < 0 || j >= host_.n) throw std::out_of_range("BiGraph: column index " + std::to_string(j));
  }

  BipartiteHost host_;
  std::vector<std::uint64_t> rows_;
};

/// Builds a graph from explicit edges. Duplicate edges are idempotent.
inline BiGraph from_edge_list(BipartiteHost host, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::uint64_t> rows(host.m, 0);
  for (auto [i, j] : edges) {
    if (i < 0 || i >= host.m || j < 0 || j >= host.n)
      throw std::out_of_range("from_edge_list: edge (" + std::to_string(i) + "," +
                              std::to_string(j) + ") outside host " + std::to_string(host.m) +
                              "x" + std::to_string(host.n));
    rows[i] |= std::uint64_t{1} << j;
  }
  return BiGraph(host, std::move(rows));
}

/// Complement inside the host: edge present iff absent in g.
inline BiGraph complement(const BiGraph& g) {
  std::vector<std::uint64_t> rows(g.m());
  for (int i = 0; i < g.m(); ++i) rows[i] = ~g.row_bits(i) & g.host().all_columns();
  return BiGraph(g.host(), std::move(rows));
}

/// Induced subgraph on the kept rows and columns, reindexed densely in the
/// original relative order. Subsets must be nonempty; duplicates collapse.
inline BiGraph restrict(const BiGraph& g, std::vector<int> keep_rows, std::vector<int> keep_cols) {
  if (keep_rows.empty() || keep_cols.empty())
    throw std::invalid_argument("restrict: row and column subsets must be nonempty");
  for (int i : keep_rows)
    if (i < 0 || i >= g.m()) throw std::out_of_range("restrict: row index " + std::to_string(i));
  for (int j : keep_cols)
    if (j < 0 || j >= g.n()) throw std::out_of_range("restrict: column index " + std::to_string(j));
  std::sort(keep_rows.begin(), keep_rows.end());
  keep_rows.erase(std::unique(keep_rows.begin(), keep_rows.end()), keep_rows.end());
  std::sort(keep_cols.begin(), keep_cols.end());
  keep_cols.erase(std::unique(keep_cols.begin(), keep_cols.end()), keep_cols.end());

  BipartiteHost sub(static_cast<int>(keep_rows.size()), static_cast<int>(keep_cols.size()));
  std::vector<std::uint64_t> rows(sub.m, 0);
  for (int i = 0; i < sub.m; ++i) {
    std::uint64_t src = g.row_bits(keep_rows[i]);
    for (int j = 0; j < sub.n; ++j)
      if ((src >> keep_cols[j]) & 1) rows[i] |= std::uint64_t{1} << j;
  }
  return BiGraph(sub, std::move(rows));
}

/// Column-symmetry normal form: columns reordered so their sort keys are
/// non-increasing. Invariant under any column permutation of the input.
inline BiGraph sorted_columns_form(const BiGraph& g) {
  std::vector<std::uint32_t> keys(g.n());
  for (int j = 0; j < g.n(); ++j) keys[j] = g.col_sort_key(j);
  std::sort(keys.begin(), keys.end(), std::greater<>());

  std::vector<std::uint64_t> rows(g.m(), 0);
  for (int j = 0; j < g.n(); ++j)
    for (int i = 0; i < g.m(); ++i)
      if ((keys[j] >> (g.m() - 1 - i)) & 1) rows[i] |= std::uint64_t{1} << j;
  return BiGraph(g.host(), std::move(rows));
}

/// Swaps the two sides: result(i,j) = g(j,i). Requires n <= max_rows.
inline BiGraph transpose(const BiGraph& g) {
  BipartiteHost th(g.n(), g.m());
  std::vector<std::uint64_t> rows(th.m, 0);
  for (int i = 0; i < g.m(); ++i)
    for (int j = 0; j < g.n(); ++j)
      if (g.has_edge(i, j)) rows[j] |= std::uint64_t{1} << i;
  return BiGraph(th, std::move(rows));
}

}  // namespace biramsey

#endif
