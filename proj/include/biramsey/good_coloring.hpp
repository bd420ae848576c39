#ifndef BIRAMSEY_GOOD_COLORING_HPP
#define BIRAMSEY_GOOD_COLORING_HPP

#include <utility>

#include "biramsey/bigraph.hpp"
#include "biramsey/detect.hpp"
#include "biramsey/errors.hpp"

namespace biramsey {

/// A red subgraph of a host whose complement is taken as blue, certified to
/// avoid a red K_{2,2} and a blue K_{3,3}. Instances exist only through
/// verify_good_coloring.
class GoodColoring {
 public:
  const BiGraph& red() const { return red_; }
  const BipartiteHost& host() const { return red_.host(); }
  std::pair<int, int> avoided_red() const { return {2, 2}; }
  std::pair<int, int> avoided_blue() const { return {3, 3}; }

  friend GoodColoring verify_good_coloring(const BiGraph& red);
  friend bool operator==(const GoodColoring&, const GoodColoring&) = default;

 private:
  explicit GoodColoring(BiGraph red) : red_(std::move(red)) {}
  BiGraph red_;
};

/// The sole constructor of GoodColoring: accepts red iff red has no K_{2,2}
/// and host-complement(red) has no K_{3,3}. On rejection throws
/// VerificationError carrying the violating rows and columns.
inline GoodColoring verify_good_coloring(const BiGraph& red) {
  if (auto k22 = find_kst(red, 2, 2))
    throw VerificationError({Rejection::Kind::red_k22, k22->rows, k22->cols});
  if (auto k33 = find_kst(complement(red), 3, 3))
    throw VerificationError({Rejection::Kind::blue_k33, k33->rows, k33->cols});
  return GoodColoring(red);
}

/// Asserts the restriction property: deleting any single row or column from
/// a good coloring leaves a good coloring. Returns true when every deletion
/// verifies; a false return would disprove the monotonicity argument.
inline bool monotone_restriction_check(const GoodColoring& gc) {
  const BiGraph& red = gc.red();
  const int m = red.m(), n = red.n();
  if (m < 2 && n < 2) throw std::invalid_argument("monotone_restriction_check: host too small");

  std::vector<int> all_rows(m), all_cols(n);
  for (int i = 0; i < m; ++i) all_rows[i] = i;
  for (int j = 0; j < n; ++j) all_cols[j] = j;

  auto verifies = [](const BiGraph& g) {
    try {
      verify_good_coloring(g);
      return true;
    } catch (const VerificationError&) {
      return false;
    }
  };

  if (m >= 2) {
    for (int drop = 0; drop < m; ++drop) {
      std::vector<int> rows;
      for (int i = 0; i < m; ++i)
        if (i != drop) rows.push_back(i);
      if (!verifies(restrict(red, rows, all_cols))) return false;
    }
  }
  if (n >= 2) {
    for (int drop = 0; drop < n; ++drop) {
      std::vector<int> cols;
      for (int j = 0; j < n; ++j)
        if (j != drop) cols.push_back(j);
      if (!verifies(restrict(red, all_rows, cols))) return false;
    }
  }
  return true;
}

}  // namespace biramsey

#endif
