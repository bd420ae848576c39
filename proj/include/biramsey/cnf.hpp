#ifndef BIRAMSEY_CNF_HPP
#define BIRAMSEY_CNF_HPP

#include <cstdint>
#include <cstdlib>
#include <ostream>
#include <string>
#include <vector>

#include "biramsey/bigraph.hpp"
#include "biramsey/detail/bits.hpp"
#include "biramsey/errors.hpp"
#include "biramsey/good_coloring.hpp"

namespace biramsey {

/// Propositional form of the good-coloring condition. Variable i*n + j + 1
/// is true iff edge x_{i+1} y_{j+1} is red. The default encoding has one
/// 4-literal all-negative clause per (row pair, column pair) blocking red
/// K_{2,2}, and one 9-literal all-positive clause per (row triple, column
/// triple) blocking blue K_{3,3}. With the optional symmetry flag,
/// auxiliary variables above m*n encode the lexicographic column ordering.
struct CnfInstance {
  BipartiteHost host;
  int num_vars;
  std::vector<std::vector<int>> clauses;

  int var(int i, int j) const { return i * host.n + j + 1; }
};

inline CnfInstance encode_cnf(BipartiteHost host, bool add_column_symmetry_clauses = false) {
  CnfInstance inst{host, host.m * host.n, {}};
  const int m = host.m, n = host.n;

  for (int i1 = 0; i1 < m; ++i1)
    for (int i2 = i1 + 1; i2 < m; ++i2)
      for (int j1 = 0; j1 < n; ++j1)
        for (int j2 = j1 + 1; j2 < n; ++j2)
          inst.clauses.push_back({-inst.var(i1, j1), -inst.var(i1, j2), -inst.var(i2, j1),
                                  -inst.var(i2, j2)});

  for (int i1 = 0; i1 < m; ++i1)
    for (int i2 = i1 + 1; i2 < m; ++i2)
      for (int i3 = i2 + 1; i3 < m; ++i3)
        for (int j1 = 0; j1 < n; ++j1)
          for (int j2 = j1 + 1; j2 < n; ++j2)
            for (int j3 = j2 + 1; j3 < n; ++j3)
              inst.clauses.push_back({inst.var(i1, j1), inst.var(i1, j2), inst.var(i1, j3),
                                      inst.var(i2, j1), inst.var(i2, j2), inst.var(i2, j3),
                                      inst.var(i3, j1), inst.var(i3, j2), inst.var(i3, j3)});

  if (add_column_symmetry_clauses) {
    // Column j >=lex column j+1 with row 0 most significant. Aux variable
    // t_r >= "columns agree on rows 0..r"; the violating combination
    // (prefix equal, row r blue-left red-right) is blocked at every row.
    for (int j = 0; j + 1 < n; ++j) {
      int prev_t = 0;  // row -1: prefixes trivially equal
      for (int r = 0; r < m; ++r) {
        const int a = inst.var(r, j), b = inst.var(r, j + 1);
        if (prev_t == 0)
          inst.clauses.push_back({a, -b});
        else
          inst.clauses.push_back({-prev_t, a, -b});
        if (r + 1 < m) {
          const int t = ++inst.num_vars;
          if (prev_t == 0) {
            inst.clauses.push_back({a, b, t});
            inst.clauses.push_back({-a, -b, t});
          } else {
            inst.clauses.push_back({-prev_t, a, b, t});
            inst.clauses.push_back({-prev_t, -a, -b, t});
          }
          prev_t = t;
        }
      }
    }
  }
  return inst;
}

/// Number of clauses the default encoding must have.
inline std::uint64_t expected_clause_count(BipartiteHost host) {
  using detail::binomial;
  return binomial(host.m, 2) * binomial(host.n, 2) + binomial(host.m, 3) * binomial(host.n, 3);
}

/// Index of the first clause the assignment leaves unsatisfied, or -1.
inline int first_unsatisfied_clause(const CnfInstance& inst, const std::vector<bool>& values) {
  for (std::size_t c = 0; c < inst.clauses.size(); ++c) {
    bool sat = false;
    for (int lit : inst.clauses[c]) {
      const int v = std::abs(lit);
      if ((lit > 0) == values[v]) {
        sat = true;
        break;
      }
    }
    if (!sat) return static_cast<int>(c);
  }
  return -1;
}

/// Decodes a satisfying assignment (signed DIMACS-style literals) back to a
/// verified coloring. The literals must cover every edge variable; an
/// assignment that leaves a clause unsatisfied is reported rather than
/// decoded, and a satisfying one whose graph fails verification signals a
/// broken encoder.
inline GoodColoring decode_assignment(const CnfInstance& inst, const std::vector<int>& literals) {
  const int edge_vars = inst.host.m * inst.host.n;
  std::vector<bool> values(inst.num_vars + 1, false);
  std::vector<bool> assigned(inst.num_vars + 1, false);
  for (int lit : literals) {
    const int v = std::abs(lit);
    if (v == 0 || v > inst.num_vars)
      throw std::invalid_argument("decode_assignment: literal " + std::to_string(lit) +
                                  " outside 1.." + std::to_string(inst.num_vars));
    values[v] = lit > 0;
    assigned[v] = true;
  }
  for (int v = 1; v <= edge_vars; ++v)
    if (!assigned[v])
      throw std::invalid_argument("decode_assignment: variable " + std::to_string(v) +
                                  " unassigned; literals must cover all edge variables");

  const int bad = first_unsatisfied_clause(inst, values);
  if (bad >= 0)
    throw std::invalid_argument("decode_assignment: clause " + std::to_string(bad + 1) +
                                " unsatisfied; assignment is not a solution");

  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < inst.host.m; ++i)
    for (int j = 0; j < inst.host.n; ++j)
      if (values[inst.var(i, j)]) edges.emplace_back(i, j);
  try {
    return verify_good_coloring(from_edge_list(inst.host, edges));
  } catch (const VerificationError& e) {
    throw EncoderIntegrityError(
        std::string("decode_assignment: satisfying assignment fails verification (") + e.what() +
        "); the clause set must be wrong");
  }
}

/// DIMACS CNF text: "c" metadata lines, the "p cnf" header, then one
/// zero-terminated clause per line. ASCII, LF line endings.
inline void write_dimacs(std::ostream& os, const CnfInstance& inst) {
  os << "c biramsey good-coloring instance\n";
  os << "c host m=" << inst.host.m << " n=" << inst.host.n << "\n";
  os << "c variable i*n+j+1 true <=> edge (x_{i+1}, y_{j+1}) red\n";
  os << "c avoided red=K_{2,2} blue=K_{3,3}\n";
  os << "p cnf " << inst.num_vars << " " << inst.clauses.size() << "\n";
  for (const auto& clause : inst.clauses) {
    for (int lit : clause) os << lit << " ";
    os << "0\n";
  }
}

}  // namespace biramsey

#endif
