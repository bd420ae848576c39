#ifndef BIRAMSEY_FIXTURES_HPP
#define BIRAMSEY_FIXTURES_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "biramsey/bigraph.hpp"
#include "biramsey/search.hpp"

namespace biramsey {

/// A hard-coded extremal coloring kept as a code constant so tests cannot
/// drift from the recorded edge lists. The two entries are the lower-bound
/// certificates behind BR_4 = 15 and BR_5 = BR_6 = 12.
struct PaperFixture {
  std::string name;
  BipartiteHost host;
  std::vector<std::pair<int, int>> red_edges;
  std::string claim;

  BiGraph red() const { return from_edge_list(host, red_edges); }
};

inline const PaperFixture& fixture(std::string_view name) {
  static const std::vector<PaperFixture> fixtures = {
      {"figure1",
       BipartiteHost(4, 14),
       {{0, 0}, {0, 1}, {0, 2}, {0, 3}, {0, 4},
        {1, 0}, {1, 5}, {1, 6}, {1, 7}, {1, 8},
        {2, 1}, {2, 5}, {2, 9}, {2, 10}, {2, 11},
        {3, 2}, {3, 6}, {3, 9}, {3, 12}, {3, 13}},
       "K_{4,14} admits a coloring with no red K_{2,2} and no blue K_{3,3}"},
      {"figure2",
       BipartiteHost(6, 11),
       {{0, 0}, {0, 1}, {0, 2}, {0, 3},
        {1, 0}, {1, 4}, {1, 5}, {1, 6},
        {2, 0}, {2, 7}, {2, 8}, {2, 9},
        {3, 1}, {3, 4}, {3, 7}, {3, 10},
        {4, 2}, {4, 5}, {4, 8}, {4, 10},
        {5, 3}, {5, 6}, {5, 9}, {5, 10}},
       "K_{6,11} admits a coloring with no red K_{2,2} and no blue K_{3,3}"},
  };
  for (const auto& f : fixtures)
    if (f.name == name) return f;
  std::string valid;
  for (const auto& f : fixtures) valid += (valid.empty() ? "" : ", ") + f.name;
  throw std::invalid_argument("fixture: unknown name \"" + std::string(name) +
                              "\"; valid names: " + valid);
}

/// The full table of BR_m(K_{2,2}, K_{3,3}) values this artifact certifies.
inline std::vector<std::pair<int, BrmResult>> theorem_table() {
  return {
      {2, BrmResult::does_not_exist(2)},
      {3, BrmResult::does_not_exist(3)},
      {4, BrmResult::value(4, 15)},
      {5, BrmResult::value(5, 12)},
      {6, BrmResult::value(6, 12)},
      {7, BrmResult::value(7, 9)},
      {8, BrmResult::value(8, 9)},
  };
}

}  // namespace biramsey

#endif
