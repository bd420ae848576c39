#ifndef BIRAMSEY_WITNESS_IO_HPP
#define BIRAMSEY_WITNESS_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "biramsey/bigraph.hpp"
#include "biramsey/errors.hpp"
#include "biramsey/good_coloring.hpp"

namespace biramsey {

// Witness file contract:
//   { "m": int, "n": int, "red_rows": [string], "avoided_red": [2,2],
//     "avoided_blue": [3,3] }
// red_rows holds exactly m strings of exactly n characters '0'/'1';
// character j of string i is 1 iff red edge x_{i+1} y_{j+1}.

inline nlohmann::json witness_to_json(const GoodColoring& gc) {
  const BiGraph& red = gc.red();
  nlohmann::json j;
  j["m"] = red.m();
  j["n"] = red.n();
  std::vector<std::string> rows;
  for (int i = 0; i < red.m(); ++i) {
    std::string s(red.n(), '0');
    for (int col = 0; col < red.n(); ++col)
      if (red.has_edge(i, col)) s[col] = '1';
    rows.push_back(std::move(s));
  }
  j["red_rows"] = rows;
  j["avoided_red"] = {gc.avoided_red().first, gc.avoided_red().second};
  j["avoided_blue"] = {gc.avoided_blue().first, gc.avoided_blue().second};
  return j;
}

/// Parses the red graph out of a witness document. Validates the format
/// only; verification of the coloring is the caller's separate step.
inline BiGraph red_from_witness_json(const nlohmann::json& doc) {
  auto fail = [](const std::string& what) -> void { throw ParseError("witness JSON: " + what); };

  if (!doc.is_object()) fail("top level must be an object");
  for (const char* key : {"m", "n", "red_rows", "avoided_red", "avoided_blue"})
    if (!doc.contains(key)) fail(std::string("missing key \"") + key + "\"");

  if (!doc["m"].is_number_integer() || !doc["n"].is_number_integer())
    fail("\"m\" and \"n\" must be integers");
  const int m = doc["m"].get<int>();
  const int n = doc["n"].get<int>();
  if (m < 1 || m > BipartiteHost::max_rows || n < 1 || n > BipartiteHost::max_cols)
    fail("host " + std::to_string(m) + "x" + std::to_string(n) + " outside supported limits");

  auto check_pair = [&](const char* key, int a, int b) {
    const auto& v = doc[key];
    if (!v.is_array() || v.size() != 2 || v[0] != a || v[1] != b)
      fail(std::string("\"") + key + "\" must be [" + std::to_string(a) + "," +
           std::to_string(b) + "]");
  };
  check_pair("avoided_red", 2, 2);
  check_pair("avoided_blue", 3, 3);

  const auto& red_rows = doc["red_rows"];
  if (!red_rows.is_array() || red_rows.size() != static_cast<std::size_t>(m))
    fail("\"red_rows\" must hold exactly m strings");

  std::vector<std::uint64_t> rows(m, 0);
  for (int i = 0; i < m; ++i) {
    if (!red_rows[i].is_string()) fail("red_rows[" + std::to_string(i) + "] is not a string");
    const std::string s = red_rows[i].get<std::string>();
    if (s.size() != static_cast<std::size_t>(n))
      fail("red_rows[" + std::to_string(i) + "] has length " + std::to_string(s.size()) +
           ", expected " + std::to_string(n));
    for (int j = 0; j < n; ++j) {
      if (s[j] == '1')
        rows[i] |= std::uint64_t{1} << j;
      else if (s[j] != '0')
        fail("red_rows[" + std::to_string(i) + "] has character '" + std::string(1, s[j]) +
             "' at position " + std::to_string(j));
    }
  }
  return BiGraph(BipartiteHost(m, n), std::move(rows));
}

inline BiGraph red_from_witness_text(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("witness JSON: ") + e.what());
  }
  return red_from_witness_json(doc);
}

}  // namespace biramsey

#endif
