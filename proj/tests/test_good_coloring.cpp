#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

#include "biramsey/fixtures.hpp"
#include "biramsey/good_coloring.hpp"
#include "biramsey/witness_io.hpp"

using namespace biramsey;
using nlohmann::json;

TEST_CASE("verify_good_coloring accepts both bundled fixtures") {
  CHECK_NOTHROW(verify_good_coloring(fixture("figure1").red()));
  CHECK_NOTHROW(verify_good_coloring(fixture("figure2").red()));
}

TEST_CASE("adding edge (x_2,y_2) to figure 1 creates a red K_{2,2} on x_1,x_2 / y_1,y_2") {
  auto edges = fixture("figure1").red_edges;
  edges.emplace_back(1, 1);
  BiGraph red = from_edge_list(fixture("figure1").host, edges);
  try {
    verify_good_coloring(red);
    FAIL("mutated figure 1 must be rejected");
  } catch (const VerificationError& e) {
    CHECK(e.rejection().kind == Rejection::Kind::red_k22);
    CHECK(e.rejection().rows == std::vector<int>{0, 1});
    CHECK(e.rejection().cols == std::vector<int>{0, 1});
  }
}

TEST_CASE("empty red on (3,3) is rejected with a blue K_{3,3} certificate") {
  try {
    verify_good_coloring(BiGraph(BipartiteHost(3, 3)));
    FAIL("must be rejected");
  } catch (const VerificationError& e) {
    CHECK(e.rejection().kind == Rejection::Kind::blue_k33);
    CHECK(e.rejection().rows == std::vector<int>{0, 1, 2});
    CHECK(e.rejection().cols == std::vector<int>{0, 1, 2});
  }
}

TEST_CASE("avoided pairs are fixed") {
  GoodColoring gc = verify_good_coloring(fixture("figure1").red());
  CHECK(gc.avoided_red() == std::pair<int, int>{2, 2});
  CHECK(gc.avoided_blue() == std::pair<int, int>{3, 3});
}

TEST_CASE("monotone restriction check") {
  SECTION("figure 2: all 6 row deletions and 11 column deletions stay good") {
    CHECK(monotone_restriction_check(verify_good_coloring(fixture("figure2").red())));
  }
  SECTION("figure 1") {
    CHECK(monotone_restriction_check(verify_good_coloring(fixture("figure1").red())));
  }
  SECTION("single-edge coloring on (2,2)") {
    GoodColoring gc = verify_good_coloring(from_edge_list(BipartiteHost(2, 2), {{0, 0}}));
    CHECK(monotone_restriction_check(gc));
  }
}

TEST_CASE("fixture lookup") {
  CHECK(fixture("figure1").host == BipartiteHost(4, 14));
  CHECK(fixture("figure2").host == BipartiteHost(6, 11));
  CHECK(fixture("figure2").red_edges.size() == 24);
  CHECK_THROWS_WITH(fixture("figure3"), Catch::Matchers::ContainsSubstring("figure1") &&
                                            Catch::Matchers::ContainsSubstring("figure2"));
}

TEST_CASE("theorem table entries") {
  auto table = theorem_table();
  REQUIRE(table.size() == 7);
  CHECK(table[0] == std::pair{2, BrmResult::does_not_exist(2)});
  CHECK(table[2] == std::pair{4, BrmResult::value(4, 15)});
  CHECK(table[4] == std::pair{6, BrmResult::value(6, 12)});
  CHECK(table[5] == std::pair{7, BrmResult::value(7, 9)});
}

TEST_CASE("witness JSON round trip") {
  GoodColoring gc = verify_good_coloring(fixture("figure2").red());
  json doc = witness_to_json(gc);
  CHECK(doc["m"] == 6);
  CHECK(doc["n"] == 11);
  CHECK(doc["avoided_red"] == json::array({2, 2}));
  CHECK(doc["avoided_blue"] == json::array({3, 3}));
  REQUIRE(doc["red_rows"].size() == 6);
  CHECK(doc["red_rows"][0] == "11110000000");

  BiGraph parsed = red_from_witness_json(doc);
  CHECK(parsed == gc.red());
}

TEST_CASE("witness JSON parsing rejects malformed documents") {
  GoodColoring gc = verify_good_coloring(fixture("figure1").red());
  const json good = witness_to_json(gc);

  auto expect_reject = [](json doc, const std::string& label) {
    INFO(label);
    CHECK_THROWS_AS(red_from_witness_json(doc), ParseError);
  };

  json missing = good;
  missing.erase("red_rows");
  expect_reject(missing, "missing red_rows");

  json short_row = good;
  short_row["red_rows"][2] = "010";
  expect_reject(short_row, "wrong row length");

  json bad_char = good;
  std::string row = bad_char["red_rows"][0];
  row[3] = '2';
  bad_char["red_rows"][0] = row;
  expect_reject(bad_char, "character other than 0/1");

  json wrong_count = good;
  wrong_count["red_rows"].erase(0);
  expect_reject(wrong_count, "fewer than m rows");

  json bad_pair = good;
  bad_pair["avoided_red"] = json::array({3, 3});
  expect_reject(bad_pair, "wrong avoided_red");

  json bad_host = good;
  bad_host["m"] = 0;
  expect_reject(bad_host, "m out of range");

  json huge_host = good;
  huge_host["n"] = 100;
  expect_reject(huge_host, "n beyond the implementation limit");

  expect_reject(json::array({1, 2, 3}), "not an object");

  CHECK_THROWS_AS(red_from_witness_text("{ not json"), ParseError);
}
