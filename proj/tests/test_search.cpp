#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <string>

#include "biramsey/fixtures.hpp"
#include "biramsey/search.hpp"
#include "oracles.hpp"

using namespace biramsey;

namespace {

SearchConfig bare_config() {
  SearchConfig cfg;
  cfg.use_lemma1_prune = false;
  cfg.use_edge_window_prune = false;
  return cfg;
}

}  // namespace

TEST_CASE("boundary targets: witnesses and exhaustions") {
  struct Target {
    int m, n;
    bool witness;
  };
  for (Target t : {Target{4, 14, true}, {4, 15, false}, {5, 11, true}, {5, 12, false},
                   {6, 11, true}, {6, 12, false}, {7, 8, true}, {7, 9, false}, {8, 8, true}}) {
    SearchOutcome o = good_coloring_exists(BipartiteHost(t.m, t.n));
    INFO("host " << t.m << "x" << t.n);
    CHECK(o.is_witness() == t.witness);
    if (o.is_witness()) {
      CHECK(o.witness->red().m() == t.m);
      CHECK(o.witness->red().n() == t.n);
      CHECK(oracles::is_good_coloring(o.witness->red()));
    }
  }
}

TEST_CASE("hosts with fewer than 3 rows always have the empty-red witness") {
  for (int n : {1, 5, 40, 63}) {
    SearchOutcome o = good_coloring_exists(BipartiteHost(2, n));
    REQUIRE(o.is_witness());
    CHECK(o.witness->red().edge_count() == 0);
  }
}

TEST_CASE("search verdicts match brute force on every host with m*n <= 16") {
  SearchConfig cfg = bare_config();
  cfg.ignore_scale_guard = true;
  cfg.find_all = true;
  cfg.collect_solutions = true;
  for (int m = 1; m <= 16; ++m) {
    for (int n = 1; m * n <= 16; ++n) {
      oracles::GoodColoringCensus census = oracles::census(BipartiteHost(m, n));
      SearchOutcome o = good_coloring_exists(BipartiteHost(m, n), cfg);
      INFO("host " << m << "x" << n);
      CHECK(o.is_witness() == (census.good > 0));

      // Column-symmetry completeness: the column-sorted solutions found are
      // exactly the canonical forms of the brute-force solutions.
      CHECK(o.stats.solutions == census.canonical.size());
      std::set<std::string> found;
      for (const BiGraph& g : o.solutions) {
        CHECK(sorted_columns_form(g) == g);
        found.insert(oracles::graph_key(g));
      }
      CHECK(found == census.canonical);
    }
  }
}

TEST_CASE("prune flags never change the verdict (hosts up to 5x8)") {
  for (int m = 1; m <= 5; ++m)
    for (int n = 1; n <= 8; ++n) {
      SearchOutcome reference = good_coloring_exists(BipartiteHost(m, n), bare_config());
      for (bool lemma1 : {false, true})
        for (bool window : {false, true}) {
          SearchConfig cfg;
          cfg.use_lemma1_prune = lemma1;
          cfg.use_edge_window_prune = window;
          SearchOutcome o = good_coloring_exists(BipartiteHost(m, n), cfg);
          INFO("host " << m << "x" << n << " lemma1=" << lemma1 << " window=" << window);
          CHECK(o.is_witness() == reference.is_witness());
        }
    }
}

TEST_CASE("a caller-supplied blue bound is honored by the edge window") {
  SearchConfig cfg;
  cfg.zarankiewicz_blue_bound = 40;  // exact z((7,9), K_{3,3})
  SearchOutcome o = good_coloring_exists(BipartiteHost(7, 9), cfg);
  CHECK_FALSE(o.is_witness());
  CHECK(o.stats.prunes_edge_window > 0);
}

TEST_CASE("without a supplied bound the edge window is skipped beyond the z guard") {
  // (4,15) has n > 9, so z((4,15), K_{3,3}) is not computed on the fly.
  SearchOutcome o = good_coloring_exists(BipartiteHost(4, 15));
  CHECK_FALSE(o.is_witness());
  CHECK(o.stats.prunes_edge_window == 0);
}

TEST_CASE("parallel width leaves verdicts and solution counts unchanged") {
  SECTION("witness host") {
    SearchConfig wide;
    wide.parallel_width = 4;
    CHECK(good_coloring_exists(BipartiteHost(6, 11), wide).is_witness());
  }
  SECTION("exhausted host") {
    SearchConfig wide;
    wide.parallel_width = 4;
    CHECK_FALSE(good_coloring_exists(BipartiteHost(5, 12), wide).is_witness());
  }
  SECTION("find_all counts merge across workers") {
    SearchConfig one, three;
    one.find_all = three.find_all = true;
    three.parallel_width = 3;
    const auto a = good_coloring_exists(BipartiteHost(4, 6), one);
    const auto b = good_coloring_exists(BipartiteHost(4, 6), three);
    CHECK(a.stats.solutions == b.stats.solutions);
    CHECK(a.stats.solutions > 0);
  }
}

TEST_CASE("small_m_certificate") {
  SECTION("m = 2: empty red graph, any n") {
    GoodColoring gc = small_m_certificate(2, 63);
    CHECK(gc.red().edge_count() == 0);
  }
  SECTION("m = 3, n = 9: nine red edges, verified") {
    GoodColoring gc = small_m_certificate(3, 9);
    CHECK(gc.red().edge_count() == 9);
    CHECK(oracles::is_good_coloring(gc.red()));
  }
  SECTION("m = 3, n = 50: verified") {
    GoodColoring gc = small_m_certificate(3, 50);
    CHECK(gc.red().edge_count() == 50);
    for (int j = 0; j < 50; ++j) CHECK(gc.red().has_edge(j % 3, j));
  }
  SECTION("m = 1") { CHECK(small_m_certificate(1, 20).red().edge_count() == 0); }
  SECTION("m = 4 violates the contract") {
    CHECK_THROWS_AS(small_m_certificate(4, 5), std::invalid_argument);
  }
}

TEST_CASE("brm") {
  SECTION("m <= 3 never forces: does not exist") {
    CHECK(brm(1, 20) == BrmResult::does_not_exist(1));
    CHECK(brm(2, 50) == BrmResult::does_not_exist(2));
    CHECK(brm(3, 50) == BrmResult::does_not_exist(3));
  }
  SECTION("m = 4 reaches 15") { CHECK(brm(4, 20) == BrmResult::value(4, 15)); }
  SECTION("n_max short of the value reports unknown") {
    CHECK(brm(4, 10) == BrmResult::unknown(4, 10));
  }
  SECTION("an overshooting lower bound walks back to the boundary") {
    CHECK(brm(5, 20, {}, 14) == BrmResult::value(5, 12));
  }
  SECTION("progress callback sees one outcome per probed n") {
    int calls = 0;
    brm(4, 20, {}, 1, [&](int, const SearchOutcome&) { ++calls; });
    CHECK(calls == 15);
  }
  SECTION("exhaustion monotonicity is exploited, not re-searched") {
    // Exhausted at (7,9) settles every larger n by restriction; the scan
    // must stop there rather than probing n = 10..20.
    std::vector<int> probed;
    BrmResult res = brm(7, 20, {}, 1, [&](int n, const SearchOutcome&) { probed.push_back(n); });
    CHECK(res == BrmResult::value(7, 9));
    CHECK(probed == std::vector<int>{1, 2, 3, 4, 5, 6, 7, 8, 9});
  }
  SECTION("argument validation") {
    CHECK_THROWS_AS(brm(0, 5), std::invalid_argument);
    CHECK_THROWS_AS(brm(4, 0), std::invalid_argument);
  }
}

TEST_CASE("scale guard refuses m > 8 unless overridden") {
  CHECK_THROWS_AS(good_coloring_exists(BipartiteHost(9, 4)), ScaleGuardError);
  SearchConfig cfg = bare_config();
  cfg.ignore_scale_guard = true;
  CHECK(good_coloring_exists(BipartiteHost(9, 4), cfg).is_witness());
}

TEST_CASE("restricting the figure 2 witness certifies the 5x11 lower bound") {
  BiGraph fig2 = fixture("figure2").red();
  std::vector<int> cols(11);
  for (int j = 0; j < 11; ++j) cols[j] = j;
  for (int drop = 0; drop < 6; ++drop) {
    std::vector<int> rows;
    for (int i = 0; i < 6; ++i)
      if (i != drop) rows.push_back(i);
    CHECK_NOTHROW(verify_good_coloring(restrict(fig2, rows, cols)));
  }
}
