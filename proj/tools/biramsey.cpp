// Command-line front end: verification, good-coloring search, Zarankiewicz
// numbers, BR_m reproduction, fixture emission and CNF export.
//
// Exit codes: 0 claim verified / witness found, 1 claim refuted / search
// exhausted, 2 usage or input error. Mathematical verdicts never use 2.

#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "biramsey/bigraph.hpp"
#include "biramsey/cnf.hpp"
#include "biramsey/errors.hpp"
#include "biramsey/fixtures.hpp"
#include "biramsey/good_coloring.hpp"
#include "biramsey/search.hpp"
#include "biramsey/witness_io.hpp"
#include "biramsey/zarankiewicz.hpp"

namespace {

using nlohmann::json;

constexpr int exit_verified = 0;
constexpr int exit_refuted = 1;
constexpr int exit_usage = 2;

struct OutputMode {
  bool as_json = false;
  bool stable = false;  // drop wall-time fields for diffable logs
};

json stats_json(const biramsey::SearchStats& s, const biramsey::SearchConfig& cfg,
                const OutputMode& mode) {
  json j;
  j["nodes"] = s.nodes;
  j["prunes"] = {{"pair", s.prunes_pair},
                 {"triple_miss", s.prunes_triple},
                 {"lemma1", s.prunes_lemma1},
                 {"edge_window", s.prunes_edge_window}};
  j["solutions"] = s.solutions;
  if (!mode.stable) j["elapsed_ms"] = s.elapsed_ms;
  j["config"] = {{"lemma1_prune", cfg.use_lemma1_prune},
                 {"edge_window_prune", cfg.use_edge_window_prune},
                 {"parallel_width", cfg.parallel_width},
                 {"find_all", cfg.find_all}};
  return j;
}

void print_payload(const OutputMode& mode, const json& payload, const std::string& human) {
  if (mode.as_json)
    std::cout << payload.dump(2) << "\n";
  else
    std::cout << human << "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw biramsey::ParseError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << text;
}

int cmd_verify(const std::string& path, const OutputMode& mode) {
  biramsey::BiGraph red = biramsey::red_from_witness_text(read_file(path));
  json payload;
  payload["command"] = "verify";
  payload["host"] = {{"m", red.m()}, {"n", red.n()}};
  try {
    biramsey::verify_good_coloring(red);
  } catch (const biramsey::VerificationError& e) {
    payload["verdict"] = "rejected";
    payload["certificate"] = {{"kind", e.rejection().kind == biramsey::Rejection::Kind::red_k22
                                           ? "red_k22"
                                           : "blue_k33"},
                              {"rows", e.rejection().rows},
                              {"cols", e.rejection().cols}};
    print_payload(mode, payload, std::string("rejected: ") + e.what());
    return exit_refuted;
  }
  payload["verdict"] = "good-coloring";
  print_payload(mode, payload, "good coloring: red K_{2,2}-free, blue K_{3,3}-free");
  return exit_verified;
}

int cmd_search(int m, int n, const biramsey::SearchConfig& cfg,
               const std::optional<std::string>& witness_out, const OutputMode& mode) {
  biramsey::BipartiteHost host(m, n);
  biramsey::SearchOutcome outcome = biramsey::good_coloring_exists(host, cfg);

  json payload;
  payload["command"] = "search";
  payload["host"] = {{"m", m}, {"n", n}};
  payload["stats"] = stats_json(outcome.stats, cfg, mode);

  if (outcome.is_witness()) {
    payload["verdict"] = "witness";
    payload["witness"] = biramsey::witness_to_json(*outcome.witness);
    if (witness_out) write_file(*witness_out, payload["witness"].dump(2) + "\n");
    std::string human = "witness: good coloring of K_{" + std::to_string(m) + "," +
                        std::to_string(n) + "} found (" +
                        std::to_string(outcome.witness->red().edge_count()) + " red edges";
    if (cfg.find_all) human += ", " + std::to_string(outcome.stats.solutions) + " column-sorted solutions";
    human += ")";
    print_payload(mode, payload, human);
    return exit_verified;
  }
  payload["verdict"] = "exhausted";
  std::string human = "exhausted: no good coloring of K_{" + std::to_string(m) + "," +
                      std::to_string(n) + "} (nodes " + std::to_string(outcome.stats.nodes) + ")";
  print_payload(mode, payload, human);
  return exit_refuted;
}

int cmd_zarankiewicz(int m, int n, int t, bool force, const std::optional<std::string>& witness_out,
                     const OutputMode& mode) {
  biramsey::BipartiteHost host(m, n);
  biramsey::ZarankiewiczResult res = biramsey::zarankiewicz(host, t, {.ignore_scale_guard = force});

  json payload;
  payload["command"] = "zarankiewicz";
  payload["host"] = {{"m", m}, {"n", n}};
  payload["t"] = t;
  payload["verdict"] = "value";
  payload["value"] = res.value;
  if (witness_out) {
    json w;
    w["m"] = m;
    w["n"] = n;
    w["t"] = t;
    w["value"] = res.value;
    std::vector<std::string> rows;
    for (int i = 0; i < m; ++i) {
      std::string s(n, '0');
      for (int j = 0; j < n; ++j)
        if (res.witness.has_edge(i, j)) s[j] = '1';
      rows.push_back(s);
    }
    w["rows"] = rows;
    write_file(*witness_out, w.dump(2) + "\n");
  }
  print_payload(mode, payload,
                "z((" + std::to_string(m) + "," + std::to_string(n) + "), K_{" + std::to_string(t) +
                    "," + std::to_string(t) + "}) = " + std::to_string(res.value));
  return exit_verified;
}

int cmd_brm(int m, int n_max, const biramsey::SearchConfig& cfg, const OutputMode& mode) {
  auto progress = [&](int n, const biramsey::SearchOutcome& o) {
    std::ostream& os = mode.as_json ? std::cerr : std::cout;
    os << "  n=" << n << ": " << (o.is_witness() ? "witness" : "exhausted") << " (nodes "
       << o.stats.nodes << ")\n";
  };
  biramsey::BrmResult res = biramsey::brm(m, n_max, cfg, 1, progress);

  json payload;
  payload["command"] = "brm";
  payload["host"] = {{"m", m}, {"n_max", n_max}};
  switch (res.kind) {
    case biramsey::BrmResult::Kind::value:
      payload["verdict"] = "value";
      payload["value"] = res.n;
      print_payload(mode, payload, "BR_" + std::to_string(m) + " = " + std::to_string(res.n));
      return exit_verified;
    case biramsey::BrmResult::Kind::does_not_exist:
      payload["verdict"] = "does-not-exist";
      print_payload(mode, payload, "BR_" + std::to_string(m) +
                                       " does not exist (certificate family verified at n=" +
                                       std::to_string(n_max) + ")");
      return exit_verified;
    case biramsey::BrmResult::Kind::unknown:
      payload["verdict"] = "unknown";
      payload["value"] = res.n;
      print_payload(mode, payload, "BR_" + std::to_string(m) + " > " + std::to_string(res.n) +
                                       " (witnesses up to n-max; value not determined)");
      return exit_refuted;
  }
  return exit_usage;
}

int cmd_fixtures_emit(const std::string& name, const std::optional<std::string>& out_path,
                      const OutputMode& mode) {
  const biramsey::PaperFixture& f = biramsey::fixture(name);
  biramsey::GoodColoring gc = biramsey::verify_good_coloring(f.red());
  json w = biramsey::witness_to_json(gc);
  if (out_path) {
    write_file(*out_path, w.dump(2) + "\n");
    json payload;
    payload["command"] = "fixtures";
    payload["host"] = {{"m", f.host.m}, {"n", f.host.n}};
    payload["verdict"] = "emitted";
    payload["file"] = *out_path;
    print_payload(mode, payload, f.name + " -> " + *out_path + " (" + f.claim + ")");
  } else {
    std::cout << w.dump(2) << "\n";
  }
  return exit_verified;
}

int cmd_encode_cnf(int m, int n, const std::string& out_path, bool symmetry,
                   const OutputMode& mode) {
  biramsey::BipartiteHost host(m, n);
  biramsey::CnfInstance inst = biramsey::encode_cnf(host, symmetry);
  std::ostringstream ss;
  biramsey::write_dimacs(ss, inst);
  write_file(out_path, ss.str());

  json payload;
  payload["command"] = "encode-cnf";
  payload["host"] = {{"m", m}, {"n", n}};
  payload["verdict"] = "emitted";
  payload["file"] = out_path;
  payload["vars"] = inst.num_vars;
  payload["clauses"] = inst.clauses.size();
  print_payload(mode, payload,
                "wrote " + out_path + ": " + std::to_string(inst.num_vars) + " vars, " +
                    std::to_string(inst.clauses.size()) + " clauses");
  return exit_verified;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bipartite Ramsey / Zarankiewicz search and certification"};
  app.require_subcommand(1);

  OutputMode mode;
  app.add_flag("--json", mode.as_json, "emit a single JSON object on stdout");
  app.add_flag("--stable", mode.stable, "omit wall-time fields from JSON output");

  std::string verify_path;
  auto* verify = app.add_subcommand("verify", "verify a witness file");
  verify->add_option("file", verify_path, "witness JSON file")->required();

  int s_m = 0, s_n = 0, s_blue_bound = -1;
  bool s_no_lemma1 = false, s_no_window = false;
  biramsey::SearchConfig s_cfg;
  std::optional<std::string> s_out;
  auto* search = app.add_subcommand("search", "search for a good coloring of K_{m,n}");
  search->add_option("--m", s_m, "rows")->required();
  search->add_option("--n", s_n, "columns")->required();
  search->add_option("--find-witness", s_out, "write the witness JSON here");
  search->add_flag("--all", s_cfg.find_all, "count all column-sorted solutions");
  search->add_option("--threads", s_cfg.parallel_width, "branch-parallel width")
      ->check(CLI::PositiveNumber);
  search->add_flag("--no-lemma1", s_no_lemma1, "disable the degree-6 row prune");
  search->add_flag("--no-edge-window", s_no_window, "disable the red edge window prune");
  search->add_option("--blue-bound", s_blue_bound,
                     "precomputed z((m,n),K_{3,3}) upper bound for the edge window");
  search->add_flag("--force", s_cfg.ignore_scale_guard, "override the scale guard");

  int z_m = 0, z_n = 0, z_t = 0;
  bool z_force = false;
  std::optional<std::string> z_out;
  auto* zara = app.add_subcommand("zarankiewicz", "compute z((m,n), K_{t,t}) exactly");
  zara->add_option("--m", z_m, "rows")->required();
  zara->add_option("--n", z_n, "columns")->required();
  zara->add_option("--t", z_t, "forbidden K_{t,t}")->required();
  zara->add_option("--witness", z_out, "write an extremal graph here");
  zara->add_flag("--force", z_force, "override the scale guard");

  int b_m = 0, b_n_max = 20;
  biramsey::SearchConfig b_cfg;
  auto* brm_cmd = app.add_subcommand("brm", "compute BR_m(K_{2,2}, K_{3,3})");
  brm_cmd->add_option("--m", b_m, "rows")->required();
  brm_cmd->add_option("--n-max", b_n_max, "largest n to scan (default 20)");
  brm_cmd->add_option("--threads", b_cfg.parallel_width, "branch-parallel width")
      ->check(CLI::PositiveNumber);
  brm_cmd->add_flag("--force", b_cfg.ignore_scale_guard, "override the scale guard");

  std::string f_name;
  std::optional<std::string> f_out;
  auto* fixtures = app.add_subcommand("fixtures", "bundled extremal coloring utilities");
  auto* emit = fixtures->add_subcommand("emit", "emit a fixture as witness JSON");
  emit->add_option("name", f_name, "figure1 | figure2")->required();
  emit->add_option("-o,--output", f_out, "output file (default stdout)");
  fixtures->require_subcommand(1);

  int c_m = 0, c_n = 0;
  std::string c_out;
  bool c_sym = false;
  auto* enc = app.add_subcommand("encode-cnf", "emit the DIMACS CNF encoding");
  enc->add_option("--m", c_m, "rows")->required();
  enc->add_option("--n", c_n, "columns")->required();
  enc->add_option("-o,--output", c_out, "output .cnf file")->required();
  enc->add_flag("--symmetry", c_sym, "add lexicographic column-ordering clauses");

  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();
  emit->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : exit_usage;
  }

  try {
    if (*verify) return cmd_verify(verify_path, mode);
    if (*search) {
      s_cfg.use_lemma1_prune = !s_no_lemma1;
      s_cfg.use_edge_window_prune = !s_no_window;
      if (search->count("--blue-bound")) s_cfg.zarankiewicz_blue_bound = s_blue_bound;
      return cmd_search(s_m, s_n, s_cfg, s_out, mode);
    }
    if (*zara) return cmd_zarankiewicz(z_m, z_n, z_t, z_force, z_out, mode);
    if (*brm_cmd) return cmd_brm(b_m, b_n_max, b_cfg, mode);
    if (*fixtures) return cmd_fixtures_emit(f_name, f_out, mode);
    if (*enc) return cmd_encode_cnf(c_m, c_n, c_out, c_sym, mode);
  } catch (const biramsey::ScaleGuardError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const biramsey::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  }
  return exit_usage;
}
