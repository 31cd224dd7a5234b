// copthrottle: analyze graphs, generate families, run verification suites,
// and play against the exact engine.

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "copthrottle/copthrottle.hpp"

namespace ct = copthrottle;

namespace {

enum Exit { kOk = 0, kInput = 1, kBudget = 2, kVerify = 3 };

struct RunConfig {
  std::string positional;
  std::string input;
  std::string family;
  std::vector<std::string> params;
  std::optional<int> k_max;
  std::uint64_t budget = ct::Budget::kDefaultLimit;
  std::optional<std::uint64_t> seed;
  std::optional<int> count;
  std::optional<int> max_n;
  std::string format = "text";
  std::string as = "robber";
  int cops = 1;
  std::string suite;
};

std::map<std::string, long long> parse_params(const std::vector<std::string>& raw) {
  std::map<std::string, long long> out;
  for (const auto& p : raw) {
    auto eq = p.find('=');
    if (eq == std::string::npos || eq == 0) throw ct::InvalidInput("--param expects key=value, got " + p);
    std::string value = p.substr(eq + 1);
    try {
      std::size_t used = 0;
      out[p.substr(0, eq)] = std::stoll(value, &used);
      if (used != value.size()) throw std::invalid_argument(value);
    } catch (const std::exception&) {
      throw ct::InvalidInput("--param " + p.substr(0, eq) + " is not an integer: " + value);
    }
  }
  return out;
}

ct::Graph family_graph(const std::string& text, const RunConfig& cfg) {
  ct::FamilySpec spec = ct::parse_family_spec(text);
  for (const auto& [k, v] : parse_params(cfg.params)) spec.params[k] = v;
  if (cfg.seed && !spec.params.count("seed")) spec.params["seed"] = static_cast<long long>(*cfg.seed);
  return ct::generate_named(spec);
}

ct::Graph load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ct::InvalidInput("cannot open " + path);
  return ct::read_graph(in, path);
}

// Exactly one of --input, --family, or a positional graph (file path or family spec).
ct::Graph input_graph(const RunConfig& cfg) {
  int sources = !cfg.positional.empty() + !cfg.input.empty() + !cfg.family.empty();
  if (sources != 1) throw ct::InvalidInput("give exactly one input: --input FILE, --family SPEC, or a positional graph");
  if (!cfg.input.empty()) return load_file(cfg.input);
  if (!cfg.family.empty()) return family_graph(cfg.family, cfg);
  if (std::ifstream(cfg.positional).good()) return load_file(cfg.positional);
  return family_graph(cfg.positional, cfg);
}

void print_graph(const ct::Graph& g, const std::string& format) {
  if (format == "json" || format == "text") std::cout << ct::graph_to_json(g).dump() << "\n";
  else if (format == "g6" || format == "graph6") std::cout << ct::to_graph6(g) << "\n";
  else if (format == "edges") std::cout << ct::to_edge_list(g);
  else if (format == "dot") std::cout << ct::to_dot(g);
  else throw ct::InvalidInput("unknown format for generate: " + format);
}

int cmd_analyze(const RunConfig& cfg) {
  const ct::Budget budget{cfg.budget};
  ct::Graph g = input_graph(cfg);
  if (cfg.format == "dot") {
    std::cout << ct::to_dot(g);
    return kOk;
  }
  ct::ThrottlingReport rep = ct::throttling_report(g, cfg.k_max, budget);
  const bool chordal = ct::is_chordal(g);
  const bool connected = ct::is_connected(g);
  std::optional<ct::ChordalThrottling> chord;
  if (chordal && connected) chord = ct::chordal_throttling(g, budget);

  if (cfg.format == "csv") {
    std::cout << ct::report_to_csv(rep);
    return kOk;
  }
  if (cfg.format == "json") {
    nlohmann::json j = ct::report_to_json(rep);
    j["graph"] = ct::graph_to_json(g);
    j["chordal"] = chordal;
    if (chord) {
      j["one_plus_radius"] = chord->th_prod;
      if (rep.complete) j["radius_identity_holds"] = chord->th_prod == rep.th_prod;
    }
    std::cout << j.dump(2) << "\n";
    return kOk;
  }
  if (cfg.format != "text") throw ct::InvalidInput("unknown format for analyze: " + cfg.format);
  std::cout << "graph " << (g.name().empty() ? "<unnamed>" : g.name()) << ": n=" << g.order() << " m=" << g.size()
            << "\n";
  std::cout << "k\tcapt_k\tk+capt\tk(1+capt)\twitness\n";
  for (const auto& r : rep.rows)
    std::cout << r.k << "\t" << r.capt.to_string() << "\t" << r.sum.to_string() << "\t" << r.prod.to_string() << "\t{"
              << r.witness.to_string() << "}\n";
  auto list = [](const std::vector<int>& ks) {
    std::string s;
    for (int k : ks) s += " " + std::to_string(k);
    return s;
  };
  if (rep.cop_number) std::cout << "c(G) = " << rep.cop_number << "\n";
  else std::cout << "c(G) > " << rep.rows.size() << " (sweep cut short)\n";
  if (rep.th_sum) {
    std::cout << (rep.complete ? "th_c = " : "th_c <= ") << rep.th_sum << " (k =" << list(rep.th_sum_ks) << ")\n";
    std::cout << (rep.complete ? "th_c^x = " : "th_c^x <= ") << rep.th_prod << " (k =" << list(rep.th_prod_ks) << ")\n";
  }
  std::cout << "chordal: " << (chordal ? "yes" : "no") << "\n";
  if (chord) {
    std::cout << "1+rad(G) = " << chord->th_prod;
    if (rep.complete) std::cout << (chord->th_prod == rep.th_prod ? ", equals th_c^x" : ", DIFFERS from th_c^x");
    std::cout << "\n";
  }
  return kOk;
}

int cmd_generate(const RunConfig& cfg) {
  std::string spec = !cfg.family.empty() ? cfg.family : cfg.positional;
  if (spec.empty()) throw ct::InvalidInput("generate needs --family SPEC");
  const int count = cfg.count.value_or(1);
  if (count < 1) throw ct::InvalidInput("--count must be positive");
  if (count == 1) {
    print_graph(family_graph(spec, cfg), cfg.format);
    return kOk;
  }
  // consecutive seeds starting at --seed
  RunConfig each = cfg;
  const std::uint64_t base = cfg.seed.value_or(0);
  nlohmann::json all = nlohmann::json::array();
  for (int i = 0; i < count; ++i) {
    each.seed = base + static_cast<std::uint64_t>(i);
    ct::Graph g = family_graph(spec, each);
    if (cfg.format == "json" || cfg.format == "text") all.push_back(ct::graph_to_json(g));
    else print_graph(g, cfg.format);
  }
  if (!all.empty()) std::cout << all.dump() << "\n";
  return kOk;
}

int cmd_verify(const RunConfig& cfg) {
  std::string name = !cfg.suite.empty() ? cfg.suite : cfg.positional;
  if (name.empty()) throw ct::InvalidInput("verify needs a suite name (or 'all')");
  ct::SuiteOptions opt;
  opt.count = cfg.count;
  opt.max_n = cfg.max_n;
  opt.seed = cfg.seed.value_or(42);
  opt.budget = ct::Budget{cfg.budget};
  opt.params = parse_params(cfg.params);
  opt.corpus_file = cfg.input;
  std::vector<std::string> names;
  if (name == "all")
    for (const auto& [n, _] : ct::suites()) names.push_back(n);
  else names.push_back(name);
  bool ok = true;
  nlohmann::json out = nlohmann::json::array();
  for (const auto& n : names) {
    ct::SuiteResult r = ct::run_suite(n, opt);
    ok = ok && r.ok();
    if (cfg.format == "json") {
      out.push_back(ct::suite_to_json(r));
      continue;
    }
    std::cout << ct::summary_line(r) << "\n";
    for (const auto& note : r.notes) std::cout << "  note: " << note << "\n";
    if (r.counterexample)
      std::cout << "  first failure: " << r.failure << "\n  counterexample: " << r.counterexample->dump() << "\n";
  }
  if (cfg.format == "json") std::cout << out.dump(2) << "\n";
  return ok ? kOk : kVerify;
}

int cmd_play(const RunConfig& cfg) {
  ct::Graph g = input_graph(cfg);
  if (cfg.cops < 1) throw ct::InvalidInput("--cops must be positive");
  ct::HumanSide side;
  if (cfg.as == "robber") side = ct::HumanSide::robber;
  else if (cfg.as == "cops") side = ct::HumanSide::cops;
  else throw ct::InvalidInput("--as must be robber or cops");
  ct::SolvedGame table = ct::solve_game(g, cfg.cops, ct::Budget{cfg.budget});
  ct::play_session(table, side, std::cin, std::cout);
  return kOk;
}

void add_input_flags(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("graph", cfg.positional, "graph file or family spec such as path(5) or spider:legs=3,len=2");
  sub->add_option("--input", cfg.input, "graph file (JSON, graph6, or edge list)");
  sub->add_option("--family", cfg.family, "family spec, e.g. m_ell:l=3");
  sub->add_option("--param", cfg.params, "family parameter key=value (repeatable)");
  sub->add_option("--seed", cfg.seed, "seed for random families");
  sub->add_option("--budget", cfg.budget, "work budget in elementary steps")->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cops and Robbers throttling solver and verification harness"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* analyze = app.add_subcommand("analyze", "throttling table, c(G), th_c, th_c^x, chordal checks");
  add_input_flags(analyze, cfg);
  analyze->add_option("--k-max", cfg.k_max, "largest cop count to solve")->check(CLI::PositiveNumber);
  analyze->add_option("--format", cfg.format, "text | json | csv | dot");

  auto* generate = app.add_subcommand("generate", "emit a graph from a named family");
  generate->add_option("family_spec", cfg.positional, "family spec");
  generate->add_option("--family", cfg.family, "family spec");
  generate->add_option("--param", cfg.params, "family parameter key=value (repeatable)");
  generate->add_option("--seed", cfg.seed, "seed for random families");
  generate->add_option("--count", cfg.count, "number of graphs (consecutive seeds)");
  generate->add_option("--format", cfg.format, "json | g6 | edges | dot");

  auto* verify = app.add_subcommand("verify", "run a verification suite ('all' for every suite)");
  verify->add_option("suite_name", cfg.positional, "suite");
  verify->add_option("--suite", cfg.suite, "suite");
  verify->add_option("--count", cfg.count, "random corpus size");
  verify->add_option("--max-n", cfg.max_n, "largest random graph order");
  verify->add_option("--seed", cfg.seed, "corpus seed (default 42)");
  verify->add_option("--param", cfg.params, "suite parameter key=value (repeatable)");
  verify->add_option("--input", cfg.input, "graph6 corpus file (outerplanar suite)");
  verify->add_option("--budget", cfg.budget, "work budget per exhaustive call")->check(CLI::PositiveNumber);
  verify->add_option("--format", cfg.format, "text | json");

  auto* play = app.add_subcommand("play", "play against the optimal engine on stdin/stdout");
  add_input_flags(play, cfg);
  play->add_option("--cops", cfg.cops, "number of cops");
  play->add_option("--as", cfg.as, "your side: robber | cops");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kInput;
  }

  try {
    if (*analyze) return cmd_analyze(cfg);
    if (*generate) return cmd_generate(cfg);
    if (*verify) return cmd_verify(cfg);
    if (*play) return cmd_play(cfg);
  } catch (const ct::BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const ct::InvalidInput& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kInput;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kInput;
  }
  return kOk;
}
