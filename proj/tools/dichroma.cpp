// Command-line front end: reads a graph or matroid, prints its invariants,
// and runs the identity suite.
//
// Exit codes: 0 success, 1 identity failure, 2 input error, 3 size cap.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "dichroma/dichroma.hpp"

namespace {

using namespace dichroma;

enum ExitCode { kOk = 0, kIdentityFailure = 1, kInputError = 2, kSizeCap = 3 };

struct RunConfig {
  std::string command;
  std::string input_path;
  std::string inline_spec;
  std::string format;
  bool json = false;
  bool table = false;
  std::string basis = "q";
  int max_n = 5;
  int max_m = 7;
  int homology_m = 6;
  int uniform_n = 6;
};

// Y(1-p, t) of the 5-vertex example graph, rows t^0..t^4, columns p^0..p^7.
const std::vector<std::vector<int>> kExampleYP = {
    {0, 0, 0, 0, 19, -38, 26, -6},
    {0, 0, 0, 29, -100, 128, -72, 15},
    {0, 0, 20, -94, 176, -164, 76, -14},
    {0, 7, -41, 100, -130, 95, -37, 6},
    {1, -7, 21, -35, 35, -21, 7, -1},
};

/// "max_n=5,max_m=7,homology_m=6,uniform_n=6"; unknown keys are input errors.
void apply_caps_env(RunConfig& cfg) {
  const char* env = std::getenv("DICHROMA_CAPS");
  if (env == nullptr) return;
  std::stringstream ss(env);
  for (std::string item; std::getline(ss, item, ',');) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw ParseError("DICHROMA_CAPS: expected key=value, got '" + item + "'");
    const std::string key = item.substr(0, eq);
    int value = 0;
    try {
      value = std::stoi(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw ParseError("DICHROMA_CAPS: bad value in '" + item + "'");
    }
    if (key == "max_n") cfg.max_n = value;
    else if (key == "max_m") cfg.max_m = value;
    else if (key == "homology_m") cfg.homology_m = value;
    else if (key == "uniform_n") cfg.uniform_n = value;
    else throw ParseError("DICHROMA_CAPS: unknown key '" + key + "'");
  }
}

std::string read_all(std::istream& in) { return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()}; }

bool has_input(const RunConfig& cfg) { return !cfg.input_path.empty() || !cfg.inline_spec.empty(); }

LoadedInput load(const RunConfig& cfg) {
  std::string text;
  if (!cfg.inline_spec.empty()) {
    text = cfg.inline_spec;
  } else if (cfg.input_path == "-") {
    text = read_all(std::cin);
  } else if (!cfg.input_path.empty()) {
    std::ifstream in(cfg.input_path);
    if (!in) throw ParseError("cannot open '" + cfg.input_path + "'");
    text = read_all(in);
  } else {
    throw ParseError("this command needs --input or --spec");
  }
  return load_input(text, cfg.format);
}

const Multigraph& need_graph(const LoadedInput& in, const std::string& command) {
  if (!in.graph) throw ParseError(command + " needs a graph input");
  return *in.graph;
}

void print_poly(const RunConfig& cfg, const std::string& title, const Poly& p, const char* col, const char* row) {
  if (cfg.json) {
    std::cout << Json{{title, poly_to_json(p, col, row)}}.dump(2) << "\n";
  } else if (cfg.table) {
    std::cout << title << "\n" << render_table(p, col, row);
  } else {
    std::cout << title << " = " << p.to_string(col, row) << "\n";
  }
}

int cmd_invariants(const RunConfig& cfg) {
  const LoadedInput in = load(cfg);
  const InvariantBundle b = compute_invariants(in.matroid);
  if (cfg.json) {
    std::cout << bundle_to_json(b).dump(2) << "\n";
    return kOk;
  }
  std::cout << "m = " << b.m << ", d = " << b.d << ", loops = " << b.loops << "\n";
  auto show = [&](const std::string& title, const Poly& p, const char* col, const char* row) {
    if (cfg.table) std::cout << "\n" << title << "\n" << render_table(p, col, row);
    else std::cout << title << " = " << p.to_string(col, row) << "\n";
  };
  show("T(x,y)", b.tutte, "x", "y");
  if (cfg.basis == "p") show("Y(1-p,t)", b.y_p, "p", "t");
  else show("Y(q,t)", b.y, "q", "t");
  show("Yhat(p,t)", b.yhat, "p", "t");
  return kOk;
}

int cmd_zpoly(const RunConfig& cfg) {
  const LoadedInput in = load(cfg);
  print_poly(cfg, "Z(q,t)", z_deletion_contraction(need_graph(in, "zpoly")), "q", "t");
  return kOk;
}

int cmd_chromatic(const RunConfig& cfg) {
  const LoadedInput in = load(cfg);
  print_poly(cfg, "P(t)", chromatic_polynomial(need_graph(in, "chromatic")), "q", "t");
  return kOk;
}

int cmd_reliability(const RunConfig& cfg) {
  const LoadedInput in = load(cfg);
  const ReliabilityResult r = reliability_polynomial(need_graph(in, "reliability"));
  if (r.warning) std::cerr << "warning: " << *r.warning << "\n";
  print_poly(cfg, "R(q)", r.polynomial, "q", "t");
  return kOk;
}

int cmd_whitney(const RunConfig& cfg) {
  const LoadedInput in = load(cfg);
  const WhitneyTable wt = w_polynomials(in.matroid);
  if (cfg.json) {
    std::cout << whitney_to_json(wt).dump(2) << "\n";
    return kOk;
  }
  std::cout << "d = " << wt.d << ", m = " << wt.m << ", loops = " << wt.loops << "\n";
  for (int i = 0; i < wt.d; ++i) {
    std::cout << "omega^" << i << ":";
    for (const BigInt& v : wt.omega[static_cast<std::size_t>(i)]) std::cout << " " << v;
    std::cout << "   W_" << i << " = " << wt.w_at(i).to_string("p", "t") << "\n";
  }
  return kOk;
}

int cmd_charpoly(const RunConfig& cfg) {
  const LoadedInput in = load(cfg);
  print_poly(cfg, "chi(t)", characteristic_by_closed_sets(in.matroid), "q", "t");
  return kOk;
}

int cmd_homology(const RunConfig& cfg) {
  const LoadedInput in = load(cfg);
  const Matroid& m = in.matroid;
  if (m.rank() < 1) throw OutOfRange("homology needs a matroid of rank at least 1");
  if (m.loop_count() != 0)
    std::cerr << "warning: the matroid has loops; Whitney homology ranks are not compared with Whitney numbers\n";
  std::vector<std::vector<WhitneyHomologyRank>> levels;
  for (int i = 0; i < m.rank(); ++i) levels.push_back(whitney_homology_report(m, i));
  if (cfg.json) {
    std::cout << homology_to_json(m, levels).dump(2) << "\n";
    return kOk;
  }
  for (std::size_t i = 0; i < levels.size(); ++i) {
    std::cout << "level " << i << ":";
    for (const auto& r : levels[i]) std::cout << " " << r.rank;
    std::cout << "\n";
  }
  return kOk;
}

int cmd_verify(const RunConfig& cfg) {
  VerifyOptions options;
  options.homology_max_m = cfg.homology_m;
  std::vector<CorpusEntry> corpus;
  if (has_input(cfg)) {
    LoadedInput in = load(cfg);
    options.homology_max_m = std::max(options.homology_max_m, in.matroid.size());
    corpus.push_back({"input", std::move(in.matroid), std::move(in.graph)});
  } else {
    CorpusCaps caps;
    caps.graphs.max_n = cfg.max_n;
    caps.graphs.max_m = cfg.max_m;
    caps.max_uniform_n = cfg.uniform_n;
    corpus = build_corpus(caps);
  }
  const VerifyReport report = run_identities(corpus, options);
  std::cout << report.render();
  return report.ok() ? kOk : kIdentityFailure;
}

int cmd_search_figure1(const RunConfig& cfg) {
  std::vector<std::vector<BigInt>> rows;
  for (const auto& r : kExampleYP) rows.emplace_back(r.begin(), r.end());
  const Poly target = poly_from_matrix(rows);
  const std::vector<Multigraph> found = search_by_dichromate(5, 7, target);
  Json out = Json::array();
  for (const Multigraph& g : found) {
    const Poly chi = chromatic_polynomial(g);
    if (cfg.json) {
      Json edges = Json::array();
      for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
      out.push_back(Json{{"type", "graph"},
                         {"vertices", g.vertex_count()},
                         {"edges", edges},
                         {"spanning_trees", spanning_tree_count(g)},
                         {"chromatic", second_slot_to_json(chi)}});
    } else {
      std::cout << "match: " << graph_name(g) << "\n"
                << "  spanning trees: " << spanning_tree_count(g) << "\n"
                << "  chromatic polynomial: " << chi.to_string("q", "t") << "\n";
    }
  }
  if (cfg.json) std::cout << out.dump(2) << "\n";
  if (found.empty()) {
    std::cerr << "no connected loopless multigraph with 5 vertices and 7 edges matches the target table\n";
    return kIdentityFailure;
  }
  if (!cfg.json) std::cout << found.size() << " match(es)\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dichromatic polynomials, Whitney numbers and Whitney homology of matroids"};
  app.require_subcommand(1);
  RunConfig cfg;

  struct Command {
    const char* name;
    const char* help;
    int (*run)(const RunConfig&);
  };
  const std::vector<Command> commands = {
      {"invariants", "Tutte polynomial, dichromate Y, Y(1-p,t) and Yhat", cmd_invariants},
      {"zpoly", "Potts partition polynomial Z(q,t) of a graph", cmd_zpoly},
      {"chromatic", "chromatic polynomial of a graph", cmd_chromatic},
      {"reliability", "all-terminal reliability polynomial of a graph", cmd_reliability},
      {"whitney", "Whitney numbers omega and polynomials W_i", cmd_whitney},
      {"charpoly", "characteristic polynomial by closed sets", cmd_charpoly},
      {"homology", "Whitney homology ranks with their contributors", cmd_homology},
      {"verify", "run the identity suite on the input or the built-in corpus", cmd_verify},
      {"search-figure1", "find 5-vertex 7-edge graphs with the reference Y(1-p,t) table", cmd_search_figure1},
  };

  std::optional<int> max_n, max_m;
  for (const Command& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("--input", cfg.input_path, "input file ('-' for stdin)");
    sub->add_option("--spec", cfg.inline_spec, "inline graph text or matroid JSON");
    sub->add_option("--format", cfg.format, "graph|bases|uniform|rank_table")
        ->check(CLI::IsMember({"graph", "bases", "uniform", "rank_table"}));
    auto* json = sub->add_flag("--json", cfg.json, "JSON output");
    auto* table = sub->add_flag("--table", cfg.table, "coefficient table output");
    json->excludes(table);
    sub->add_option("--basis", cfg.basis, "basis for Y: q or p")->check(CLI::IsMember({"q", "p"}));
    sub->add_option("--max-n", max_n, "corpus cap on vertices");
    sub->add_option("--max-m", max_m, "corpus cap on edges");
    sub->callback([&cfg, c] { cfg.command = c.name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    apply_caps_env(cfg);
    if (max_n) cfg.max_n = *max_n;
    if (max_m) cfg.max_m = *max_m;
    if (cfg.max_n < 1 || cfg.max_n > 8 || cfg.max_m < 0 || cfg.max_m > 12)
      throw SizeLimitExceeded("corpus caps must satisfy 1 <= max-n <= 8 and 0 <= max-m <= 12");
    for (const Command& c : commands)
      if (cfg.command == c.name) return c.run(cfg);
    return kInputError;
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const AxiomViolation& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const OutOfRange& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const SizeLimitExceeded& e) {
    std::cerr << "size cap: " << e.what() << "\n";
    return kSizeCap;
  } catch (const Error& e) {
    std::cerr << "identity failure: " << e.what() << "\n";
    return kIdentityFailure;
  }
}
