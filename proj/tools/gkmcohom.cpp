// Command-line front end: analysis, generator extraction, products,
// trimming, connectivity and the verification suite for plane-embedded
// graphs.  All numeric output is exact (rational strings).
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gkm/cohomology.hpp"
#include "gkm/embedded_graph.hpp"
#include "gkm/errors.hpp"
#include "gkm/profile.hpp"
#include "gkm/structure.hpp"
#include "gkm/verify.hpp"
#include "json.hpp"

using namespace gkm;
using nlohmann::json;

namespace {

std::string read_input(const std::string& path) {
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream f(path);
    if (!f) throw InputError(InputError::Kind::BadInput, "cannot open " + path);
    ss << f.rdbuf();
  }
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text << "\n";
    return;
  }
  std::ofstream f(path);
  if (!f) throw InputError(InputError::Kind::BadInput, "cannot write " + path);
  f << text << "\n";
}

EmbeddedGraph load_graph(const std::string& path, bool slopes_unchecked) {
  return EmbeddedGraph::from_json(read_input(path), slopes_unchecked);
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, ',')) parts.push_back(cur);
  return parts;
}

std::pair<Rat, Rat> parse_xi(const std::string& s) {
  const std::vector<std::string> parts = split_commas(s);
  if (parts.size() != 2)
    throw InputError(InputError::Kind::BadInput, "--xi expects \"p,q\"");
  try {
    return {Rat::parse(parts[0]), Rat::parse(parts[1])};
  } catch (const std::exception& e) {
    throw InputError(InputError::Kind::BadInput, std::string("--xi: ") + e.what());
  }
}

std::vector<int> parse_ordering(const std::string& s) {
  std::vector<int> out;
  for (const std::string& p : split_commas(s)) {
    try {
      out.push_back(std::stoi(p));
    } catch (const std::exception&) {
      throw InputError(InputError::Kind::BadInput, "--ordering expects integers");
    }
  }
  return out;
}

template <typename T>
std::string joined(const std::vector<T>& v) {
  std::ostringstream ss;
  for (std::size_t i = 0; i < v.size(); ++i) ss << (i ? " " : "") << v[i];
  return ss.str();
}

int cmd_analyze(const std::string& path, const std::string& format, bool slopes_unchecked,
                const std::string& xi_text, const std::string& ordering_text) {
  const EmbeddedGraph g = load_graph(path, slopes_unchecked);
  const CharProfile p = char_profile(g);
  std::optional<std::pair<Rat, Rat>> xi;
  if (!xi_text.empty()) xi = parse_xi(xi_text);
  std::optional<BettiData> betti;
  if (g.has_coordinates()) betti = betti_generic(g, xi);
  const OrderingData ord =
      ordering_indices(g, ordering_text.empty() ? std::vector<int>{} : parse_ordering(ordering_text));

  if (format == "json") {
    json out;
    out["m"] = g.vertex_count();
    out["edges"] = g.edge_count();
    out["profile"] = json::parse(p.to_json());
    std::vector<long> dims;
    for (int k = 0; k <= p.K + 1; ++k) dims.push_back(p.dim_hk(k));
    out["dim"] = dims;
    if (betti) {
      out["beta"] = betti->beta;
      out["sigma"] = betti->sigma;
      out["xi"] = {betti->xi.first.str(), betti->xi.second.str()};
      out["beta_direction_independent"] = betti->regular;
    }
    out["mu"] = ord.mu;
    out["b"] = ord.b;
    std::cout << out.dump() << "\n";
    return 0;
  }

  std::cout << "m = " << g.vertex_count() << ", |E| = " << g.edge_count()
            << ", pi0 = " << p.pi0 << ", K = " << p.K << "\n";
  std::vector<long> dims;
  for (int k = 0; k <= p.K + 1; ++k) dims.push_back(p.dim_hk(k));
  std::cout << "r    = " << joined(p.r) << "\n";
  std::cout << "s    = " << joined(std::vector<long>(p.s.begin() + 1, p.s.end())) << "\n";
  std::cout << "c    = " << joined(p.c) << "\n";
  std::cout << "dim  = " << joined(dims) << "\n";
  if (betti) {
    std::cout << "beta = " << joined(betti->beta) << "  (xi = " << betti->xi.first.str() << ","
              << betti->xi.second.str() << ")\n";
  } else {
    std::cout << "beta = (needs coordinates)\n";
  }
  std::cout << "mu   = " << joined(ord.mu) << "\n";
  std::cout << "b    = " << joined(ord.b) << "\n";
  return 0;
}

int cmd_generators(const std::string& path, const std::string& format, bool slopes_unchecked) {
  const EmbeddedGraph g = load_graph(path, slopes_unchecked);
  const GeneratorSet gens = module_generators(g);
  if (format == "json") {
    json out = json::array();
    for (const auto& [degree, element] : gens.generators)
      out.push_back({{"degree", degree}, {"parts", json::parse(element.to_json())}});
    std::cout << out.dump() << "\n";
    return 0;
  }
  for (const auto& [degree, element] : gens.generators) {
    std::cout << "degree " << degree << ": ";
    for (std::size_t i = 0; i < element.parts.size(); ++i)
      std::cout << (i ? " | " : "") << element.parts[i].str();
    std::cout << "\n";
  }
  return 0;
}

int cmd_product(const std::string& path1, const std::string& path2, const std::string& a_text,
                const std::string& b_text, const std::string& out_path) {
  const EmbeddedGraph g1 = EmbeddedGraph::from_json(read_input(path1));
  const EmbeddedGraph g2 = EmbeddedGraph::from_json(read_input(path2));
  if (a_text.empty() != b_text.empty())
    throw InputError(InputError::Kind::BadInput, "give both --a and --b, or neither");
  EmbeddedGraph prod;
  if (a_text.empty()) {
    const GraphProduct found = EmbeddedGraph::cartesian_product_auto(g1, g2);
    std::cerr << "placement weights: a = " << found.a.str() << ", b = " << found.b.str() << "\n";
    prod = found.graph;
  } else {
    prod = EmbeddedGraph::cartesian_product(g1, g2, Rat::parse(a_text), Rat::parse(b_text));
  }
  write_output(out_path, prod.to_json());
  return 0;
}

int cmd_trim(const std::string& path, int k, const std::string& order, bool slopes_unchecked,
             const std::string& out_path) {
  const EmbeddedGraph g = load_graph(path, slopes_unchecked);
  const TrimOrder ord = order == "high" ? TrimOrder::HighestFirst : TrimOrder::LowestFirst;
  const TrimResult t = trim(g, k, ord);
  json kept{{"kept_vertices", t.kept}};
  json edges = json::array();
  for (const Edge& e : t.kept_edges) edges.push_back({e.first, e.second});
  kept["kept_edges"] = edges;
  std::cerr << kept.dump() << "\n";
  write_output(out_path, t.graph.to_json());
  return 0;
}

int cmd_connectivity(const std::string& path, bool slopes_unchecked) {
  const EmbeddedGraph g = load_graph(path, slopes_unchecked);
  json out;
  out["edge_cut"] = json::parse(edge_connectivity(g).to_json());
  out["vertex_cut"] = json::parse(vertex_connectivity(g).to_json());
  std::cout << out.dump() << "\n";
  return 0;
}

int cmd_verify(bool defaults, bool fixtures_only, int random_instances, int max_m,
               std::uint64_t seed) {
  SuiteSpec spec;
  spec.seed = seed;
  if (defaults) {
    // Library defaults: fixtures plus a moderate random batch.
  } else if (fixtures_only) {
    spec.random_instances = random_instances > 0 ? random_instances : 0;
  } else if (random_instances >= 0) {
    spec.fixtures = false;
    spec.random_instances = random_instances;
  }
  if (max_m > 0) spec.random_max_m = max_m;
  const std::vector<VerifyReport> reports = run_suite(spec);
  for (const VerifyReport& r : reports) std::cout << r.to_json() << "\n";
  return suite_exit_code(reports);
}

int cmd_gen(const std::string& kind, const std::string& arg, std::uint64_t seed, long range,
            long t0, const std::string& out_path) {
  EmbeddedGraph g;
  if (kind == "complete") {
    g = EmbeddedGraph::complete(std::stoi(arg), t0);
  } else if (kind == "cycle") {
    g = EmbeddedGraph::cycle(std::stoi(arg), t0);
  } else if (kind == "path") {
    g = EmbeddedGraph::path(std::stoi(arg), t0);
  } else if (kind == "single-edge") {
    g = EmbeddedGraph::single_edge(t0);
  } else if (kind == "er" || kind == "regular") {
    const std::vector<std::string> parts = split_commas(arg);
    if (parts.size() != 2)
      throw InputError(InputError::Kind::BadInput,
                       "--" + kind + " expects \"m," + (kind == "er" ? "density" : "degree") + "\"");
    RandomGraphSpec rs;
    rs.m = std::stoi(parts[0]);
    rs.coord_range = range;
    if (kind == "er") {
      rs.mode = RandomGraphSpec::EdgeMode::ErdosRenyi;
      rs.density = Rat::parse(parts[1]);
    } else {
      rs.mode = RandomGraphSpec::EdgeMode::Regular;
      rs.degree = std::stoi(parts[1]);
    }
    g = EmbeddedGraph::random_general_position(rs, seed);
  } else {
    throw InputError(InputError::Kind::BadInput, "unknown generator " + kind);
  }
  write_output(out_path, g.to_json());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact rank, generator and connectivity analysis of plane-embedded graphs"};
  app.require_subcommand(1);
  int exit_code = 0;

  // analyze
  auto* analyze = app.add_subcommand("analyze", "profile, per-degree dimensions and index counts");
  std::string an_path, an_format = "table", an_xi, an_ordering;
  bool an_unchecked = false;
  analyze->add_option("file", an_path, "graph JSON file, or - for stdin")->required();
  analyze->add_option("--format", an_format, "json|table")->check(CLI::IsMember({"json", "table"}));
  analyze->add_option("--xi", an_xi, "projection direction \"p,q\" for the downward counts");
  analyze->add_option("--ordering", an_ordering, "vertex permutation for the ordering counts");
  analyze->add_flag("--slopes-unchecked", an_unchecked, "accept slope-only fixture files");
  analyze->callback(
      [&] { exit_code = cmd_analyze(an_path, an_format, an_unchecked, an_xi, an_ordering); });

  // generators
  auto* generators = app.add_subcommand("generators", "free-module generators per degree");
  std::string ge_path, ge_format = "table";
  bool ge_unchecked = false;
  generators->add_option("file", ge_path, "graph JSON file, or - for stdin")->required();
  generators->add_option("--format", ge_format, "json|table")
      ->check(CLI::IsMember({"json", "table"}));
  generators->add_flag("--slopes-unchecked", ge_unchecked, "accept slope-only fixture files");
  generators->callback([&] { exit_code = cmd_generators(ge_path, ge_format, ge_unchecked); });

  // product
  auto* product = app.add_subcommand("product", "cartesian product with placement a*phi1 + b*phi2");
  std::string pr_path1, pr_path2, pr_a, pr_b, pr_out;
  product->add_option("file1", pr_path1)->required();
  product->add_option("file2", pr_path2)->required();
  product->add_option("--a", pr_a, "first placement weight (rational)");
  product->add_option("--b", pr_b, "second placement weight (rational)");
  product->add_option("-o,--output", pr_out, "output file (default stdout)");
  product->callback([&] { exit_code = cmd_product(pr_path1, pr_path2, pr_a, pr_b, pr_out); });

  // trim
  auto* trim_cmd = app.add_subcommand("trim", "drop low-degree vertices and small edge cuts");
  std::string tr_path, tr_order = "low", tr_out;
  int tr_k = 1;
  bool tr_unchecked = false;
  trim_cmd->add_option("file", tr_path)->required();
  trim_cmd->add_option("--k", tr_k, "trim level (>= 1)")->required();
  trim_cmd->add_option("--order", tr_order, "low|high iteration order")
      ->check(CLI::IsMember({"low", "high"}));
  trim_cmd->add_flag("--slopes-unchecked", tr_unchecked, "accept slope-only fixture files");
  trim_cmd->add_option("-o,--output", tr_out, "output file (default stdout)");
  trim_cmd->callback([&] { exit_code = cmd_trim(tr_path, tr_k, tr_order, tr_unchecked, tr_out); });

  // connectivity
  auto* conn = app.add_subcommand("connectivity", "minimum edge and vertex cuts");
  std::string co_path;
  bool co_unchecked = false;
  conn->add_option("file", co_path)->required();
  conn->add_flag("--slopes-unchecked", co_unchecked, "accept slope-only fixture files");
  conn->callback([&] { exit_code = cmd_connectivity(co_path, co_unchecked); });

  // verify
  auto* verify = app.add_subcommand("verify", "run the check suite, one JSON report per line");
  bool ve_default = false, ve_fixtures = false;
  int ve_random = -1, ve_max_m = 0;
  std::uint64_t ve_seed = 1;
  verify->add_flag("--default", ve_default, "fixtures plus the default random batch");
  verify->add_flag("--fixtures", ve_fixtures, "fixture corpus only");
  verify->add_option("--random", ve_random, "number of random instances");
  verify->add_option("--max-m", ve_max_m, "largest random vertex count");
  verify->add_option("--seed", ve_seed, "random seed");
  verify->callback(
      [&] { exit_code = cmd_verify(ve_default, ve_fixtures, ve_random, ve_max_m, ve_seed); });

  // gen
  auto* gen = app.add_subcommand("gen", "emit a graph JSON file");
  std::string gen_complete, gen_cycle, gen_path_arg, gen_single, gen_er, gen_regular, gen_out;
  bool gen_single_flag = false;
  std::uint64_t gen_seed = 1;
  long gen_range = 0, gen_t0 = 1;
  gen->add_option("--complete", gen_complete, "complete graph on m vertices");
  gen->add_option("--cycle", gen_cycle, "cycle on m vertices");
  gen->add_option("--path", gen_path_arg, "path on m vertices");
  gen->add_flag("--single-edge", gen_single_flag, "one edge on two vertices");
  gen->add_option("--er", gen_er, "random graph \"m,density\"");
  gen->add_option("--regular", gen_regular, "random regular graph \"m,degree\"");
  gen->add_option("--seed", gen_seed, "random seed");
  gen->add_option("--range", gen_range, "coordinate range for random placement");
  gen->add_option("--t0", gen_t0,
                  "curve offset for the deterministic families; factors of a "
                  "product need disjoint ranges");
  gen->add_option("-o,--output", gen_out, "output file (default stdout)");
  gen->callback([&] {
    std::vector<std::pair<std::string, std::string>> picked;
    if (!gen_complete.empty()) picked.push_back({"complete", gen_complete});
    if (!gen_cycle.empty()) picked.push_back({"cycle", gen_cycle});
    if (!gen_path_arg.empty()) picked.push_back({"path", gen_path_arg});
    if (gen_single_flag) picked.push_back({"single-edge", ""});
    if (!gen_er.empty()) picked.push_back({"er", gen_er});
    if (!gen_regular.empty()) picked.push_back({"regular", gen_regular});
    if (picked.size() != 1)
      throw InputError(InputError::Kind::BadInput, "gen: pick exactly one generator");
    exit_code = cmd_gen(picked[0].first, picked[0].second, gen_seed, gen_range, gen_t0, gen_out);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const InternalError& e) {
    std::cerr << "internal error (please report): " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
