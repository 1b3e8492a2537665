// Command line front end: decompositions, cutsets, cutset sequences, the
// cover reduction in both directions, a layered-network generator, and a
// benchmark runner. Exit codes: 0 ok, 1 verification failure, 2 bad usage or
// unreadable/invalid input.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wcutset/wcutset.hpp"

namespace {

using nlohmann::json;
using namespace wcutset;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Edge-list files start with an 'n' header (or comments); anything else is
// treated as UAI.
bool looks_like_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    if (ls >> tok) return tok == "n";
  }
  return false;
}

Graph load_graph(const std::string& path, const std::string& format) {
  std::string text = read_file(path);
  bool edge_list = format == "graph" ||
                   (format == "auto" && looks_like_edge_list(text));
  if (edge_list) return parse_graph(text);
  return moralize(parse_uai(text));
}

const std::map<std::string, CutsetAlgorithm> kAlgorithms = {
    {"gwc", CutsetAlgorithm::Gwc},   {"gwca", CutsetAlgorithm::Gwca},
    {"gwcm", CutsetAlgorithm::Gwcm}, {"gwcd", CutsetAlgorithm::Gwcd},
    {"mga", CutsetAlgorithm::Mga},   {"dgr", CutsetAlgorithm::Dgr},
    {"exact", CutsetAlgorithm::Exact}};

const std::map<std::string, CostModel> kCostModels = {
    {"unit", CostModel::Unit},
    {"logdom", CostModel::LogDomain},
    {"dom", CostModel::Domain}};

void print_decomposition(const TreeDecomposition& td) {
  std::cout << "width " << td.width << "\n";
  std::cout << "clusters " << td.clusters.size() << "\n";
  for (size_t i = 0; i < td.clusters.size(); ++i) {
    std::cout << "cluster " << i << ":";
    for (NodeId v : td.clusters[i]) std::cout << ' ' << v;
    std::cout << "\n";
  }
  for (auto [a, b] : td.tree_edges)
    std::cout << "tree-edge " << a << " " << b << "\n";
}

int cmd_decompose(const std::string& path, const std::string& format) {
  Graph g = load_graph(path, format);
  TreeDecomposition td = build_decomposition(g, min_fill_order(g));
  std::cout << "nodes " << g.node_count() << "\n";
  std::cout << "edges " << g.edge_count() << "\n";
  print_decomposition(td);
  return 0;
}

int cmd_cutset(const std::string& path, const std::string& format, int w,
               CutsetAlgorithm alg, CostModel cm) {
  Graph g = load_graph(path, format);
  Cutset c = find_wcutset(g, alg, w, cm);
  std::cout << "algorithm " << algorithm_name(alg) << "\n";
  std::cout << "w " << w << "\n";
  std::cout << "cost-model " << cost_model_name(cm) << "\n";
  std::cout << "size " << c.size() << "\n";
  std::cout << "cost " << detail::format_double(c.cost) << "\n";
  std::cout << "members";
  for (NodeId v : c.members) std::cout << ' ' << v;
  std::cout << "\n";
  // same per-algorithm contract as the benchmark runner: the no-rebuild
  // loop certifies the clusters of the starting decomposition, the exact
  // oracle certifies true treewidth, the rest leave a residual whose
  // fresh elimination fits by construction
  bool ok;
  switch (alg) {
    case CutsetAlgorithm::Gwc:
      ok = verify_wcutset_td(build_decomposition(g, min_fill_order(g)),
                             c.members, w);
      break;
    case CutsetAlgorithm::Exact:
      ok = verify_wcutset_graph(g, c.members, w, VerifyMode::Exact);
      break;
    default:
      ok = verify_wcutset_graph(g, c.members, w, VerifyMode::Heuristic);
      break;
  }
  std::cout << "verified " << (ok ? "yes" : "NO") << "\n";
  return ok ? 0 : 1;
}

int cmd_sequence(const std::string& path, const std::string& format,
                 CutsetAlgorithm alg, CostModel cm, int space_bound) {
  Graph g = load_graph(path, format);
  CutsetSequence seq = cutset_sequence(g, alg, cm);
  auto profile = f_profile(seq);
  std::cout << "algorithm " << algorithm_name(alg) << "\n";
  std::cout << "w size f\n";
  for (size_t i = 0; i < seq.entries.size(); ++i) {
    std::cout << seq.entries[i].w << " " << seq.entries[i].cutset.size() << " "
              << seq.entries[i].f << (profile[i].plateau_with_next ? " =" : "")
              << "\n";
  }
  if (space_bound > 0)
    std::cout << "recommended-w " << recommend_w(seq, space_bound) << "\n";
  return 0;
}

int cmd_reduce_to_smc(const std::string& path, const std::string& format,
                      int w, CostModel cm) {
  Graph g = load_graph(path, format);
  TreeDecomposition td = build_decomposition(g, min_fill_order(g));
  SMCInstance inst = td_to_smc(td, w, g, cm);
  std::cout << write_smc(inst);
  return 0;
}

int cmd_reduce_from_smc(const std::string& path) {
  SMCInstance inst = parse_smc(read_file(path));
  AugmentedDecomposition aug = smc_to_augmented_td(inst);
  std::cout << "w " << aug.w << "\n";
  print_decomposition(aug.td);
  for (size_t i = 0; i < aug.cluster_dummies.size(); ++i) {
    std::cout << "dummies " << i << " (element " << aug.cluster_element[i]
              << "):";
    for (NodeId d : aug.cluster_dummies[i]) std::cout << ' ' << d;
    std::cout << "\n";
  }
  return 0;
}

int cmd_gen(const LayeredNetSpec& spec, const std::string& emit) {
  BayesNetStructure bn = gen_layered(spec);
  if (emit == "uai")
    std::cout << write_uai(bn);
  else
    std::cout << write_graph(moralize(bn));
  return 0;
}

BenchNetwork parse_bench_network(const json& j, const std::string& base_dir) {
  BenchNetwork net;
  net.name = j.at("name").get<std::string>();
  std::string type = j.at("type").get<std::string>();
  if (type == "layered") {
    net.kind = BenchNetwork::Kind::Layered;
    net.layered.layers = j.at("layers").get<int>();
    net.layered.nodes_per_layer = j.at("per_layer").get<int>();
    net.layered.parents_per_node = j.at("parents").get<int>();
    net.layered.domain_size = j.value("domain", 2);
    net.layered.seed = j.value("seed", 0ULL);
    net.instances = j.value("instances", 1);
  } else if (type == "graph" || type == "uai") {
    net.kind = type == "graph" ? BenchNetwork::Kind::GraphFile
                               : BenchNetwork::Kind::UaiFile;
    std::string path = j.at("path").get<std::string>();
    if (!path.empty() && path[0] != '/' && !base_dir.empty())
      path = base_dir + "/" + path;
    net.path = path;
  } else {
    throw std::invalid_argument("unknown network type " + type);
  }
  return net;
}

int cmd_bench(const std::string& config_path) {
  json cfg;
  try {
    cfg = json::parse(read_file(config_path));
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(config_path + ": " + e.what());
  }
  std::string base_dir;
  size_t slash = config_path.find_last_of('/');
  if (slash != std::string::npos) base_dir = config_path.substr(0, slash);

  CostModel cm = CostModel::Unit;
  if (cfg.contains("cost")) {
    auto it = kCostModels.find(cfg["cost"].get<std::string>());
    if (it == kCostModels.end())
      throw std::invalid_argument("unknown cost model in config");
    cm = it->second;
  }
  int w_min = cfg.value("w_min", 1);
  int w_max = cfg.value("w_max", w_min);

  std::vector<CutsetAlgorithm> algorithms;
  for (const auto& a : cfg.at("algorithms")) {
    auto it = kAlgorithms.find(a.get<std::string>());
    if (it == kAlgorithms.end())
      throw std::invalid_argument("unknown algorithm in config");
    algorithms.push_back(it->second);
  }
  std::vector<BenchNetwork> networks;
  for (const auto& n : cfg.at("networks"))
    networks.push_back(parse_bench_network(n, base_dir));

  BenchReport report = run_benchmark(networks, algorithms, w_min, w_max, cm);

  if (cfg.contains("out_prefix")) {
    std::string prefix = cfg["out_prefix"].get<std::string>();
    if (!prefix.empty() && prefix[0] != '/' && !base_dir.empty())
      prefix = base_dir + "/" + prefix;
    auto save = [](const std::string& path, const std::string& content) {
      std::ofstream out(path, std::ios::binary);
      if (!out) throw std::invalid_argument("cannot write " + path);
      out << content;
      std::cout << "wrote " << path << "\n";
    };
    save(prefix + "_summary.txt", render_summary_text(report));
    save(prefix + "_summary.csv", render_summary_csv(report));
    save(prefix + "_fprofile.txt", render_fprofile_text(report));
    save(prefix + "_fprofile.csv", render_fprofile_csv(report));
    save(prefix + "_cells.csv", render_cells_csv(report));
  } else {
    std::cout << "== summary ==\n" << render_summary_text(report);
    std::cout << "\n== f profile ==\n" << render_fprofile_text(report);
    std::cout << "\n== cells ==\n" << render_cells_csv(report);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"minimal w-cutsets of graphical models"};
  app.require_subcommand(1);

  std::string path, format = "auto", emit = "uai", config;
  int w = 1, space_bound = 0;
  std::string alg_name = "gwc", cost_name = "unit";
  LayeredNetSpec spec;

  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("input", path, "graph or UAI file")->required();
    cmd->add_option("--format", format, "input format: auto, graph, uai")
        ->check(CLI::IsMember({"auto", "graph", "uai"}));
  };

  auto* decompose = app.add_subcommand("decompose", "min-fill tree decomposition");
  add_input(decompose);

  auto* cutset = app.add_subcommand("cutset", "find a w-cutset");
  add_input(cutset);
  cutset->add_option("--w", w, "target width")->required();
  cutset->add_option("--alg", alg_name, "gwc, gwca, gwcm, gwcd, mga, dgr, exact")
      ->check(CLI::IsMember({"gwc", "gwca", "gwcm", "gwcd", "mga", "dgr", "exact"}));
  cutset->add_option("--cost", cost_name, "unit, logdom, dom")
      ->check(CLI::IsMember({"unit", "logdom", "dom"}));

  auto* sequence = app.add_subcommand("sequence", "w-cutset sequence and f profile");
  add_input(sequence);
  sequence->add_option("--alg", alg_name, "cutset algorithm")
      ->check(CLI::IsMember({"gwc", "gwca", "gwcm", "gwcd", "mga", "dgr", "exact"}));
  sequence->add_option("--cost", cost_name, "unit, logdom, dom")
      ->check(CLI::IsMember({"unit", "logdom", "dom"}));
  sequence->add_option("--space-bound", space_bound, "largest affordable w");

  auto* reduce = app.add_subcommand("reduce", "cover reduction");
  reduce->require_subcommand(1);
  auto* to_smc = reduce->add_subcommand("to-smc", "decomposition to cover instance");
  add_input(to_smc);
  to_smc->add_option("--w", w, "target width")->required();
  to_smc->add_option("--cost", cost_name, "unit, logdom, dom")
      ->check(CLI::IsMember({"unit", "logdom", "dom"}));
  auto* from_smc = reduce->add_subcommand("from-smc", "cover instance to star decomposition");
  from_smc->add_option("input", config, "cover instance file")->required();

  auto* gen = app.add_subcommand("gen", "random layered network");
  gen->add_option("--layers", spec.layers, "layer count")->required();
  gen->add_option("--per-layer", spec.nodes_per_layer, "nodes per layer")->required();
  gen->add_option("--parents", spec.parents_per_node, "parents per non-root node")
      ->required();
  gen->add_option("--domain", spec.domain_size, "domain size of every variable");
  gen->add_option("--seed", spec.seed, "generator seed");
  gen->add_option("--emit", emit, "uai (default) or graph (moralized edge list)")
      ->check(CLI::IsMember({"uai", "graph"}));

  auto* bench = app.add_subcommand("bench", "run a benchmark config");
  bench->add_option("config", config, "JSON config file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (decompose->parsed()) return cmd_decompose(path, format);
    if (cutset->parsed())
      return cmd_cutset(path, format, w, kAlgorithms.at(alg_name),
                        kCostModels.at(cost_name));
    if (sequence->parsed())
      return cmd_sequence(path, format, kAlgorithms.at(alg_name),
                          kCostModels.at(cost_name), space_bound);
    if (reduce->parsed()) {
      if (to_smc->parsed())
        return cmd_reduce_to_smc(path, format, w, kCostModels.at(cost_name));
      return cmd_reduce_from_smc(config);
    }
    if (gen->parsed()) return cmd_gen(spec, emit);
    if (bench->parsed()) return cmd_bench(config);
  } catch (const VerificationError& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return 1;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const CapacityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
