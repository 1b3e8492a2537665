#pragma once

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "wcutset/cutset.hpp"
#include "wcutset/io.hpp"
#include "wcutset/sequence.hpp"

namespace wcutset {

// A source of benchmark instances: either a generated layered-network family
// (one instance per consecutive seed) or a single file.
struct BenchNetwork {
  enum class Kind { Layered, GraphFile, UaiFile };

  std::string name;
  Kind kind = Kind::Layered;
  LayeredNetSpec layered{};
  int instances = 1;  // layered families only
  std::string path;   // file kinds only
};

struct BenchInstanceNote {
  std::string network;
  int instance = 0;
  std::uint64_t seed = 0;
  int nodes = 0;
  int width = 0;              // min-fill width of the moral/base graph
  std::vector<int> m_by_w;    // max cluster membership of any node, per w
};

struct BenchCell {
  std::string network;
  int instance = 0;
  CutsetAlgorithm alg = CutsetAlgorithm::Gwc;
  int w = 0;
  int size = 0;
  double cost = 0.0;
};

struct BenchReport {
  std::vector<CutsetAlgorithm> algorithms;
  int w_min = 1;
  int w_max = 1;
  CostModel cost_model = CostModel::Unit;
  std::vector<std::string> networks;
  std::vector<BenchInstanceNote> instances;
  std::vector<BenchCell> cells;
};

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline Graph load_bench_graph(const BenchNetwork& net, int instance,
                              std::uint64_t* seed_out) {
  switch (net.kind) {
    case BenchNetwork::Kind::Layered: {
      LayeredNetSpec spec = net.layered;
      spec.seed = net.layered.seed + static_cast<std::uint64_t>(instance);
      if (seed_out) *seed_out = spec.seed;
      return moralize(gen_layered(spec));
    }
    case BenchNetwork::Kind::GraphFile:
      if (seed_out) *seed_out = 0;
      return parse_graph(read_file(net.path));
    case BenchNetwork::Kind::UaiFile:
      if (seed_out) *seed_out = 0;
      return moralize(parse_uai(read_file(net.path)));
  }
  throw std::invalid_argument("unknown network kind");
}

}  // namespace detail

// Runs every algorithm at every w on every instance, in a fixed order, and
// re-verifies each cutset against the residual graph before recording it. A
// failed verification means a bug somewhere, so it aborts the run rather
// than producing a polluted table.
inline BenchReport run_benchmark(const std::vector<BenchNetwork>& networks,
                                 const std::vector<CutsetAlgorithm>& algorithms,
                                 int w_min, int w_max, CostModel cm,
                                 const OracleLimits& lim = {}) {
  if (networks.empty()) throw std::invalid_argument("no networks");
  if (algorithms.empty()) throw std::invalid_argument("no algorithms");
  if (w_min < 1) throw std::invalid_argument("w range must start at 1 or above");
  if (w_max < w_min) throw std::invalid_argument("empty w range");

  BenchReport report;
  report.algorithms = algorithms;
  report.w_min = w_min;
  report.w_max = w_max;
  report.cost_model = cm;

  for (const auto& net : networks) {
    if (net.name.empty()) throw std::invalid_argument("network without a name");
    for (const auto& seen : report.networks)
      if (seen == net.name)
        throw std::invalid_argument("duplicate network name " + net.name);
    report.networks.push_back(net.name);
    const int instances =
        net.kind == BenchNetwork::Kind::Layered ? net.instances : 1;
    if (instances < 1) throw std::invalid_argument("need at least one instance");

    for (int inst = 0; inst < instances; ++inst) {
      std::uint64_t seed = 0;
      Graph g = detail::load_bench_graph(net, inst, &seed);

      TreeDecomposition td = build_decomposition(g, min_fill_order(g));
      BenchInstanceNote note;
      note.network = net.name;
      note.instance = inst;
      note.seed = seed;
      note.nodes = g.node_count();
      note.width = td.width;
      for (int w = w_min; w <= w_max; ++w) {
        std::vector<int> membership(static_cast<size_t>(g.universe()), 0);
        for (const auto& cl : td.clusters)
          if (static_cast<int>(cl.size()) > w + 1)
            for (NodeId v : cl) ++membership[static_cast<size_t>(v)];
        int m = 0;
        for (int c : membership) m = std::max(m, c);
        note.m_by_w.push_back(m);
      }
      report.instances.push_back(std::move(note));

      for (CutsetAlgorithm alg : algorithms) {
        for (int w = w_min; w <= w_max; ++w) {
          Cutset c;
          switch (alg) {
            case CutsetAlgorithm::Gwc:
            case CutsetAlgorithm::Gwca:
            case CutsetAlgorithm::Gwcm:
            case CutsetAlgorithm::Gwcd:
              c = gwc(td, g, w, cm, alg);
              break;
            default:
              c = find_wcutset(g, alg, w, cm, lim);
              break;
          }
          // each result is checked against the guarantee its algorithm
          // actually makes: the no-rebuild loop certifies the clusters it
          // maintained (a fresh elimination of the residual graph can land
          // above w even when those all fit), the exact oracle certifies
          // true treewidth, and the rest leave a residual whose fresh
          // elimination fits by construction
          bool ok;
          switch (alg) {
            case CutsetAlgorithm::Gwc:
              ok = verify_wcutset_td(td, c.members, w);
              break;
            case CutsetAlgorithm::Exact:
              ok = verify_wcutset_graph(g, c.members, w, VerifyMode::Exact, lim);
              break;
            default:
              ok = verify_wcutset_graph(g, c.members, w, VerifyMode::Heuristic);
              break;
          }
          if (!ok)
            throw VerificationError(net.name + "#" + std::to_string(inst) +
                                    " " + algorithm_name(alg) +
                                    " w=" + std::to_string(w) +
                                    ": cutset failed verification");
          report.cells.push_back(
              {net.name, inst, alg, w, c.size(), c.cost});
        }
      }
    }
  }
  return report;
}

namespace detail {

inline std::string fixed(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

struct BenchMeans {
  // (network, alg, w) -> mean cutset size over instances
  std::map<std::string, std::map<CutsetAlgorithm, std::map<int, double>>> size;
  std::map<std::string, int> instance_count;
  std::map<std::string, int> max_m;
  std::map<std::string, double> mean_width;
  std::map<std::string, double> mean_nodes;
};

inline BenchMeans summarize(const BenchReport& r) {
  BenchMeans m;
  std::map<std::string, std::map<CutsetAlgorithm, std::map<int, std::pair<double, int>>>> acc;
  for (const auto& cell : r.cells) {
    auto& slot = acc[cell.network][cell.alg][cell.w];
    slot.first += cell.size;
    slot.second += 1;
  }
  for (auto& [net, by_alg] : acc)
    for (auto& [alg, by_w] : by_alg)
      for (auto& [w, slot] : by_w)
        m.size[net][alg][w] = slot.first / slot.second;
  for (const auto& note : r.instances) {
    m.instance_count[note.network] += 1;
    m.mean_width[note.network] += note.width;
    m.mean_nodes[note.network] += note.nodes;
    for (int mm : note.m_by_w)
      m.max_m[note.network] = std::max(m.max_m[note.network], mm);
  }
  for (auto& [net, count] : m.instance_count) {
    m.mean_width[net] /= count;
    m.mean_nodes[net] /= count;
  }
  return m;
}

}  // namespace detail

// Mean cutset size per (network, algorithm, w), CSV.
inline std::string render_summary_csv(const BenchReport& r) {
  auto m = detail::summarize(r);
  std::string out = "network,alg,w,mean_size,instances\n";
  for (const auto& net : r.networks)
    for (CutsetAlgorithm alg : r.algorithms)
      for (int w = r.w_min; w <= r.w_max; ++w)
        out += net + "," + algorithm_name(alg) + "," + std::to_string(w) + "," +
               detail::fixed(m.size[net][alg][w], 2) + "," +
               std::to_string(m.instance_count[net]) + "\n";
  return out;
}

// Mean cutset size per (network, algorithm, w), one aligned table per
// network, algorithms as rows and w as columns.
inline std::string render_summary_text(const BenchReport& r) {
  auto m = detail::summarize(r);
  std::string out;
  out += "cost model " + cost_model_name(r.cost_model) + "\n";
  for (const auto& net : r.networks) {
    out += "\nnetwork " + net + ": instances " +
           std::to_string(m.instance_count[net]) + ", mean nodes " +
           detail::fixed(m.mean_nodes[net], 1) + ", mean width " +
           detail::fixed(m.mean_width[net], 1) + ", max m " +
           std::to_string(m.max_m[net]);
    if (m.max_m[net] > 0)
      out += " (greedy factor 1+ln m = " +
             detail::fixed(1.0 + std::log(static_cast<double>(m.max_m[net])), 2) + ")";
    out += "\nmean cutset size\n";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%-6s", "alg");
    out += buf;
    for (int w = r.w_min; w <= r.w_max; ++w) {
      std::snprintf(buf, sizeof buf, " %8s", ("w=" + std::to_string(w)).c_str());
      out += buf;
    }
    out += '\n';
    for (CutsetAlgorithm alg : r.algorithms) {
      std::snprintf(buf, sizeof buf, "%-6s", algorithm_name(alg).c_str());
      out += buf;
      for (int w = r.w_min; w <= r.w_max; ++w) {
        std::snprintf(buf, sizeof buf, " %8s", detail::fixed(m.size[net][alg][w], 2).c_str());
        out += buf;
      }
      out += '\n';
    }
  }
  return out;
}

// Mean f(w) = mean cutset size + w: the sequence view of the same runs.
inline std::string render_fprofile_csv(const BenchReport& r) {
  auto m = detail::summarize(r);
  std::string out = "network,alg,w,mean_f\n";
  for (const auto& net : r.networks)
    for (CutsetAlgorithm alg : r.algorithms)
      for (int w = r.w_min; w <= r.w_max; ++w)
        out += net + "," + algorithm_name(alg) + "," + std::to_string(w) + "," +
               detail::fixed(m.size[net][alg][w] + w, 2) + "\n";
  return out;
}

inline std::string render_fprofile_text(const BenchReport& r) {
  auto m = detail::summarize(r);
  std::string out = "mean f(w) = mean cutset size + w\n";
  char buf[32];
  for (const auto& net : r.networks) {
    out += "\nnetwork " + net + "\n";
    std::snprintf(buf, sizeof buf, "%-6s", "alg");
    out += buf;
    for (int w = r.w_min; w <= r.w_max; ++w) {
      std::snprintf(buf, sizeof buf, " %8s", ("w=" + std::to_string(w)).c_str());
      out += buf;
    }
    out += '\n';
    for (CutsetAlgorithm alg : r.algorithms) {
      std::snprintf(buf, sizeof buf, "%-6s", algorithm_name(alg).c_str());
      out += buf;
      for (int w = r.w_min; w <= r.w_max; ++w) {
        std::snprintf(buf, sizeof buf, " %8s",
                      detail::fixed(m.size[net][alg][w] + w, 2).c_str());
        out += buf;
      }
      out += '\n';
    }
  }
  return out;
}

// Raw per-run data, one row per (instance, algorithm, w).
inline std::string render_cells_csv(const BenchReport& r) {
  std::map<std::pair<std::string, int>, const BenchInstanceNote*> notes;
  for (const auto& note : r.instances) notes[{note.network, note.instance}] = &note;
  std::string out = "network,instance,seed,nodes,width,alg,w,size,cost\n";
  for (const auto& cell : r.cells) {
    const auto* note = notes.at({cell.network, cell.instance});
    out += cell.network + "," + std::to_string(cell.instance) + "," +
           std::to_string(note->seed) + "," + std::to_string(note->nodes) + "," +
           std::to_string(note->width) + "," + algorithm_name(cell.alg) + "," +
           std::to_string(cell.w) + "," + std::to_string(cell.size) + "," +
           detail::format_double(cell.cost) + "\n";
  }
  return out;
}

}  // namespace wcutset
