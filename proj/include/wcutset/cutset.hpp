#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "wcutset/cutset_types.hpp"
#include "wcutset/exact.hpp"
#include "wcutset/graph.hpp"
#include "wcutset/tree_decomposition.hpp"

namespace wcutset {

// Greedy w-cutset over a tree decomposition. While some cluster still has
// more than w+1 nodes, charge each candidate node its cost over the number of
// oversized clusters it appears in, and remove the cheapest per unit of
// progress. Nodes in no oversized cluster are never taken.
//
// The variant picks the tie-break and whether the decomposition is rebuilt:
//   Gwc   no rebuild; ties prefer membership in the most clusters overall
//   Gwca  rebuild after each removal; ties as Gwc
//   Gwcm  rebuild; ties prefer membership in the most maximum-size clusters
//   Gwcd  rebuild; ties prefer the highest degree in the pruned residual
// Remaining ties go to the smaller node id.
inline Cutset gwc(const TreeDecomposition& td, const Graph& g, int w,
                  CostModel cm, CutsetAlgorithm variant = CutsetAlgorithm::Gwc) {
  if (w < 1) throw std::invalid_argument("w must be >= 1");
  if (variant != CutsetAlgorithm::Gwc && variant != CutsetAlgorithm::Gwca &&
      variant != CutsetAlgorithm::Gwcm && variant != CutsetAlgorithm::Gwcd)
    throw std::invalid_argument("not a gwc variant: " + algorithm_name(variant));
  const bool rebuild = variant != CutsetAlgorithm::Gwc;
  const int n = g.universe();

  std::vector<Bitset> clusters;
  clusters.reserve(td.clusters.size());
  for (const auto& cl : td.clusters) {
    Bitset b(n);
    for (NodeId v : cl) {
      if (!g.has_node(v))
        throw std::invalid_argument("cluster names unknown node " +
                                    std::to_string(v));
      b.set(v);
    }
    clusters.push_back(std::move(b));
  }

  Bitset removed(n);
  std::vector<NodeId> members;
  for (;;) {
    std::vector<int> f(static_cast<size_t>(n), 0);
    bool oversized = false;
    int max_size = 0;
    for (const Bitset& b : clusters) max_size = std::max(max_size, b.count());
    for (const Bitset& b : clusters)
      if (b.count() > w + 1) {
        oversized = true;
        for (NodeId v : b) ++f[static_cast<size_t>(v)];
      }
    if (!oversized) break;

    // tie-break data
    std::vector<int> tie(static_cast<size_t>(n), 0);
    if (variant == CutsetAlgorithm::Gwc || variant == CutsetAlgorithm::Gwca) {
      for (const Bitset& b : clusters)
        for (NodeId v : b) ++tie[static_cast<size_t>(v)];
    } else if (variant == CutsetAlgorithm::Gwcm) {
      for (const Bitset& b : clusters)
        if (b.count() == max_size)
          for (NodeId v : b) ++tie[static_cast<size_t>(v)];
    } else {  // Gwcd
      Graph pruned = prune_degree_le1(g.without(removed));
      for (NodeId v : pruned.nodes()) tie[static_cast<size_t>(v)] = pruned.degree(v);
    }

    NodeId best = -1;
    double best_cost = 0.0;
    int best_f = 0;
    for (NodeId v = 0; v < n; ++v) {
      if (f[static_cast<size_t>(v)] == 0) continue;
      double c = node_cost(g, v, cm);
      bool take = false;
      if (best == -1) {
        take = true;
      } else {
        // minimize cost/f without dividing
        double lhs = c * best_f;
        double rhs = best_cost * f[static_cast<size_t>(v)];
        if (lhs < rhs) take = true;
        else if (lhs == rhs && tie[static_cast<size_t>(v)] > tie[static_cast<size_t>(best)]) take = true;
      }
      if (take) {
        best = v;
        best_cost = c;
        best_f = f[static_cast<size_t>(v)];
      }
    }

    members.push_back(best);
    removed.set(best);
    if (rebuild) {
      Graph residual = g.without(removed);
      TreeDecomposition fresh =
          build_decomposition(residual, min_fill_order(residual));
      clusters.clear();
      for (const auto& cl : fresh.clusters) {
        Bitset b(n);
        for (NodeId v : cl) b.set(v);
        clusters.push_back(std::move(b));
      }
    } else {
      for (Bitset& b : clusters) b.reset(best);
    }
  }

  std::sort(members.begin(), members.end());
  double total = cutset_cost(g, members, cm);
  return Cutset{std::move(members), w, total, variant};
}

// Grows the cutset bottom-up: after pruning degree <= 1 nodes, repeatedly add
// the node with the lowest cost per degree until the residual min-fill width
// reaches w. Ratio ties prefer the node sitting in the most oversized
// clusters of the current residual decomposition, then the smaller id.
inline Cutset mga(const Graph& g, int w, CostModel cm) {
  if (w < 1) throw std::invalid_argument("w must be >= 1");
  Bitset removed(g.universe());
  std::vector<NodeId> members;
  for (;;) {
    Graph residual = g.without(removed);
    TreeDecomposition td =
        build_decomposition(residual, min_fill_order(residual));
    if (td.width <= w) break;

    Graph pruned = prune_degree_le1(residual);
    std::vector<int> oversized(static_cast<size_t>(g.universe()), 0);
    for (const auto& cl : td.clusters)
      if (static_cast<int>(cl.size()) > w + 1)
        for (NodeId v : cl) ++oversized[static_cast<size_t>(v)];

    NodeId best = -1;
    double best_cost = 0.0;
    int best_deg = 0;
    for (NodeId v : pruned.nodes()) {
      int d = pruned.degree(v);
      double c = node_cost(g, v, cm);
      bool take = false;
      if (best == -1) {
        take = true;
      } else {
        double lhs = c * best_deg;
        double rhs = best_cost * d;
        if (lhs < rhs) take = true;
        else if (lhs == rhs &&
                 oversized[static_cast<size_t>(v)] > oversized[static_cast<size_t>(best)])
          take = true;
      }
      if (take) {
        best = v;
        best_cost = c;
        best_deg = d;
      }
    }
    // A residual wider than w >= 1 cannot be a forest, so pruning left nodes.
    if (best == -1)
      throw std::logic_error("pruned residual is empty at width > w");
    members.push_back(best);
    removed.set(best);
  }
  std::sort(members.begin(), members.end());
  double total = cutset_cost(g, members, cm);
  return Cutset{std::move(members), w, total, CutsetAlgorithm::Mga};
}

// Cutset as a side effect of elimination: follow the min-fill order, and
// whenever the next elimination would close a clique larger than w+1, cut the
// node with the largest sqrt(degree) * product of its neighbors' domain
// sizes instead (scored in log space so large neighborhoods cannot
// overflow). The cost model only prices the result; the selection rule is
// fixed. A rare extra pass covers residuals whose min-fill width still lands
// above w.
inline Cutset dgr(const Graph& g, int w, CostModel cm) {
  if (w < 1) throw std::invalid_argument("w must be >= 1");
  std::vector<long double> logdom(static_cast<size_t>(g.universe()), 0.0L);
  for (NodeId v : g.nodes())
    logdom[static_cast<size_t>(v)] = std::log(static_cast<long double>(g.domain_size(v)));

  Bitset removed(g.universe());
  std::vector<NodeId> members;
  for (;;) {
    detail::EliminationEngine eng(g.without(removed));
    bool cut_any = false;
    while (!eng.empty()) {
      NodeId v = eng.min_fill_candidate();
      if (eng.degree(v) + 1 <= w + 1) {
        eng.eliminate(v);
        continue;
      }
      NodeId pick = -1;
      long double best_score = 0.0L;
      for (NodeId u : eng.alive()) {
        int d = eng.degree(u);
        if (d == 0) continue;
        long double score = 0.5L * std::log(static_cast<long double>(d));
        for (NodeId z : eng.neighbors(u)) score += logdom[static_cast<size_t>(z)];
        if (pick == -1 || score > best_score) {
          pick = u;
          best_score = score;
        }
      }
      eng.remove(pick);
      members.push_back(pick);
      removed.set(pick);
      cut_any = true;
    }
    if (!cut_any) break;
    if (width_of(g.without(removed)) <= w) break;
  }
  std::sort(members.begin(), members.end());
  double total = cutset_cost(g, members, cm);
  return Cutset{std::move(members), w, total, CutsetAlgorithm::Dgr};
}

// Does removing c leave every cluster with at most w+1 nodes?
inline bool verify_wcutset_td(const TreeDecomposition& td,
                              const std::vector<NodeId>& c, int w) {
  std::vector<NodeId> cut = c;
  std::sort(cut.begin(), cut.end());
  for (const auto& cluster : td.clusters) {
    int left = 0;
    for (NodeId v : cluster)
      if (!std::binary_search(cut.begin(), cut.end(), v)) ++left;
    if (left > w + 1) return false;
  }
  return true;
}

enum class VerifyMode { Heuristic, Exact };

// Width check on the residual graph. Heuristic mode uses the min-fill width:
// a true answer is a certificate, a false one may be over-cautious. Exact
// mode is definitive but limited to oracle-sized residuals.
inline bool verify_wcutset_graph(const Graph& g, const std::vector<NodeId>& c,
                                 int w, VerifyMode mode,
                                 const OracleLimits& lim = {}) {
  Graph residual = remove_nodes(g, c);
  if (mode == VerifyMode::Heuristic) return width_of(residual) <= w;
  return exact_treewidth(residual, lim) <= w;
}

// One entry point for every algorithm; the gwc family starts from the
// min-fill decomposition of g.
inline Cutset find_wcutset(const Graph& g, CutsetAlgorithm alg, int w,
                           CostModel cm, const OracleLimits& lim = {}) {
  switch (alg) {
    case CutsetAlgorithm::Gwc:
    case CutsetAlgorithm::Gwca:
    case CutsetAlgorithm::Gwcm:
    case CutsetAlgorithm::Gwcd: {
      TreeDecomposition td = build_decomposition(g, min_fill_order(g));
      return gwc(td, g, w, cm, alg);
    }
    case CutsetAlgorithm::Mga:
      return mga(g, w, cm);
    case CutsetAlgorithm::Dgr:
      return dgr(g, w, cm);
    case CutsetAlgorithm::Exact:
      return exact_min_wcutset(g, w, cm, lim);
  }
  throw std::invalid_argument("unknown algorithm");
}

}  // namespace wcutset
