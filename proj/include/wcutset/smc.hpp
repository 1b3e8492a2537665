#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "wcutset/cutset_types.hpp"
#include "wcutset/graph.hpp"
#include "wcutset/tree_decomposition.hpp"

namespace wcutset {

using ElementId = int;
using SetId = int;

// Set multi-cover: every element must be covered by at least `requirement`
// distinct chosen sets; each set may be chosen at most once.
struct SMCElement {
  ElementId id = 0;
  int requirement = 1;
};

struct SMCSet {
  SetId id = 0;
  double cost = 1.0;
  std::vector<ElementId> elements;  // ascending, no repeats
};

struct SMCInstance {
  std::vector<SMCElement> elements;  // ascending by id
  std::vector<SMCSet> sets;          // ascending by id
};

namespace detail {

// Elements and sets in id order, ids unique, requirements >= 1, costs > 0,
// member lists sorted sets of declared elements. Throws otherwise.
inline std::map<ElementId, int> check_smc(const SMCInstance& inst) {
  std::map<ElementId, int> elem_index;
  for (const auto& e : inst.elements) {
    if (e.requirement < 1)
      throw std::invalid_argument("element " + std::to_string(e.id) +
                                  " has requirement " +
                                  std::to_string(e.requirement));
    if (!elem_index.emplace(e.id, static_cast<int>(elem_index.size())).second)
      throw std::invalid_argument("duplicate element " + std::to_string(e.id));
  }
  if (!std::is_sorted(inst.elements.begin(), inst.elements.end(),
                      [](const SMCElement& a, const SMCElement& b) { return a.id < b.id; }))
    throw std::invalid_argument("elements are not in id order");
  SetId prev = -1;
  bool first = true;
  for (const auto& s : inst.sets) {
    if (!first && s.id <= prev)
      throw std::invalid_argument("sets are not in id order");
    first = false;
    prev = s.id;
    if (!(s.cost > 0))
      throw std::invalid_argument("set " + std::to_string(s.id) +
                                  " has non-positive cost");
    for (size_t i = 0; i < s.elements.size(); ++i) {
      if (!elem_index.count(s.elements[i]))
        throw std::invalid_argument("set " + std::to_string(s.id) +
                                    " covers unknown element " +
                                    std::to_string(s.elements[i]));
      if (i > 0 && s.elements[i] <= s.elements[i - 1])
        throw std::invalid_argument("set " + std::to_string(s.id) +
                                    " has unsorted or repeated elements");
    }
  }
  return elem_index;
}

inline bool smc_feasible(const SMCInstance& inst,
                         const std::map<ElementId, int>& elem_index) {
  std::vector<int> coverage(elem_index.size(), 0);
  for (const auto& s : inst.sets)
    for (ElementId e : s.elements) ++coverage[static_cast<size_t>(elem_index.at(e))];
  for (const auto& e : inst.elements)
    if (coverage[static_cast<size_t>(elem_index.at(e.id))] < e.requirement) return false;
  return true;
}

}  // namespace detail

// True when `chosen` (distinct set ids) covers every element at least its
// requirement many times. Unknown or repeated ids are an error.
inline bool verify_cover(const SMCInstance& inst,
                         const std::vector<SetId>& chosen) {
  auto elem_index = detail::check_smc(inst);
  std::vector<int> need;
  need.reserve(inst.elements.size());
  for (const auto& e : inst.elements) need.push_back(e.requirement);

  std::vector<SetId> sorted = chosen;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("cover repeats a set");
  for (SetId id : sorted) {
    auto it = std::lower_bound(
        inst.sets.begin(), inst.sets.end(), id,
        [](const SMCSet& s, SetId key) { return s.id < key; });
    if (it == inst.sets.end() || it->id != id)
      throw std::invalid_argument("cover names unknown set " + std::to_string(id));
    for (ElementId e : it->elements) --need[static_cast<size_t>(elem_index.at(e))];
  }
  for (int n : need)
    if (n > 0) return false;
  return true;
}

// Greedy set multi-cover: repeatedly takes the set minimizing cost per still
// useful element. `tie_priority` (higher wins) breaks ratio ties before the
// final fall-through to the smaller set id; the default has no priorities,
// so ratio ties go straight to the id.
inline std::vector<SetId> greedy_smc(
    const SMCInstance& inst,
    const std::map<SetId, long long>& tie_priority = {}) {
  auto elem_index = detail::check_smc(inst);
  if (!detail::smc_feasible(inst, elem_index))
    throw std::invalid_argument("instance is not coverable");

  std::vector<int> deficit;
  deficit.reserve(inst.elements.size());
  for (const auto& e : inst.elements) deficit.push_back(e.requirement);
  auto priority_of = [&tie_priority](SetId id) {
    auto it = tie_priority.find(id);
    return it == tie_priority.end() ? 0LL : it->second;
  };

  std::vector<bool> taken(inst.sets.size(), false);
  std::vector<SetId> chosen;
  for (;;) {
    bool pending = false;
    for (int d : deficit)
      if (d > 0) pending = true;
    if (!pending) break;

    int best = -1;
    int best_benefit = 0;
    double best_cost = 0.0;
    long long best_prio = 0;
    for (size_t i = 0; i < inst.sets.size(); ++i) {
      if (taken[i]) continue;
      const SMCSet& s = inst.sets[i];
      int benefit = 0;
      for (ElementId e : s.elements)
        if (deficit[static_cast<size_t>(elem_index.at(e))] > 0) ++benefit;
      if (benefit == 0) continue;
      // minimize cost/benefit, compared without division
      bool better = false;
      if (best == -1) {
        better = true;
      } else {
        double lhs = s.cost * best_benefit;
        double rhs = best_cost * benefit;
        if (lhs < rhs) better = true;
        else if (lhs == rhs && priority_of(s.id) > best_prio) better = true;
      }
      if (better) {
        best = static_cast<int>(i);
        best_benefit = benefit;
        best_cost = s.cost;
        best_prio = priority_of(s.id);
      }
    }
    if (best == -1)
      throw std::invalid_argument("instance is not coverable");
    taken[static_cast<size_t>(best)] = true;
    chosen.push_back(inst.sets[static_cast<size_t>(best)].id);
    for (ElementId e : inst.sets[static_cast<size_t>(best)].elements)
      --deficit[static_cast<size_t>(elem_index.at(e))];
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

// The cover instance whose solutions are exactly the w-cutsets of td:
// elements are the oversized clusters, each demanding size - (w+1) removals;
// the set for node X lists the oversized clusters X sits in.
inline SMCInstance td_to_smc(const TreeDecomposition& td, int w, const Graph& g,
                             CostModel cm) {
  if (w < 1) throw std::invalid_argument("w must be >= 1");
  SMCInstance inst;
  Bitset seen(g.universe());
  for (size_t i = 0; i < td.clusters.size(); ++i) {
    for (NodeId v : td.clusters[i]) {
      if (!g.has_node(v))
        throw std::invalid_argument("cluster names unknown node " + std::to_string(v));
      seen.set(v);
    }
    int over = static_cast<int>(td.clusters[i].size()) - (w + 1);
    if (over > 0)
      inst.elements.push_back({static_cast<ElementId>(i), over});
  }
  for (NodeId v : seen) {
    SMCSet s;
    s.id = v;
    s.cost = node_cost(g, v, cm);
    for (const auto& e : inst.elements) {
      const auto& cluster = td.clusters[static_cast<size_t>(e.id)];
      if (std::binary_search(cluster.begin(), cluster.end(), v))
        s.elements.push_back(e.id);
    }
    inst.sets.push_back(std::move(s));
  }
  return inst;
}

// Star decomposition built from a uniform-cost cover instance: one cluster
// per element holding its covering sets plus padding nodes, and a hub holding
// every set node. With w = m - 1 - min r, the w-cutsets of the star are
// exactly the covers (after padding nodes are repaired away), so cover
// hardness transfers to cutset hardness and vice versa.
struct AugmentedDecomposition {
  TreeDecomposition td;  // element clusters in element order, hub last
  int w = 0;
  std::vector<NodeId> set_nodes;    // node ids = set ids
  std::vector<NodeId> dummy_nodes;  // padding, ids above every set id
  std::vector<std::vector<NodeId>> cluster_dummies;  // per element cluster
  std::vector<ElementId> cluster_element;            // per element cluster
};

inline AugmentedDecomposition smc_to_augmented_td(const SMCInstance& inst) {
  auto elem_index = detail::check_smc(inst);
  const int m = static_cast<int>(inst.sets.size());
  if (inst.elements.empty())
    throw std::invalid_argument("instance has no elements");
  for (size_t i = 1; i < inst.sets.size(); ++i)
    if (inst.sets[i].cost != inst.sets[0].cost)
      throw std::invalid_argument("reduction needs uniform set costs");
  if (!detail::smc_feasible(inst, elem_index))
    throw std::invalid_argument("instance is not coverable");
  for (const auto& s : inst.sets)
    if (s.id < 0)
      throw std::invalid_argument("set ids must be non-negative");

  int min_r = inst.elements[0].requirement;
  for (const auto& e : inst.elements) min_r = std::min(min_r, e.requirement);
  const int w = m - 1 - min_r;
  if (w < 1)
    throw std::invalid_argument("reduction degenerates: m - 1 - min r = " +
                                std::to_string(w) + " is below 1");

  AugmentedDecomposition out;
  out.w = w;
  for (const auto& s : inst.sets) out.set_nodes.push_back(s.id);
  NodeId next_dummy = out.set_nodes.empty() ? 0 : out.set_nodes.back() + 1;

  // covering sets per element
  std::vector<std::vector<NodeId>> covers(inst.elements.size());
  for (const auto& s : inst.sets)
    for (ElementId e : s.elements)
      covers[static_cast<size_t>(elem_index.at(e))].push_back(s.id);

  for (size_t i = 0; i < inst.elements.size(); ++i) {
    const auto& e = inst.elements[i];
    std::vector<NodeId> cluster = covers[i];
    // pad to r_i + w + 1 so the cluster's surplus is exactly r_i
    int pad = e.requirement + w + 1 - static_cast<int>(cluster.size());
    std::vector<NodeId> dummies;
    for (int d = 0; d < pad; ++d) {
      dummies.push_back(next_dummy);
      cluster.push_back(next_dummy);
      ++next_dummy;
    }
    std::sort(cluster.begin(), cluster.end());
    out.td.clusters.push_back(std::move(cluster));
    out.cluster_dummies.push_back(std::move(dummies));
    out.cluster_element.push_back(e.id);
    out.dummy_nodes.insert(out.dummy_nodes.end(),
                           out.cluster_dummies.back().begin(),
                           out.cluster_dummies.back().end());
  }
  out.td.clusters.push_back(out.set_nodes);  // hub
  const ClusterId hub = static_cast<ClusterId>(out.td.clusters.size()) - 1;
  for (ClusterId i = 0; i < hub; ++i) out.td.tree_edges.emplace_back(i, hub);
  for (const auto& cluster : out.td.clusters)
    out.td.width = std::max(out.td.width, static_cast<int>(cluster.size()) - 1);
  return out;
}

// Rewrites a w-cutset of the augmented star so it uses no padding nodes,
// without growing. A padding node is swapped for an unchosen set node from
// its own cluster when one exists; otherwise every covering set of that
// cluster is already chosen, and the padding node can simply be dropped
// because the cluster's surplus is bounded by its covering sets.
inline std::vector<NodeId> strip_dummies(const AugmentedDecomposition& aug,
                                         const std::vector<NodeId>& cutset) {
  int top = 1;
  if (!aug.set_nodes.empty()) top = std::max(top, aug.set_nodes.back() + 1);
  if (!aug.dummy_nodes.empty()) top = std::max(top, aug.dummy_nodes.back() + 1);
  Bitset chosen(top);
  Bitset dummy(top);
  for (NodeId v : aug.dummy_nodes) dummy.set(v);
  for (NodeId v : cutset) {
    if (!std::binary_search(aug.set_nodes.begin(), aug.set_nodes.end(), v) &&
        !std::binary_search(aug.dummy_nodes.begin(), aug.dummy_nodes.end(), v))
      throw std::invalid_argument("cutset names unknown node " + std::to_string(v));
    chosen.set(v);
  }

  for (size_t i = 0; i < aug.cluster_dummies.size(); ++i) {
    const auto& cluster = aug.td.clusters[i];
    for (NodeId d : aug.cluster_dummies[i]) {
      if (!chosen.test(d)) continue;
      chosen.reset(d);
      for (NodeId s : cluster) {
        if (dummy.test(s) || chosen.test(s)) continue;
        chosen.set(s);
        break;
      }
    }
  }
  std::vector<NodeId> out;
  for (NodeId v : chosen) out.push_back(v);
  return out;
}

}  // namespace wcutset
