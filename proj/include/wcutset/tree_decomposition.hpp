#pragma once

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "wcutset/bitset.hpp"
#include "wcutset/graph.hpp"

namespace wcutset {

using EliminationOrder = std::vector<NodeId>;
using ClusterId = int;

// Clusters are sorted ascending; width is max cluster size minus one, or -1
// when there are no clusters (empty graph). The edges always form one tree,
// even when the underlying graph is disconnected.
struct TreeDecomposition {
  std::vector<std::vector<NodeId>> clusters;
  std::vector<std::pair<ClusterId, ClusterId>> tree_edges;
  int width = -1;
};

namespace detail {

// Working graph for elimination: supports removing a node with or without
// connecting its neighborhood, and keeps per-node fill-in counts current so
// min-fill selection is a linear scan. After a change only the nodes whose
// neighborhood actually changed get their count recomputed.
class EliminationEngine {
public:
  explicit EliminationEngine(const Graph& g)
      : universe_(g.universe()), alive_(g.nodes()), alive_count_(g.node_count()) {
    adj_.reserve(static_cast<size_t>(universe_));
    for (NodeId v = 0; v < universe_; ++v)
      adj_.push_back(g.has_node(v) ? g.neighbors(v) : Bitset(universe_));
    fill_.assign(static_cast<size_t>(universe_), 0);
    for (NodeId v : alive_) fill_[static_cast<size_t>(v)] = missing_pairs(v);
  }

  bool empty() const { return alive_count_ == 0; }
  int alive_count() const { return alive_count_; }
  const Bitset& alive() const { return alive_; }
  const Bitset& neighbors(NodeId v) const { return adj_[static_cast<size_t>(v)]; }
  int degree(NodeId v) const { return adj_[static_cast<size_t>(v)].count(); }

  // Node with the fewest missing neighbor pairs; ties fall to the smaller id.
  NodeId min_fill_candidate() const {
    NodeId best = -1;
    long long best_fill = std::numeric_limits<long long>::max();
    for (NodeId v : alive_)
      if (fill_[static_cast<size_t>(v)] < best_fill) {
        best_fill = fill_[static_cast<size_t>(v)];
        best = v;
      }
    return best;
  }

  // Connects v's neighbors pairwise, then removes v. New edges are recorded
  // in fill_edges().
  void eliminate(NodeId v) {
    Bitset nv = adj_[static_cast<size_t>(v)];
    detach(v);
    Bitset dirty = nv;
    for (NodeId u : nv) {
      Bitset missing = nv;
      missing.subtract(adj_[static_cast<size_t>(u)]);
      missing.reset(u);
      for (NodeId w : missing) {
        if (w <= u) continue;
        adj_[static_cast<size_t>(u)].set(w);
        adj_[static_cast<size_t>(w)].set(u);
        fill_edges_.emplace_back(u, w);
        Bitset common = adj_[static_cast<size_t>(u)];
        common &= adj_[static_cast<size_t>(w)];
        dirty |= common;
      }
    }
    refresh(dirty);
  }

  // Removes v without touching its neighborhood.
  void remove(NodeId v) {
    Bitset nv = adj_[static_cast<size_t>(v)];
    detach(v);
    refresh(nv);
  }

  const std::vector<std::pair<NodeId, NodeId>>& fill_edges() const {
    return fill_edges_;
  }

private:
  long long missing_pairs(NodeId v) const {
    const Bitset& nb = adj_[static_cast<size_t>(v)];
    long long total = 0;
    for (NodeId u : nb) {
      Bitset t = nb;
      t.subtract(adj_[static_cast<size_t>(u)]);
      t.reset(u);
      total += t.count();
    }
    return total / 2;
  }

  void detach(NodeId v) {
    for (NodeId u : adj_[static_cast<size_t>(v)]) adj_[static_cast<size_t>(u)].reset(v);
    adj_[static_cast<size_t>(v)].clear();
    alive_.reset(v);
    --alive_count_;
  }

  void refresh(Bitset dirty) {
    dirty &= alive_;
    for (NodeId u : dirty) fill_[static_cast<size_t>(u)] = missing_pairs(u);
  }

  int universe_;
  Bitset alive_;
  int alive_count_;
  std::vector<Bitset> adj_;
  std::vector<long long> fill_;
  std::vector<std::pair<NodeId, NodeId>> fill_edges_;
};

inline void check_order(const Graph& g, const EliminationOrder& order) {
  if (static_cast<int>(order.size()) != g.node_count())
    throw std::invalid_argument("elimination order lists " +
                                std::to_string(order.size()) + " nodes, graph has " +
                                std::to_string(g.node_count()));
  Bitset seen(g.universe());
  for (NodeId v : order) {
    if (!g.has_node(v))
      throw std::invalid_argument("elimination order names unknown node " +
                                  std::to_string(v));
    if (seen.test(v))
      throw std::invalid_argument("elimination order repeats node " +
                                  std::to_string(v));
    seen.set(v);
  }
}

}  // namespace detail

inline EliminationOrder min_fill_order(const Graph& g) {
  detail::EliminationEngine eng(g);
  EliminationOrder order;
  order.reserve(static_cast<size_t>(g.node_count()));
  while (!eng.empty()) {
    NodeId v = eng.min_fill_candidate();
    order.push_back(v);
    eng.eliminate(v);
  }
  return order;
}

// The graph plus every fill edge induced by eliminating along `order`. The
// result is chordal and `order` is a perfect elimination order of it.
inline Graph triangulate(const Graph& g, const EliminationOrder& order) {
  detail::check_order(g, order);
  detail::EliminationEngine eng(g);
  for (NodeId v : order) eng.eliminate(v);
  Graph out = g;
  for (auto [u, w] : eng.fill_edges()) out.add_edge(u, w);
  return out;
}

// Tree decomposition from an elimination order: the maximal elimination
// cliques become clusters, connected by a maximum-weight spanning tree over
// pairwise intersection sizes (which yields the running intersection
// property on a chordal graph). Components end up joined by empty-separator
// edges so the result is always a single tree.
inline TreeDecomposition build_decomposition(const Graph& g,
                                             const EliminationOrder& order) {
  detail::check_order(g, order);
  const int n = g.universe();

  detail::EliminationEngine eng(g);
  std::vector<Bitset> cliques;
  cliques.reserve(order.size());
  for (NodeId v : order) {
    Bitset c = eng.neighbors(v);
    c.set(v);
    cliques.push_back(std::move(c));
    eng.eliminate(v);
  }

  // Keep only maximal cliques. Scanning by descending size guarantees any
  // strict superset is already in `kept` when its subsets are tested.
  const int total = static_cast<int>(cliques.size());
  std::vector<int> by_size(static_cast<size_t>(total));
  std::iota(by_size.begin(), by_size.end(), 0);
  std::vector<int> sizes(static_cast<size_t>(total));
  for (int i = 0; i < total; ++i) sizes[static_cast<size_t>(i)] = cliques[static_cast<size_t>(i)].count();
  std::stable_sort(by_size.begin(), by_size.end(), [&sizes](int a, int b) {
    return sizes[static_cast<size_t>(a)] > sizes[static_cast<size_t>(b)];
  });
  std::vector<int> kept;
  for (int i : by_size) {
    bool subsumed = false;
    for (int j : kept)
      if (cliques[static_cast<size_t>(i)].is_subset_of(cliques[static_cast<size_t>(j)])) {
        subsumed = true;
        break;
      }
    if (!subsumed) kept.push_back(i);
  }
  std::sort(kept.begin(), kept.end());  // back to elimination position order

  TreeDecomposition td;
  const int k = static_cast<int>(kept.size());
  td.clusters.reserve(static_cast<size_t>(k));
  for (int pos : kept) {
    td.clusters.push_back(cliques[static_cast<size_t>(pos)].to_vector());
    td.width = std::max(td.width,
                        static_cast<int>(td.clusters.back().size()) - 1);
  }

  if (k > 1) {
    // Prim over intersection sizes, highest weight first, smaller cluster id
    // on ties. Zero-weight picks only ever bridge graph components, where any
    // edge preserves running intersection.
    std::vector<bool> in_tree(static_cast<size_t>(k), false);
    std::vector<int> best_w(static_cast<size_t>(k), -1);
    std::vector<int> best_from(static_cast<size_t>(k), -1);
    in_tree[0] = true;
    for (int j = 1; j < k; ++j) {
      best_w[static_cast<size_t>(j)] = cliques[static_cast<size_t>(kept[0])].intersect_count(
          cliques[static_cast<size_t>(kept[static_cast<size_t>(j)])]);
      best_from[static_cast<size_t>(j)] = 0;
    }
    for (int step = 1; step < k; ++step) {
      int pick = -1;
      for (int j = 0; j < k; ++j)
        if (!in_tree[static_cast<size_t>(j)] &&
            (pick == -1 || best_w[static_cast<size_t>(j)] > best_w[static_cast<size_t>(pick)]))
          pick = j;
      in_tree[static_cast<size_t>(pick)] = true;
      ClusterId a = best_from[static_cast<size_t>(pick)];
      ClusterId b = pick;
      td.tree_edges.emplace_back(std::min(a, b), std::max(a, b));
      for (int j = 0; j < k; ++j)
        if (!in_tree[static_cast<size_t>(j)]) {
          int w = cliques[static_cast<size_t>(kept[static_cast<size_t>(pick)])].intersect_count(
              cliques[static_cast<size_t>(kept[static_cast<size_t>(j)])]);
          if (w > best_w[static_cast<size_t>(j)]) {
            best_w[static_cast<size_t>(j)] = w;
            best_from[static_cast<size_t>(j)] = pick;
          }
        }
    }
  }
  return td;
}

enum class DecompositionViolation {
  None,
  ClusterMember,        // cluster names a node the graph does not have
  NotTree,              // edges are not a single tree over the clusters
  NodeUncovered,        // some node appears in no cluster
  EdgeUncovered,        // some edge has no cluster containing both ends
  RunningIntersection,  // clusters holding some node are not connected
  WidthMismatch,        // stored width is not max cluster size - 1
};

struct DecompositionCheck {
  bool ok = true;
  DecompositionViolation violation = DecompositionViolation::None;
  std::string detail;

  explicit operator bool() const { return ok; }
};

inline DecompositionCheck verify_decomposition(const TreeDecomposition& td,
                                               const Graph& g) {
  auto fail = [](DecompositionViolation v, std::string d) {
    return DecompositionCheck{false, v, std::move(d)};
  };
  const int k = static_cast<int>(td.clusters.size());

  std::vector<Bitset> cl;
  cl.reserve(static_cast<size_t>(k));
  int widest = -1;
  for (int i = 0; i < k; ++i) {
    Bitset b(g.universe());
    for (NodeId v : td.clusters[static_cast<size_t>(i)]) {
      if (!g.has_node(v))
        return fail(DecompositionViolation::ClusterMember,
                    "cluster " + std::to_string(i) + " names unknown node " +
                        std::to_string(v));
      b.set(v);
    }
    widest = std::max(widest, b.count() - 1);
    cl.push_back(std::move(b));
  }

  if (td.width != widest)
    return fail(DecompositionViolation::WidthMismatch,
                "stored width " + std::to_string(td.width) + ", actual " +
                    std::to_string(widest));

  if (static_cast<int>(td.tree_edges.size()) != std::max(0, k - 1))
    return fail(DecompositionViolation::NotTree,
                std::to_string(td.tree_edges.size()) + " edges over " +
                    std::to_string(k) + " clusters");
  std::vector<std::vector<ClusterId>> adj(static_cast<size_t>(k));
  for (auto [a, b] : td.tree_edges) {
    if (a < 0 || a >= k || b < 0 || b >= k || a == b)
      return fail(DecompositionViolation::NotTree,
                  "bad tree edge " + std::to_string(a) + " " + std::to_string(b));
    adj[static_cast<size_t>(a)].push_back(b);
    adj[static_cast<size_t>(b)].push_back(a);
  }
  if (k > 0) {
    std::vector<bool> seen(static_cast<size_t>(k), false);
    std::vector<ClusterId> stack{0};
    seen[0] = true;
    int reached = 0;
    while (!stack.empty()) {
      ClusterId c = stack.back();
      stack.pop_back();
      ++reached;
      for (ClusterId d : adj[static_cast<size_t>(c)])
        if (!seen[static_cast<size_t>(d)]) {
          seen[static_cast<size_t>(d)] = true;
          stack.push_back(d);
        }
    }
    if (reached != k)
      return fail(DecompositionViolation::NotTree, "clusters are disconnected");
  }

  Bitset covered(g.universe());
  for (const Bitset& b : cl) covered |= b;
  for (NodeId v : g.nodes())
    if (!covered.test(v))
      return fail(DecompositionViolation::NodeUncovered,
                  "node " + std::to_string(v) + " is in no cluster");

  for (auto [u, v] : g.edge_list()) {
    bool found = false;
    for (const Bitset& b : cl)
      if (b.test(u) && b.test(v)) {
        found = true;
        break;
      }
    if (!found)
      return fail(DecompositionViolation::EdgeUncovered,
                  "edge " + std::to_string(u) + " " + std::to_string(v) +
                      " is in no cluster");
  }

  // Running intersection: the clusters holding v must form a subtree. Count
  // tree edges whose two ends both hold v; a connected subgraph on c
  // clusters needs exactly c - 1 of them.
  for (NodeId v : g.nodes()) {
    int holding = 0;
    for (const Bitset& b : cl)
      if (b.test(v)) ++holding;
    int linking = 0;
    for (auto [a, b] : td.tree_edges)
      if (cl[static_cast<size_t>(a)].test(v) && cl[static_cast<size_t>(b)].test(v)) ++linking;
    if (linking != holding - 1)
      return fail(DecompositionViolation::RunningIntersection,
                  "clusters holding node " + std::to_string(v) +
                      " are not connected");
  }

  return {};
}

// Width of the min-fill decomposition; the everyday upper bound used when an
// exact treewidth is out of reach.
inline int width_of(const Graph& g) {
  return build_decomposition(g, min_fill_order(g)).width;
}

// Decomposition of the whole graph obtained from a decomposition of
// g - cutset by adding the cutset to every cluster. Its width is at most
// residual width + |cutset|, which is what makes small cutsets useful.
inline TreeDecomposition augment_with_cutset(const TreeDecomposition& residual,
                                             const std::vector<NodeId>& cutset) {
  TreeDecomposition out = residual;
  if (out.clusters.empty()) {
    if (!cutset.empty()) out.clusters.emplace_back();
  }
  for (auto& cluster : out.clusters) {
    std::vector<NodeId> joined = cluster;
    joined.insert(joined.end(), cutset.begin(), cutset.end());
    std::sort(joined.begin(), joined.end());
    joined.erase(std::unique(joined.begin(), joined.end()), joined.end());
    cluster = std::move(joined);
  }
  out.width = -1;
  for (const auto& cluster : out.clusters)
    out.width = std::max(out.width, static_cast<int>(cluster.size()) - 1);
  return out;
}

}  // namespace wcutset
