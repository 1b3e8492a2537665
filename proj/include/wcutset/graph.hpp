#pragma once

#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "wcutset/bitset.hpp"

namespace wcutset {

using NodeId = int;

// Undirected graph over node ids 0..universe-1. A subset of the ids is
// present; removing nodes never renumbers, so a subgraph and its parent agree
// on ids. Every node carries a positive cost (default 1) and a domain size
// (default 2); the cost models in cutset_types.hpp read these.
class Graph {
public:
  Graph() = default;
  explicit Graph(int node_count)
      : universe_(node_count),
        count_(node_count),
        present_(node_count),
        adj_(static_cast<size_t>(node_count), Bitset(node_count)),
        cost_(static_cast<size_t>(node_count), 1.0),
        domain_(static_cast<size_t>(node_count), 2) {
    if (node_count < 0) throw std::invalid_argument("negative node count");
    for (NodeId v = 0; v < node_count; ++v) present_.set(v);
  }

  int universe() const { return universe_; }
  int node_count() const { return count_; }
  int edge_count() const { return edges_; }

  bool has_node(NodeId v) const {
    return v >= 0 && v < universe_ && present_.test(v);
  }

  void add_edge(NodeId u, NodeId v) {
    check_node(u);
    check_node(v);
    if (u == v)
      throw std::invalid_argument("self-loop on node " + std::to_string(u));
    if (adj_[static_cast<size_t>(u)].test(v))
      throw std::invalid_argument("duplicate edge " + std::to_string(u) + " " +
                                  std::to_string(v));
    adj_[static_cast<size_t>(u)].set(v);
    adj_[static_cast<size_t>(v)].set(u);
    ++edges_;
  }

  bool has_edge(NodeId u, NodeId v) const {
    check_node(u);
    check_node(v);
    return adj_[static_cast<size_t>(u)].test(v);
  }

  int degree(NodeId v) const {
    check_node(v);
    return adj_[static_cast<size_t>(v)].count();
  }

  const Bitset& nodes() const { return present_; }
  const Bitset& neighbors(NodeId v) const {
    check_node(v);
    return adj_[static_cast<size_t>(v)];
  }

  std::vector<NodeId> node_list() const { return present_.to_vector(); }

  std::vector<std::pair<NodeId, NodeId>> edge_list() const {
    std::vector<std::pair<NodeId, NodeId>> out;
    out.reserve(static_cast<size_t>(edges_));
    for (NodeId u : present_)
      for (NodeId v : adj_[static_cast<size_t>(u)])
        if (v > u) out.emplace_back(u, v);
    return out;
  }

  void set_cost(NodeId v, double c) {
    check_node(v);
    if (!(c > 0))
      throw std::invalid_argument("cost of node " + std::to_string(v) +
                                  " must be positive");
    cost_[static_cast<size_t>(v)] = c;
  }
  double cost(NodeId v) const {
    check_node(v);
    return cost_[static_cast<size_t>(v)];
  }

  void set_domain_size(NodeId v, int d) {
    check_node(v);
    if (d < 1)
      throw std::invalid_argument("domain size of node " + std::to_string(v) +
                                  " must be >= 1");
    domain_[static_cast<size_t>(v)] = d;
  }
  int domain_size(NodeId v) const {
    check_node(v);
    return domain_[static_cast<size_t>(v)];
  }

  // Induced subgraph on the present nodes minus `removed`. Ids stay stable.
  Graph without(const Bitset& removed) const {
    Graph out(*this);
    for (NodeId v : removed) {
      if (!has_node(v))
        throw std::invalid_argument("unknown node " + std::to_string(v));
      out.present_.reset(v);
      out.adj_[static_cast<size_t>(v)] = Bitset(universe_);
      --out.count_;
    }
    int halved = 0;
    for (NodeId u : out.present_) {
      out.adj_[static_cast<size_t>(u)].subtract(removed);
      halved += out.adj_[static_cast<size_t>(u)].count();
    }
    out.edges_ = halved / 2;
    return out;
  }

  bool operator==(const Graph&) const = default;

private:
  void check_node(NodeId v) const {
    if (!has_node(v))
      throw std::invalid_argument("unknown node " + std::to_string(v));
  }

  int universe_ = 0;
  int count_ = 0;
  int edges_ = 0;
  Bitset present_;
  std::vector<Bitset> adj_;
  std::vector<double> cost_;
  std::vector<int> domain_;
};

inline Graph remove_nodes(const Graph& g, const std::vector<NodeId>& s) {
  Bitset removed(g.universe());
  for (NodeId v : s) {
    if (!g.has_node(v))
      throw std::invalid_argument("unknown node " + std::to_string(v));
    removed.set(v);
  }
  return g.without(removed);
}

// Repeatedly deletes nodes of degree <= 1. Such nodes can never be part of a
// useful cutset: they sit in no cycle, so removing them cannot lower width.
inline Graph prune_degree_le1(const Graph& g) {
  Graph out = g;
  for (;;) {
    Bitset victims(out.universe());
    bool found = false;
    for (NodeId v : out.nodes())
      if (out.degree(v) <= 1) {
        victims.set(v);
        found = true;
      }
    if (!found) return out;
    out = out.without(victims);
  }
}

// Directed-acyclic structure of a Bayes net: parent lists plus domain sizes,
// one entry per variable. Tables are irrelevant for width questions.
struct BayesNetStructure {
  std::vector<std::vector<NodeId>> parents;
  std::vector<int> domain_size;

  int variable_count() const { return static_cast<int>(parents.size()); }
};

// Moral graph: skeleton edges plus a clique over each family (parents and
// child pairwise connected). Domain sizes carry over; costs default to 1.
inline Graph moralize(const BayesNetStructure& bn) {
  const int n = bn.variable_count();
  if (static_cast<int>(bn.domain_size.size()) != n)
    throw std::invalid_argument("domain list does not match variable count");

  for (int v = 0; v < n; ++v) {
    Bitset seen(n);
    for (NodeId p : bn.parents[static_cast<size_t>(v)]) {
      if (p < 0 || p >= n)
        throw std::invalid_argument("variable " + std::to_string(v) +
                                    " has unknown parent " + std::to_string(p));
      if (p == v)
        throw std::invalid_argument("variable " + std::to_string(v) +
                                    " is its own parent");
      if (seen.test(p))
        throw std::invalid_argument("variable " + std::to_string(v) +
                                    " lists parent " + std::to_string(p) +
                                    " twice");
      seen.set(p);
    }
  }

  // Kahn's algorithm over parent -> child arcs; leftovers witness a cycle.
  std::vector<int> unmet(static_cast<size_t>(n), 0);
  std::vector<std::vector<NodeId>> children(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) {
    unmet[static_cast<size_t>(v)] =
        static_cast<int>(bn.parents[static_cast<size_t>(v)].size());
    for (NodeId p : bn.parents[static_cast<size_t>(v)])
      children[static_cast<size_t>(p)].push_back(v);
  }
  std::queue<int> ready;
  for (int v = 0; v < n; ++v)
    if (unmet[static_cast<size_t>(v)] == 0) ready.push(v);
  int done = 0;
  while (!ready.empty()) {
    int v = ready.front();
    ready.pop();
    ++done;
    for (NodeId c : children[static_cast<size_t>(v)])
      if (--unmet[static_cast<size_t>(c)] == 0) ready.push(c);
  }
  if (done != n)
    for (int v = 0; v < n; ++v)
      if (unmet[static_cast<size_t>(v)] > 0)
        throw std::invalid_argument("parent relation is cyclic at variable " +
                                    std::to_string(v));

  Graph g(n);
  for (int v = 0; v < n; ++v) g.set_domain_size(v, bn.domain_size[static_cast<size_t>(v)]);
  auto ensure = [&g](NodeId a, NodeId b) {
    if (!g.has_edge(a, b)) g.add_edge(a, b);
  };
  for (int v = 0; v < n; ++v) {
    const auto& ps = bn.parents[static_cast<size_t>(v)];
    for (size_t i = 0; i < ps.size(); ++i) {
      ensure(ps[i], v);
      for (size_t j = i + 1; j < ps.size(); ++j) ensure(ps[i], ps[j]);
    }
  }
  return g;
}

}  // namespace wcutset
