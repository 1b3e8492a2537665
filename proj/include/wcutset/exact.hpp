#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "wcutset/cutset_types.hpp"
#include "wcutset/errors.hpp"
#include "wcutset/graph.hpp"
#include "wcutset/smc.hpp"
#include "wcutset/tree_decomposition.hpp"

namespace wcutset {

// Hard ceilings for the brute-force oracles; each routine refuses larger
// inputs with a CapacityError instead of running for hours.
struct OracleLimits {
  int max_nodes_treewidth = 18;
  int max_nodes_cutset = 14;
  int max_sets_smc = 20;
};

namespace detail {

// Compact relabeling of the present nodes so subsets fit in one machine word.
struct CompactGraph {
  std::vector<NodeId> label;        // compact index -> original id
  std::vector<std::uint32_t> adj;   // compact adjacency masks
  int n = 0;

  explicit CompactGraph(const Graph& g) : n(g.node_count()) {
    label = g.node_list();
    std::vector<int> back(static_cast<size_t>(g.universe()), -1);
    for (int i = 0; i < n; ++i) back[static_cast<size_t>(label[static_cast<size_t>(i)])] = i;
    adj.assign(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i)
      for (NodeId u : g.neighbors(label[static_cast<size_t>(i)]))
        adj[static_cast<size_t>(i)] |= std::uint32_t{1} << back[static_cast<size_t>(u)];
  }

  // Size of the neighborhood, outside T and v itself, of v's connected
  // component within T + v. This is exactly the clique v would close over
  // when eliminated right after T in some order.
  int q(std::uint32_t t, int v) const {
    std::uint32_t reach = std::uint32_t{1} << v;
    std::uint32_t nb = adj[static_cast<size_t>(v)];
    for (;;) {
      std::uint32_t grow = nb & t & ~reach;
      if (!grow) break;
      reach |= grow;
      while (grow) {
        int u = std::countr_zero(grow);
        grow &= grow - 1;
        nb |= adj[static_cast<size_t>(u)];
      }
    }
    return std::popcount(nb & ~t & ~(std::uint32_t{1} << v));
  }
};

// Treewidth via the elimination-order recurrence over vertex subsets:
// tw(S) = min over v in S of max(tw(S - v), q(S - v, v)).
inline int subset_treewidth(const CompactGraph& cg, std::uint32_t full) {
  const int n = cg.n;
  std::vector<std::int8_t> tw(std::size_t{1} << n, 0);
  tw[0] = -1;
  for (std::uint32_t s = 1; s <= full; ++s) {
    if (s & ~full) continue;
    int best = std::numeric_limits<int>::max();
    std::uint32_t rest = s;
    while (rest) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      std::uint32_t t = s & ~(std::uint32_t{1} << v);
      int cand = std::max(static_cast<int>(tw[t]), cg.q(t, v));
      best = std::min(best, cand);
    }
    tw[s] = static_cast<std::int8_t>(best);
  }
  return tw[full];
}

// Can the nodes of `scope` be eliminated without any step closing a clique
// larger than w+1? Forward reachability over feasible prefixes; `stamp`
// avoids clearing the table between calls.
class ThresholdFeasibility {
public:
  explicit ThresholdFeasibility(int n)
      : mark_(std::size_t{1} << n, 0) {}

  bool eliminable(const CompactGraph& cg, std::uint32_t scope, int w) {
    ++generation_;
    if (scope == 0) return true;
    mark_[0] = generation_;
    // Ascending submask walk: s' = (s - scope) & scope visits submasks of
    // `scope` in increasing numeric order, so prefixes are done before use.
    std::uint32_t s = 0;
    for (;;) {
      if (mark_[s] == generation_) {
        std::uint32_t rest = scope & ~s;
        while (rest) {
          int v = std::countr_zero(rest);
          rest &= rest - 1;
          if (q_restricted(cg, scope, s, v) <= w) {
            std::uint32_t next = s | (std::uint32_t{1} << v);
            if (next == scope) return true;
            mark_[next] = generation_;
          }
        }
      }
      if (s == scope) break;
      s = (s - scope) & scope;
    }
    return mark_[scope] == generation_;
  }

private:
  // q computed inside the induced subgraph on `scope`.
  static int q_restricted(const CompactGraph& cg, std::uint32_t scope,
                          std::uint32_t t, int v) {
    std::uint32_t reach = std::uint32_t{1} << v;
    std::uint32_t nb = cg.adj[static_cast<size_t>(v)] & scope;
    for (;;) {
      std::uint32_t grow = nb & t & ~reach;
      if (!grow) break;
      reach |= grow;
      while (grow) {
        int u = std::countr_zero(grow);
        grow &= grow - 1;
        nb |= cg.adj[static_cast<size_t>(u)] & scope;
      }
    }
    return std::popcount(nb & ~t & ~(std::uint32_t{1} << v));
  }

  std::vector<std::uint32_t> mark_;
  std::uint32_t generation_ = 0;
};

}  // namespace detail

// Exact treewidth; -1 for the empty graph. Dynamic program over all vertex
// subsets, so refuse anything beyond the oracle limit.
inline int exact_treewidth(const Graph& g, const OracleLimits& lim = {}) {
  const int n = g.node_count();
  if (n == 0) return -1;
  if (n > lim.max_nodes_treewidth)
    throw CapacityError("graph has " + std::to_string(n) +
                        " nodes, treewidth oracle allows " +
                        std::to_string(lim.max_nodes_treewidth));
  detail::CompactGraph cg(g);
  std::uint32_t full =
      n == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1;
  return detail::subset_treewidth(cg, full);
}

// Minimum-cost w-cutset by candidate enumeration in (cost, lexicographic)
// order; the first subset whose removal is w-eliminable wins, which makes the
// result deterministic as well as optimal.
inline Cutset exact_min_wcutset(const Graph& g, int w, CostModel cm,
                                const OracleLimits& lim = {}) {
  if (w < 1) throw std::invalid_argument("w must be >= 1");
  const int n = g.node_count();
  if (n > lim.max_nodes_cutset)
    throw CapacityError("graph has " + std::to_string(n) +
                        " nodes, cutset oracle allows " +
                        std::to_string(lim.max_nodes_cutset));

  Cutset out;
  out.w = w;
  out.algorithm = CutsetAlgorithm::Exact;
  if (n == 0) return out;

  detail::CompactGraph cg(g);
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;

  // Removing one node lowers treewidth by at most one, so every w-cutset has
  // at least tw - w nodes; skipping smaller candidates saves the bulk of the
  // enumeration on dense graphs.
  const int tw = detail::subset_treewidth(cg, full);
  const int min_size = std::max(0, tw - w);

  std::vector<double> cost(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i)
    cost[static_cast<size_t>(i)] = node_cost(g, cg.label[static_cast<size_t>(i)], cm);

  std::vector<std::uint32_t> candidates;
  candidates.reserve(std::size_t{1} << n);
  for (std::uint32_t c = 0; c <= full; ++c)
    if (std::popcount(c) >= min_size) candidates.push_back(c);

  std::vector<double> mask_cost(candidates.size());
  for (size_t i = 0; i < candidates.size(); ++i) {
    double total = 0.0;
    std::uint32_t c = candidates[i];
    while (c) {
      int v = std::countr_zero(c);
      c &= c - 1;
      total += cost[static_cast<size_t>(v)];
    }
    mask_cost[i] = total;
  }
  std::vector<std::uint32_t> idx(candidates.size());
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<std::uint32_t>(i);
  auto members_of = [](std::uint32_t mask) {
    std::vector<int> m;
    while (mask) {
      m.push_back(std::countr_zero(mask));
      mask &= mask - 1;
    }
    return m;
  };
  std::sort(idx.begin(), idx.end(), [&](std::uint32_t a, std::uint32_t b) {
    if (mask_cost[a] != mask_cost[b]) return mask_cost[a] < mask_cost[b];
    return members_of(candidates[a]) < members_of(candidates[b]);
  });

  detail::ThresholdFeasibility feas(n);
  for (std::uint32_t i : idx) {
    const std::uint32_t c = candidates[i];
    if (feas.eliminable(cg, full & ~c, w)) {
      for (int v : members_of(c)) out.members.push_back(cg.label[static_cast<size_t>(v)]);
      std::sort(out.members.begin(), out.members.end());
      out.cost = cutset_cost(g, out.members, cm);
      return out;
    }
  }
  // min_size 0 includes the full node set, whose residual is empty and
  // trivially eliminable, so the loop always returns.
  throw std::logic_error("cutset enumeration exhausted");
}

// Minimum-cost multi-cover by include-first branch and bound over sets in id
// order. Strict-improvement pruning keeps the first minimum found, which is
// the lexicographically smallest one.
inline std::vector<SetId> exact_min_cover(const SMCInstance& inst,
                                          const OracleLimits& lim = {}) {
  auto elem_index = detail::check_smc(inst);
  const int m = static_cast<int>(inst.sets.size());
  if (m > lim.max_sets_smc)
    throw CapacityError("instance has " + std::to_string(m) +
                        " sets, cover oracle allows " +
                        std::to_string(lim.max_sets_smc));
  if (!detail::smc_feasible(inst, elem_index))
    throw std::invalid_argument("instance is not coverable");

  const int ne = static_cast<int>(inst.elements.size());
  // remaining[i][e]: how many of sets i.. cover element e
  std::vector<std::vector<int>> remaining(
      static_cast<size_t>(m + 1), std::vector<int>(static_cast<size_t>(ne), 0));
  for (int i = m - 1; i >= 0; --i) {
    remaining[static_cast<size_t>(i)] = remaining[static_cast<size_t>(i + 1)];
    for (ElementId e : inst.sets[static_cast<size_t>(i)].elements)
      ++remaining[static_cast<size_t>(i)][static_cast<size_t>(elem_index.at(e))];
  }

  std::vector<int> deficit(static_cast<size_t>(ne));
  for (int e = 0; e < ne; ++e)
    deficit[static_cast<size_t>(e)] = inst.elements[static_cast<size_t>(e)].requirement;

  std::vector<SetId> best;
  double best_cost = std::numeric_limits<double>::infinity();
  std::vector<SetId> chosen;

  auto covered = [&deficit]() {
    for (int d : deficit)
      if (d > 0) return false;
    return true;
  };

  std::function<void(int, double)> walk = [&](int i, double cost_so_far) {
    if (cost_so_far >= best_cost) return;
    if (covered()) {
      best = chosen;
      best_cost = cost_so_far;
      return;
    }
    if (i == m) return;
    for (int e = 0; e < ne; ++e)
      if (deficit[static_cast<size_t>(e)] > remaining[static_cast<size_t>(i)][static_cast<size_t>(e)])
        return;

    const SMCSet& s = inst.sets[static_cast<size_t>(i)];
    chosen.push_back(s.id);
    for (ElementId e : s.elements) --deficit[static_cast<size_t>(elem_index.at(e))];
    walk(i + 1, cost_so_far + s.cost);
    for (ElementId e : s.elements) ++deficit[static_cast<size_t>(elem_index.at(e))];
    chosen.pop_back();

    walk(i + 1, cost_so_far);
  };
  walk(0, 0.0);
  return best;
}

}  // namespace wcutset
