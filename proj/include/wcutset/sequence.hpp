#pragma once

#include <limits>
#include <stdexcept>
#include <vector>

#include "wcutset/cutset.hpp"
#include "wcutset/cutset_types.hpp"
#include "wcutset/exact.hpp"
#include "wcutset/graph.hpp"
#include "wcutset/tree_decomposition.hpp"

namespace wcutset {

// The driver for choosing w in practice: f(w) = |C_w| + w approximates the
// exponent of the total work when the w-cutset is enumerated over and the
// rest is solved by conditioning on it, so the best w is wherever f bottoms
// out within the memory budget.
struct CutsetSequenceEntry {
  int w = 0;
  Cutset cutset;
  int f = 0;  // cutset size + w
};

struct CutsetSequence {
  CutsetAlgorithm algorithm = CutsetAlgorithm::Gwca;
  CostModel cost_model = CostModel::Unit;
  std::vector<CutsetSequenceEntry> entries;  // w = 1 .. max(1, width_of(g))
};

inline CutsetSequence cutset_sequence(const Graph& g, CutsetAlgorithm alg,
                                      CostModel cm, const OracleLimits& lim = {}) {
  CutsetSequence seq;
  seq.algorithm = alg;
  seq.cost_model = cm;
  const int last = std::max(1, width_of(g));
  seq.entries.reserve(static_cast<size_t>(last));
  for (int w = 1; w <= last; ++w) {
    Cutset c = find_wcutset(g, alg, w, cm, lim);
    int f = c.size() + w;
    seq.entries.push_back({w, std::move(c), f});
  }
  return seq;
}

struct FProfileEntry {
  int w = 0;
  int f = 0;
  bool plateau_with_next = false;  // f(w) == f(w+1)
};

inline std::vector<FProfileEntry> f_profile(const CutsetSequence& seq) {
  std::vector<FProfileEntry> out;
  out.reserve(seq.entries.size());
  for (size_t i = 0; i < seq.entries.size(); ++i) {
    bool plateau = i + 1 < seq.entries.size() &&
                   seq.entries[i].f == seq.entries[i + 1].f;
    out.push_back({seq.entries[i].w, seq.entries[i].f, plateau});
  }
  return out;
}

// Smallest w within the memory budget that minimizes f. When a plateau of
// equal f values fits under the bound, this lands on its left edge: the
// smaller conditioning space at equal total work.
inline int recommend_w(const CutsetSequence& seq, int space_bound) {
  if (space_bound < 1) throw std::invalid_argument("space bound must be >= 1");
  if (seq.entries.empty()) throw std::invalid_argument("empty sequence");
  int best_w = -1;
  int best_f = std::numeric_limits<int>::max();
  for (const auto& e : seq.entries) {
    if (e.w > space_bound) break;
    if (e.f < best_f) {
      best_f = e.f;
      best_w = e.w;
    }
  }
  if (best_w == -1) best_w = seq.entries.front().w;
  return best_w;
}

// Exact-sequence sanity property: with unit costs, f(w) = |C*_w| + w never
// increases as w grows, and at the true treewidth the cutset is empty so
// f(tw) = tw. Checked by brute force, hence oracle-limited.
inline bool staircase_check(const Graph& g, const OracleLimits& lim = {}) {
  if (g.node_count() > lim.max_nodes_cutset)
    throw CapacityError("graph has " + std::to_string(g.node_count()) +
                        " nodes, cutset oracle allows " +
                        std::to_string(lim.max_nodes_cutset));
  const int tw = exact_treewidth(g, lim);
  int prev = std::numeric_limits<int>::max();
  for (int w = 1; w <= tw; ++w) {
    Cutset c = exact_min_wcutset(g, w, CostModel::Unit, lim);
    const int f = c.size() + w;
    if (f > prev) return false;
    if (w == tw && c.size() != 0) return false;
    prev = f;
  }
  return true;
}

}  // namespace wcutset
