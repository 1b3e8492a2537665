#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "wcutset/graph.hpp"

namespace wcutset {

// What removing a node is charged. UNIT uses the node's stored cost (1 by
// default), the other two derive the charge from the node's domain size:
// LOG_DOMAIN approximates the memory exponent a variable contributes, DOMAIN
// the factor it contributes to a sampling space.
enum class CostModel { Unit, LogDomain, Domain };

inline double node_cost(const Graph& g, NodeId v, CostModel cm) {
  switch (cm) {
    case CostModel::Unit:
      return g.cost(v);
    case CostModel::LogDomain:
      return std::log2(static_cast<double>(g.domain_size(v)));
    case CostModel::Domain:
      return static_cast<double>(g.domain_size(v));
  }
  throw std::invalid_argument("unknown cost model");
}

inline std::string cost_model_name(CostModel cm) {
  switch (cm) {
    case CostModel::Unit:
      return "unit";
    case CostModel::LogDomain:
      return "logdom";
    case CostModel::Domain:
      return "dom";
  }
  return "?";
}

enum class CutsetAlgorithm { Gwc, Gwca, Gwcm, Gwcd, Mga, Dgr, Exact };

inline std::string algorithm_name(CutsetAlgorithm a) {
  switch (a) {
    case CutsetAlgorithm::Gwc:
      return "gwc";
    case CutsetAlgorithm::Gwca:
      return "gwca";
    case CutsetAlgorithm::Gwcm:
      return "gwcm";
    case CutsetAlgorithm::Gwcd:
      return "gwcd";
    case CutsetAlgorithm::Mga:
      return "mga";
    case CutsetAlgorithm::Dgr:
      return "dgr";
    case CutsetAlgorithm::Exact:
      return "exact";
  }
  return "?";
}

struct Cutset {
  std::vector<NodeId> members;  // ascending
  int w = 0;
  double cost = 0.0;
  CutsetAlgorithm algorithm = CutsetAlgorithm::Gwc;

  int size() const { return static_cast<int>(members.size()); }
};

inline double cutset_cost(const Graph& g, const std::vector<NodeId>& c,
                          CostModel cm) {
  double total = 0.0;
  for (NodeId v : c) {
    if (!g.has_node(v))
      throw std::invalid_argument("unknown node " + std::to_string(v));
    total += node_cost(g, v, cm);
  }
  return total;
}

}  // namespace wcutset
