#include <catch2/catch_amalgamated.hpp>

#include "support/test_support.hpp"
#include "wcutset/cutset.hpp"

using namespace wcutset;

namespace {

Graph four_cycle() {
  return testsup::make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
}

Graph complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

TreeDecomposition min_fill_td(const Graph& g) {
  return build_decomposition(g, min_fill_order(g));
}

}  // namespace

TEST_CASE("gwc removes the shared node of the 4-cycle clusters") {
  Graph g = four_cycle();
  TreeDecomposition td = min_fill_td(g);  // {0,1,3}, {1,2,3}
  Cutset c = gwc(td, g, 1, CostModel::Unit);
  // 1 and 3 sit in both oversized clusters; the id breaks the tie
  CHECK(c.members == std::vector<NodeId>{1});
  CHECK(c.cost == 1.0);
  CHECK(c.algorithm == CutsetAlgorithm::Gwc);
  CHECK(verify_wcutset_td(td, c.members, 1));
}

TEST_CASE("gwc is empty when no cluster is oversized") {
  Graph g = four_cycle();
  TreeDecomposition td = min_fill_td(g);
  CHECK(gwc(td, g, 2, CostModel::Unit).members.empty());
  CHECK(gwc(td, g, 5, CostModel::Unit).members.empty());
}

TEST_CASE("gwc trims a single big cluster one node at a time") {
  Graph g = complete(5);
  TreeDecomposition td = min_fill_td(g);  // one cluster of size 5
  Cutset c = gwc(td, g, 2, CostModel::Unit);
  CHECK(c.members == std::vector<NodeId>{0, 1});
}

TEST_CASE("gwc follows costs before membership") {
  Graph g = complete(4);
  g.set_cost(0, 10.0);
  g.set_cost(2, 0.5);
  TreeDecomposition td = min_fill_td(g);
  Cutset c = gwc(td, g, 2, CostModel::Unit);
  CHECK(c.members == std::vector<NodeId>{2});
  CHECK(c.cost == 0.5);
}

TEST_CASE("gwc validates its arguments") {
  Graph g = four_cycle();
  TreeDecomposition td = min_fill_td(g);
  CHECK_THROWS_AS(gwc(td, g, 0, CostModel::Unit), std::invalid_argument);
  CHECK_THROWS_AS(gwc(td, g, 1, CostModel::Unit, CutsetAlgorithm::Mga),
                  std::invalid_argument);
  TreeDecomposition bad;
  bad.clusters = {{0, 9}};
  CHECK_THROWS_AS(gwc(bad, g, 1, CostModel::Unit), std::invalid_argument);
}

TEST_CASE("gwc variants differ exactly in their tie-breaks") {
  // K4 on 0..3 plus a triangle 1-4-5: one oversized cluster at w=2, and the
  // ratio ties across its four members.
  Graph g = testsup::make_graph(6, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3},
                                    {2, 3}, {1, 4}, {1, 5}, {4, 5}});
  TreeDecomposition td = min_fill_td(g);  // {0,1,2,3} and {1,4,5}
  REQUIRE(td.clusters.size() == 2);

  // membership over all clusters: node 1 is in both
  Cutset a = gwc(td, g, 2, CostModel::Unit, CutsetAlgorithm::Gwca);
  CHECK(a.members == std::vector<NodeId>{1});
  CHECK(a.algorithm == CutsetAlgorithm::Gwca);

  // membership over maximum-size clusters only: flat, id wins
  Cutset m = gwc(td, g, 2, CostModel::Unit, CutsetAlgorithm::Gwcm);
  CHECK(m.members == std::vector<NodeId>{0});

  // degree in the pruned residual: node 1 has degree 5
  Cutset d = gwc(td, g, 2, CostModel::Unit, CutsetAlgorithm::Gwcd);
  CHECK(d.members == std::vector<NodeId>{1});

  for (const Cutset& c : {a, m, d})
    CHECK(verify_wcutset_graph(g, c.members, 2, VerifyMode::Exact));
}

TEST_CASE("rebuild variants stop against the residual graph") {
  // two 4-cycles sharing node 0: the no-rebuild run can only shrink the
  // original clusters, rebuilds re-decompose the remaining graph
  Graph g = testsup::make_graph(
      7, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {4, 5}, {5, 6}, {6, 0}});
  TreeDecomposition td = min_fill_td(g);
  for (auto variant : {CutsetAlgorithm::Gwc, CutsetAlgorithm::Gwca,
                       CutsetAlgorithm::Gwcm, CutsetAlgorithm::Gwcd}) {
    Cutset c = gwc(td, g, 1, CostModel::Unit, variant);
    CHECK(verify_wcutset_graph(g, c.members, 1, VerifyMode::Exact));
  }
}

TEST_CASE("mga leaves low-width graphs alone") {
  Graph tree = testsup::make_graph(5, {{0, 1}, {1, 2}, {1, 3}, {3, 4}});
  CHECK(mga(tree, 1, CostModel::Unit).members.empty());
  CHECK(mga(four_cycle(), 2, CostModel::Unit).members.empty());
}

TEST_CASE("mga on the 4-cycle picks by oversized-cluster membership") {
  // all degrees tie at 2; nodes 1 and 3 sit in both oversized clusters of
  // the current decomposition, so the id picks 1
  Cutset c = mga(four_cycle(), 1, CostModel::Unit);
  CHECK(c.members == std::vector<NodeId>{1});
  CHECK(c.algorithm == CutsetAlgorithm::Mga);
}

TEST_CASE("mga on K5 needs two nodes for w=2") {
  Cutset c = mga(complete(5), 2, CostModel::Unit);
  CHECK(c.members == std::vector<NodeId>{0, 1});
}

TEST_CASE("mga prefers cheap high-degree nodes") {
  // wheel: hub 0 touches everything; spokes form a cycle
  Graph g = testsup::make_graph(
      5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {2, 3}, {3, 4}, {4, 1}});
  Cutset c = mga(g, 1, CostModel::Unit);
  REQUIRE(!c.members.empty());
  CHECK(c.members[0] == 0);  // degree 4 beats degree 3 at equal cost
  CHECK(verify_wcutset_graph(g, c.members, 1, VerifyMode::Exact));

  Graph pricey = g;
  pricey.set_cost(0, 100.0);
  Cutset c2 = mga(pricey, 1, CostModel::Unit);
  CHECK(std::find(c2.members.begin(), c2.members.end(), 0) == c2.members.end());
}

TEST_CASE("mga rejects w below 1") {
  CHECK_THROWS_AS(mga(four_cycle(), 0, CostModel::Unit), std::invalid_argument);
}

TEST_CASE("dgr leaves low-width graphs alone") {
  Graph star = testsup::make_graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  star.set_domain_size(0, 4);
  CHECK(dgr(star, 1, CostModel::Unit).members.empty());
}

TEST_CASE("dgr cuts K4 down to an edge at w=1") {
  Cutset c = dgr(complete(4), 1, CostModel::Unit);
  CHECK(c.members == std::vector<NodeId>{0, 1});
  CHECK(c.algorithm == CutsetAlgorithm::Dgr);
}

TEST_CASE("dgr targets nodes with heavy neighborhoods") {
  Graph g = four_cycle();
  g.set_domain_size(1, 8);
  g.set_domain_size(3, 8);
  // cutting is forced at w=1; 0 and 2 see domain products of 64
  Cutset c = dgr(g, 1, CostModel::Unit);
  CHECK(c.members == std::vector<NodeId>{0});
  CHECK(verify_wcutset_graph(g, c.members, 1, VerifyMode::Exact));
}

TEST_CASE("dgr rejects w below 1") {
  CHECK_THROWS_AS(dgr(four_cycle(), 0, CostModel::Unit), std::invalid_argument);
}

TEST_CASE("verify_wcutset_td checks residual cluster sizes") {
  TreeDecomposition td;
  td.clusters = {{0, 1, 3}, {1, 2, 3}};
  td.tree_edges = {{0, 1}};
  td.width = 2;
  CHECK(verify_wcutset_td(td, {1}, 1));
  CHECK_FALSE(verify_wcutset_td(td, {}, 1));
  CHECK(verify_wcutset_td(td, {}, 2));
}

TEST_CASE("verify_wcutset_graph in both modes") {
  Graph g = four_cycle();
  CHECK(verify_wcutset_graph(g, {1}, 1, VerifyMode::Exact));
  CHECK_FALSE(verify_wcutset_graph(g, {}, 1, VerifyMode::Exact));
  CHECK(verify_wcutset_graph(g, {1}, 1, VerifyMode::Heuristic));
  CHECK_FALSE(verify_wcutset_graph(g, {}, 1, VerifyMode::Heuristic));
  CHECK(verify_wcutset_graph(complete(4), {0}, 2, VerifyMode::Exact));
  CHECK_THROWS_AS(verify_wcutset_graph(Graph(20), {}, 1, VerifyMode::Exact),
                  CapacityError);
  CHECK(verify_wcutset_graph(Graph(20), {}, 1, VerifyMode::Heuristic));
}

TEST_CASE("cutset_cost sums the chosen model") {
  Graph g(3);
  g.set_domain_size(0, 4);
  g.set_cost(1, 2.5);
  CHECK(cutset_cost(g, {}, CostModel::Unit) == 0.0);
  CHECK(cutset_cost(g, {0, 1}, CostModel::Unit) == 3.5);
  CHECK(cutset_cost(g, {0}, CostModel::LogDomain) == 2.0);
  CHECK(cutset_cost(g, {0}, CostModel::Domain) == 4.0);
  CHECK(cutset_cost(g, {0, 2}, CostModel::Domain) == 6.0);
  CHECK_THROWS_AS(cutset_cost(g, {3}, CostModel::Unit), std::invalid_argument);
}

TEST_CASE("find_wcutset dispatches and tags every algorithm") {
  Graph g = four_cycle();
  for (auto alg : {CutsetAlgorithm::Gwc, CutsetAlgorithm::Gwca,
                   CutsetAlgorithm::Gwcm, CutsetAlgorithm::Gwcd,
                   CutsetAlgorithm::Mga, CutsetAlgorithm::Dgr,
                   CutsetAlgorithm::Exact}) {
    Cutset c = find_wcutset(g, alg, 1, CostModel::Unit);
    CHECK(c.algorithm == alg);
    CHECK(c.size() == 1);  // one node opens any 4-cycle
    CHECK(verify_wcutset_graph(g, c.members, 1, VerifyMode::Exact));
  }
}
