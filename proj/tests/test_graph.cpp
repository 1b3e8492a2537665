#include <catch2/catch_amalgamated.hpp>

#include "support/test_support.hpp"
#include "wcutset/graph.hpp"

using namespace wcutset;

namespace {

Graph four_cycle() {
  return testsup::make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
}

}  // namespace

TEST_CASE("graph construction and edges") {
  Graph g(3);
  CHECK(g.node_count() == 3);
  CHECK(g.edge_count() == 0);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  CHECK(g.edge_count() == 2);
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(1, 0));
  CHECK_FALSE(g.has_edge(0, 2));
  CHECK(g.degree(1) == 2);
  CHECK(g.degree(0) == 1);

  auto edges = g.edge_list();
  REQUIRE(edges.size() == 2);
  CHECK(edges[0] == std::pair<NodeId, NodeId>{0, 1});
  CHECK(edges[1] == std::pair<NodeId, NodeId>{1, 2});
}

TEST_CASE("graph rejects bad edges and nodes") {
  Graph g(3);
  g.add_edge(0, 1);
  CHECK_THROWS_AS(g.add_edge(0, 0), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(-1, 0), std::invalid_argument);
  CHECK_THROWS_AS(g.degree(5), std::invalid_argument);
}

TEST_CASE("graph costs and domain sizes") {
  Graph g(2);
  CHECK(g.cost(0) == 1.0);
  CHECK(g.domain_size(0) == 2);
  g.set_cost(0, 2.5);
  g.set_domain_size(1, 7);
  CHECK(g.cost(0) == 2.5);
  CHECK(g.domain_size(1) == 7);
  CHECK_THROWS_AS(g.set_cost(0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(g.set_cost(0, -1.0), std::invalid_argument);
  CHECK_THROWS_AS(g.set_domain_size(0, 0), std::invalid_argument);
  CHECK_THROWS_AS(g.set_cost(2, 1.0), std::invalid_argument);
}

TEST_CASE("remove_nodes keeps ids stable") {
  Graph g = four_cycle();
  Graph h = remove_nodes(g, {1});
  CHECK(h.node_count() == 3);
  CHECK(h.edge_count() == 2);
  CHECK(h.has_edge(0, 3));
  CHECK(h.has_edge(2, 3));
  CHECK_FALSE(h.has_node(1));
  CHECK(h.has_node(0));
  CHECK(h.universe() == 4);
  // original untouched
  CHECK(g.node_count() == 4);
  CHECK(g.has_edge(0, 1));
}

TEST_CASE("remove_nodes of nothing is identity") {
  Graph g = four_cycle();
  CHECK(remove_nodes(g, {}) == g);
}

TEST_CASE("remove_nodes from a complete graph") {
  Graph k4 = testsup::make_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  Graph h = remove_nodes(k4, {0, 1});
  CHECK(h.node_count() == 2);
  CHECK(h.edge_count() == 1);
  CHECK(h.has_edge(2, 3));
}

TEST_CASE("remove_nodes rejects unknown nodes") {
  Graph g = four_cycle();
  CHECK_THROWS_AS(remove_nodes(g, {4}), std::invalid_argument);
  Graph h = remove_nodes(g, {1});
  CHECK_THROWS_AS(remove_nodes(h, {1}), std::invalid_argument);
}

TEST_CASE("prune_degree_le1 eats trees entirely") {
  Graph tree = testsup::make_graph(5, {{0, 1}, {1, 2}, {1, 3}, {3, 4}});
  CHECK(prune_degree_le1(tree).node_count() == 0);
}

TEST_CASE("prune_degree_le1 strips a pendant off a cycle") {
  Graph g = testsup::make_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {2, 4}});
  Graph pruned = prune_degree_le1(g);
  CHECK(pruned.node_count() == 4);
  CHECK_FALSE(pruned.has_node(4));
  CHECK(pruned.edge_count() == 4);
}

TEST_CASE("prune_degree_le1 leaves min-degree-2 graphs alone") {
  Graph g = testsup::make_graph(
      5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});  // two triangles at 2
  CHECK(prune_degree_le1(g) == g);
}

TEST_CASE("moralize a chain adds no extra edges") {
  BayesNetStructure bn;
  bn.parents = {{}, {0}, {1}};
  bn.domain_size = {2, 3, 4};
  Graph g = moralize(bn);
  CHECK(g.edge_count() == 2);
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(1, 2));
  CHECK(g.domain_size(1) == 3);
  CHECK(g.domain_size(2) == 4);
  CHECK(g.cost(2) == 1.0);
}

TEST_CASE("moralize marries co-parents") {
  BayesNetStructure bn;
  bn.parents = {{}, {}, {0, 1}};
  bn.domain_size = {2, 2, 2};
  Graph g = moralize(bn);
  CHECK(g.edge_count() == 3);
  CHECK(g.has_edge(0, 2));
  CHECK(g.has_edge(1, 2));
  CHECK(g.has_edge(0, 1));
}

TEST_CASE("moralize rejects broken structures") {
  BayesNetStructure cyclic;
  cyclic.parents = {{2}, {0}, {1}};
  cyclic.domain_size = {2, 2, 2};
  CHECK_THROWS_WITH(moralize(cyclic),
                    Catch::Matchers::ContainsSubstring("cyclic"));

  BayesNetStructure self_parent;
  self_parent.parents = {{0}};
  self_parent.domain_size = {2};
  CHECK_THROWS_AS(moralize(self_parent), std::invalid_argument);

  BayesNetStructure repeated;
  repeated.parents = {{}, {0, 0}};
  repeated.domain_size = {2, 2};
  CHECK_THROWS_AS(moralize(repeated), std::invalid_argument);

  BayesNetStructure unknown;
  unknown.parents = {{5}};
  unknown.domain_size = {2};
  CHECK_THROWS_AS(moralize(unknown), std::invalid_argument);

  BayesNetStructure mismatched;
  mismatched.parents = {{}, {}};
  mismatched.domain_size = {2};
  CHECK_THROWS_AS(moralize(mismatched), std::invalid_argument);
}

TEST_CASE("moralize covers every family with a clique") {
  testsup::Rng rng(2024);
  for (int round = 0; round < 30; ++round) {
    int n = testsup::rand_int(rng, 1, 8);
    BayesNetStructure bn;
    bn.parents.resize(static_cast<size_t>(n));
    bn.domain_size.assign(static_cast<size_t>(n), 2);
    for (int v = 1; v < n; ++v) {
      int k = testsup::rand_int(rng, 0, std::min(3, v));
      std::vector<NodeId> pool(static_cast<size_t>(v));
      std::iota(pool.begin(), pool.end(), 0);
      for (int i = 0; i < k; ++i) {
        int j = testsup::rand_int(rng, i, v - 1);
        std::swap(pool[static_cast<size_t>(i)], pool[static_cast<size_t>(j)]);
        bn.parents[static_cast<size_t>(v)].push_back(pool[static_cast<size_t>(i)]);
      }
    }
    Graph g = moralize(bn);
    for (int v = 0; v < n; ++v) {
      const auto& ps = bn.parents[static_cast<size_t>(v)];
      for (size_t i = 0; i < ps.size(); ++i) {
        CHECK(g.has_edge(ps[i], v));
        for (size_t j = i + 1; j < ps.size(); ++j) CHECK(g.has_edge(ps[i], ps[j]));
      }
    }
  }
}
