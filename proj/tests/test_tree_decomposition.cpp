#include <catch2/catch_amalgamated.hpp>

#include "support/test_support.hpp"
#include "wcutset/tree_decomposition.hpp"

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

}  // namespace

TEST_CASE("min_fill_order on a path is lexicographic") {
  Graph g = testsup::make_graph(3, {{0, 1}, {1, 2}});
  CHECK(min_fill_order(g) == EliminationOrder{0, 1, 2});
}

TEST_CASE("min_fill_order on a 4-cycle starts at node 0") {
  EliminationOrder order = min_fill_order(four_cycle());
  REQUIRE(order.size() == 4);
  CHECK(order[0] == 0);  // every node fills 1; id breaks the tie
}

TEST_CASE("min_fill_order on a complete graph needs no fill") {
  Graph g = complete(4);
  CHECK(min_fill_order(g) == EliminationOrder{0, 1, 2, 3});
  CHECK(triangulate(g, min_fill_order(g)) == g);
}

TEST_CASE("triangulate adds the 4-cycle chord") {
  Graph g = four_cycle();
  Graph t = triangulate(g, {0, 1, 2, 3});
  CHECK(t.edge_count() == 5);
  CHECK(t.has_edge(1, 3));
}

TEST_CASE("triangulate leaves a chordal graph with a perfect order alone") {
  // triangle with a pendant; (3, 0, 1, 2) eliminates simplicial nodes only
  Graph g = testsup::make_graph(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
  CHECK(triangulate(g, {3, 0, 1, 2}) == g);
}

TEST_CASE("min-fill triangulation of a 5-cycle adds exactly two chords") {
  Graph g = testsup::make_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  CHECK(testsup::brute_min_fill(g) == 2);
  Graph t = triangulate(g, min_fill_order(g));
  CHECK(t.edge_count() == 7);
}

TEST_CASE("triangulate validates its order") {
  Graph g = four_cycle();
  CHECK_THROWS_AS(triangulate(g, {0, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(triangulate(g, {0, 1, 2, 2}), std::invalid_argument);
  CHECK_THROWS_AS(triangulate(g, {0, 1, 2, 4}), std::invalid_argument);
}

TEST_CASE("build_decomposition of the 4-cycle") {
  TreeDecomposition td = build_decomposition(four_cycle(), {0, 1, 2, 3});
  REQUIRE(td.clusters.size() == 2);
  CHECK(td.clusters[0] == std::vector<NodeId>{0, 1, 3});
  CHECK(td.clusters[1] == std::vector<NodeId>{1, 2, 3});
  REQUIRE(td.tree_edges.size() == 1);
  CHECK(td.tree_edges[0] == std::pair<ClusterId, ClusterId>{0, 1});
  CHECK(td.width == 2);
  CHECK(verify_decomposition(td, four_cycle()).ok);
}

TEST_CASE("build_decomposition of a single edge") {
  Graph g = testsup::make_graph(2, {{0, 1}});
  TreeDecomposition td = build_decomposition(g, {0, 1});
  REQUIRE(td.clusters.size() == 1);
  CHECK(td.clusters[0] == std::vector<NodeId>{0, 1});
  CHECK(td.width == 1);
  CHECK(td.tree_edges.empty());
}

TEST_CASE("build_decomposition of a complete graph is one cluster") {
  TreeDecomposition td = build_decomposition(complete(4), {0, 1, 2, 3});
  REQUIRE(td.clusters.size() == 1);
  CHECK(td.clusters[0].size() == 4);
  CHECK(td.width == 3);
}

TEST_CASE("build_decomposition joins disconnected components into one tree") {
  Graph g = testsup::make_graph(
      6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  TreeDecomposition td = build_decomposition(g, min_fill_order(g));
  CHECK(td.clusters.size() == 2);
  CHECK(td.tree_edges.size() == 1);
  CHECK(verify_decomposition(td, g).ok);
}

TEST_CASE("verify_decomposition flags each violation") {
  Graph path = testsup::make_graph(3, {{0, 1}, {1, 2}});

  SECTION("uncovered edge") {
    TreeDecomposition td;
    td.clusters = {{0, 1}, {2}};
    td.tree_edges = {{0, 1}};
    td.width = 1;
    auto check = verify_decomposition(td, path);
    CHECK_FALSE(check.ok);
    CHECK(check.violation == DecompositionViolation::EdgeUncovered);
  }

  SECTION("uncovered node") {
    Graph g(3);
    g.add_edge(0, 1);
    TreeDecomposition td;
    td.clusters = {{0, 1}};
    td.width = 1;
    auto check = verify_decomposition(td, g);
    CHECK_FALSE(check.ok);
    CHECK(check.violation == DecompositionViolation::NodeUncovered);
  }

  SECTION("running intersection broken") {
    Graph triangle = testsup::make_graph(3, {{0, 1}, {1, 2}, {0, 2}});
    TreeDecomposition td;
    td.clusters = {{0, 1}, {1, 2}, {0, 2}};
    td.tree_edges = {{0, 1}, {1, 2}};  // node 0 in both ends, not the middle
    td.width = 1;
    auto check = verify_decomposition(td, triangle);
    CHECK_FALSE(check.ok);
    CHECK(check.violation == DecompositionViolation::RunningIntersection);
  }

  SECTION("not a tree") {
    TreeDecomposition td;
    td.clusters = {{0, 1}, {1, 2}, {1}};
    td.tree_edges = {{0, 1}};
    td.width = 1;
    auto check = verify_decomposition(td, path);
    CHECK_FALSE(check.ok);
    CHECK(check.violation == DecompositionViolation::NotTree);
  }

  SECTION("wrong stored width") {
    TreeDecomposition td;
    td.clusters = {{0, 1}, {1, 2}};
    td.tree_edges = {{0, 1}};
    td.width = 3;
    auto check = verify_decomposition(td, path);
    CHECK_FALSE(check.ok);
    CHECK(check.violation == DecompositionViolation::WidthMismatch);
  }

  SECTION("unknown cluster member") {
    TreeDecomposition td;
    td.clusters = {{0, 1}, {1, 2, 7}};
    td.tree_edges = {{0, 1}};
    td.width = 2;
    auto check = verify_decomposition(td, path);
    CHECK_FALSE(check.ok);
    CHECK(check.violation == DecompositionViolation::ClusterMember);
  }
}

TEST_CASE("width_of standard shapes") {
  Graph edgeless(3);
  CHECK(width_of(edgeless) == 0);
  Graph tree = testsup::make_graph(5, {{0, 1}, {1, 2}, {1, 3}, {3, 4}});
  CHECK(width_of(tree) == 1);
  CHECK(width_of(four_cycle()) == 2);
  CHECK(width_of(Graph(0)) == -1);
}

TEST_CASE("augment_with_cutset adds the cutset everywhere") {
  TreeDecomposition residual;
  residual.clusters = {{0, 1}, {1, 2}};
  residual.tree_edges = {{0, 1}};
  residual.width = 1;
  TreeDecomposition out = augment_with_cutset(residual, {5, 3});
  REQUIRE(out.clusters.size() == 2);
  CHECK(out.clusters[0] == std::vector<NodeId>{0, 1, 3, 5});
  CHECK(out.clusters[1] == std::vector<NodeId>{1, 2, 3, 5});
  CHECK(out.width == 3);

  TreeDecomposition empty;
  TreeDecomposition only_cutset = augment_with_cutset(empty, {2, 0});
  REQUIRE(only_cutset.clusters.size() == 1);
  CHECK(only_cutset.clusters[0] == std::vector<NodeId>{0, 2});
  CHECK(only_cutset.width == 1);
}

TEST_CASE("decompositions from arbitrary orders verify") {
  testsup::Rng rng(77);
  for (int round = 0; round < 60; ++round) {
    int n = testsup::rand_int(rng, 1, 9);
    Graph g = testsup::random_graph(rng, n, testsup::rand_int(rng, 10, 90));
    std::vector<NodeId> order = g.node_list();
    for (size_t i = order.size(); i > 1; --i)
      std::swap(order[i - 1],
                order[static_cast<size_t>(testsup::rand_int(rng, 0, static_cast<int>(i) - 1))]);
    TreeDecomposition td = build_decomposition(g, order);
    auto check = verify_decomposition(td, g);
    INFO(check.detail);
    REQUIRE(check.ok);

    Graph t = triangulate(g, order);
    CHECK(testsup::is_peo_of(t, order));
  }
}
