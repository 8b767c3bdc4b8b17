#include <doctest.h>

#include "graphinsight/graph.hpp"
#include "testutil.hpp"

using namespace graphinsight;

TEST_CASE("edges require registered endpoints and positive weights") {
  Graph g(false);
  g.add_node(0);
  g.add_node(1);
  CHECK_THROWS_WITH(g.add_edge(0, 2, 1), "unknown node");
  CHECK_THROWS_AS(g.add_edge(0, 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(g.add_node(-1), std::invalid_argument);
  g.add_edge(0, 1, 3);
  CHECK(g.edge_count() == 1);
}

TEST_CASE("degree counts incidences; self-loops count twice") {
  Graph g = Graph::from_edges(false, {{0, 1, 1}, {0, 1, 2}, {2, 2, 1}}, {3});
  CHECK(g.degree(0) == 2);  // multi-edges count individually
  CHECK(g.degree(1) == 2);
  CHECK(g.degree(2) == 2);  // self-loop
  CHECK(g.degree(3) == 0);  // isolated
  CHECK_THROWS_WITH(g.degree(9), "unknown node");
}

TEST_CASE("neighbors are sorted and self appears only with a self-loop") {
  Graph g = Graph::from_edges(false, {{0, 2, 1}, {0, 1, 1}, {2, 2, 1}}, {5});
  CHECK(g.neighbors(0) == std::vector<NodeId>{1, 2});
  CHECK(g.neighbors(2) == std::vector<NodeId>{0, 2});
  CHECK(g.neighbors(5).empty());
}

TEST_CASE("first_edge_weight picks the first-inserted parallel edge") {
  Graph g = Graph::from_edges(false, {{0, 1, 5}, {1, 0, 2}});
  CHECK(g.first_edge_weight(0, 1) == 5);
  CHECK(g.first_edge_weight(1, 0) == 5);
  CHECK_FALSE(g.first_edge_weight(0, 0).has_value());
}

TEST_CASE("json round-trip is byte-stable and preserves edge order") {
  Graph g = testutil::clique_pair_a();
  const std::string once = g.to_json_string();
  Graph back = Graph::from_json_string(once);
  CHECK(back == g);
  CHECK(back.to_json_string() == once);
}

TEST_CASE("degree sum equals twice the edge count on random graphs") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    Graph g = testutil::small_random_graph(seed);
    long total = 0;
    for (NodeId v : g.nodes()) total += g.degree(v);
    CHECK(total == 2 * static_cast<long>(g.edge_count()));
  }
}
