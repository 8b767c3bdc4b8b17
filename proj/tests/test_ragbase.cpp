#include <doctest.h>

#include <nlohmann/json.hpp>

#include "graphinsight/pagerank.hpp"
#include "graphinsight/ragbase.hpp"
#include "testutil.hpp"

using namespace graphinsight;

namespace {

RegionLayout layout_of(const Graph& g, double alpha = 4.5, double beta = 10.5) {
  auto blocks = decompose(g, pagerank(g));
  return reorganize(blocks, alpha, beta).second;
}

}  // namespace

TEST_CASE("gamma bounds: everything, nothing, half") {
  Graph g = testutil::clique_pair_a();
  RegionLayout layout = layout_of(g);
  REQUIRE(layout.middle.size() >= 2);

  RagBase full = build_rag_base(layout, g, 100.0);
  std::size_t weak_edges = 0;
  for (const auto& b : layout.middle) weak_edges += b.size();
  CHECK(full.edge_store.size() == weak_edges);

  RagBase none = build_rag_base(layout, g, 0.0);
  CHECK(none.empty());

  RagBase half = build_rag_base(layout, g, 50.0);
  CHECK(half.retained_blocks == (layout.middle.size() + 1) / 2);
}

TEST_CASE("four weak blocks at gamma 50 keep the top two") {
  RegionLayout layout;
  layout.middle.resize(4);
  Graph g(false);
  for (NodeId v = 0; v < 8; ++v) g.add_node(v);
  for (int i = 0; i < 4; ++i) {
    layout.middle[static_cast<std::size_t>(i)].center = 2 * i;
    layout.middle[static_cast<std::size_t>(i)].importance = 1.0 - i * 0.1;
    g.add_edge(2 * i, 2 * i + 1, i + 1);
    layout.middle[static_cast<std::size_t>(i)].edges.push_back(g.edges().back());
    layout.middle[static_cast<std::size_t>(i)].edge_indices.push_back(static_cast<std::size_t>(i));
  }
  RagBase base = build_rag_base(layout, g, 50.0);
  CHECK(base.retained_blocks == 2);
  REQUIRE(base.edge_store.size() == 2);
  CHECK(base.edge_store[0].u == 0);
  CHECK(base.edge_store[1].u == 2);
}

TEST_CASE("stored degrees always match the full graph") {
  for (std::uint64_t seed = 500; seed < 520; ++seed) {
    Graph g = testutil::small_random_graph(seed, 25);
    RagBase base = build_rag_base(layout_of(g), g, 80.0);
    for (const auto& [v, d] : base.node_store) CHECK(d == g.degree(v));
    for (const Edge& e : base.edge_store) {
      CHECK(base.node_store.count(e.u));
      CHECK(base.node_store.count(e.v));
    }
  }
}

TEST_CASE("gamma is monotone in stored content") {
  Graph g = testutil::clique_pair_b();
  RegionLayout layout = layout_of(g);
  RagBase small = build_rag_base(layout, g, 30.0);
  RagBase large = build_rag_base(layout, g, 90.0);
  CHECK(small.edge_store.size() <= large.edge_store.size());
  for (const auto& [v, d] : small.node_store) {
    REQUIRE(large.node_store.count(v));
    CHECK(large.node_store.at(v) == d);
  }
  for (std::size_t i = 0; i < small.edge_store.size(); ++i)
    CHECK(small.edge_store[i] == large.edge_store[i]);
}

TEST_CASE("entity extraction matches the question grammar") {
  std::set<NodeId> known;
  for (NodeId v = 0; v <= 13; ++v) known.insert(v);

  CHECK(extract_entities("Is there a direct connection between node 8 and node 2?", known) ==
        std::set<NodeId>{2, 8});
  CHECK(extract_entities("Does this graph contain a cycle?", known).empty());
  CHECK(extract_entities("Given the nodes [0, 1, 6], determine if they form a complete subgraph",
                         known) == std::set<NodeId>{0, 1, 6});
  CHECK(extract_entities("Given the edge (8, 11), find all edges connected to it.", known) ==
        std::set<NodeId>{8, 11});
  CHECK(extract_entities("Do nodes 7 and 11 have any common neighbors?", known) ==
        std::set<NodeId>{7, 11});
  // unknown ids are dropped
  CHECK(extract_entities("What is the degree of node 99?", known).empty());
}

TEST_CASE("retrieval returns exact stored facts") {
  Graph g = testutil::clique_pair_a();
  RegionLayout layout;
  layout.middle = decompose(g, pagerank(g));  // everything weak for this test
  RagBase base = build_rag_base(layout, g, 100.0);

  Retrieval hit = retrieve(base, {12});
  CHECK(hit.node_hits.count({12, 6}) == 1);
  for (const auto& [u, v, w] : hit.edge_hits) CHECK((u == 12 || v == 12));

  CHECK(retrieve(base, {}).empty());

  Retrieval miss = retrieve(base, {999});
  CHECK(miss.node_hits.empty());
  CHECK(miss.edge_hits.empty());
}

TEST_CASE("retrieval completeness over the stored edges") {
  for (std::uint64_t seed = 530; seed < 545; ++seed) {
    Graph g = testutil::small_random_graph(seed, 20);
    RagBase base = build_rag_base(layout_of(g), g, 100.0);
    for (NodeId v : g.nodes()) {
      Retrieval r = retrieve(base, {v});
      std::size_t expected = 0;
      std::set<std::tuple<NodeId, NodeId, int>> distinct;
      for (const Edge& e : base.edge_store)
        if (e.u == v || e.v == v) distinct.insert({e.u, e.v, e.weight});
      expected = distinct.size();
      CHECK(r.edge_hits.size() == expected);
    }
  }
}

TEST_CASE("prompt assembly is deterministic and omits empty facts") {
  Retrieval empty;
  const std::string prompt =
      assemble_prompt(std::string("desc"), empty, "Q-text?", "Answer with a single number.");
  CHECK(prompt == "desc\n\nQ: Q-text?\nAnswer with a single number.");

  Retrieval facts;
  facts.node_hits.insert({12, 6});
  facts.edge_hits.insert({11, 12, 1});
  const std::string with_facts = assemble_prompt(std::string("desc"), facts, "Q-text?", "");
  CHECK(with_facts ==
        "desc\n\nRelevant facts:\nNode 12 has degree 6.\nEdge (11, 12) has weight 1.\n\nQ: Q-text?");

  // node facts sort ascending, then edge facts by endpoints
  Retrieval multi;
  multi.node_hits.insert({9, 6});
  multi.node_hits.insert({3, 2});
  multi.edge_hits.insert({4, 5, 1});
  multi.edge_hits.insert({2, 9, 3});
  const std::string text = render_facts(multi);
  CHECK(text ==
        "Relevant facts:\nNode 3 has degree 2.\nNode 9 has degree 6.\n"
        "Edge (2, 9) has weight 3.\nEdge (4, 5) has weight 1.");
}

TEST_CASE("rag base serializes to json and back") {
  Graph g = testutil::clique_pair_b();
  RagBase base = build_rag_base(layout_of(g), g, 80.0);
  RagBase back = RagBase::from_json(base.to_json());
  CHECK(back.gamma_pct == base.gamma_pct);
  CHECK(back.node_store == base.node_store);
  CHECK(back.edge_store.size() == base.edge_store.size());
}
