#pragma once

#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "graphinsight/description.hpp"
#include "graphinsight/graph.hpp"
#include "graphinsight/reorganize.hpp"

namespace graphinsight {

/// Exact store of weak-region structure: node degrees and edges taken from
/// the top gamma% of the middle-region blocks. Immutable after build.
struct RagBase {
  double gamma_pct = 0.0;
  std::map<NodeId, int> node_store;        // node -> full-graph degree
  std::vector<Edge> edge_store;            // weak-region edges, block order
  std::size_t retained_blocks = 0;

  bool empty() const { return node_store.empty() && edge_store.empty(); }

  nlohmann::json to_json() const;
  static RagBase from_json(const nlohmann::json& j);
};

/// Retains the top ceil(gamma% * block count) middle-region blocks of the
/// layout; stores their edges, and each incident node with its degree in
/// the full graph.
RagBase build_rag_base(const RegionLayout& layout, const Graph& g, double gamma_pct);

/// Node mentions found in a question: integers following "node"/"nodes"
/// (including ", and"-joined runs), bracketed integer lists, and
/// parenthesized integer tuples, intersected with the known node set.
std::set<NodeId> extract_entities(const std::string& question,
                                  const std::set<NodeId>& known_nodes);

struct Retrieval {
  std::set<NodeId> query_nodes;
  std::set<std::pair<NodeId, int>> node_hits;           // (node, degree)
  std::set<std::tuple<NodeId, NodeId, int>> edge_hits;  // (u, v, w)

  bool empty() const { return node_hits.empty() && edge_hits.empty(); }
};

/// Exact lookups: degrees of stored query nodes, and every stored edge
/// touching a query node.
Retrieval retrieve(const RagBase& base, const std::set<NodeId>& query_nodes);

constexpr const char* kFactsHeader = "Relevant facts:";

/// Fact lines in deterministic order: node facts ascending by id, then edge
/// facts by (u, v). Empty retrieval renders as an empty string.
std::string render_facts(const Retrieval& retrieval);

/// Description text, an optional facts section, the question, and an
/// optional answer-format instruction, in that order. Deterministic
/// byte-for-byte.
std::string assemble_prompt(const std::string& description_text, const Retrieval& retrieval,
                            const std::string& question, const std::string& format_instruction);
std::string assemble_prompt(const DescriptionSequence& description, const Retrieval& retrieval,
                            const std::string& question, const std::string& format_instruction);

}  // namespace graphinsight
