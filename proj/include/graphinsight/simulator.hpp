#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>

#include "graphinsight/bias.hpp"
#include "graphinsight/graph.hpp"
#include "graphinsight/tasks.hpp"

namespace graphinsight {

/// A question recognized inside a prompt: either one of the benchmark task
/// kinds or the agent's frontier-expansion step form.
struct ParsedQuestion {
  bool frontier_step = false;
  std::set<NodeId> frontier;  // set for frontier steps
  TaskKind kind = TaskKind::node_count;
  TaskParams params;
};

/// Recognizes the templated question forms. Returns nullopt for anything
/// off-template.
std::optional<ParsedQuestion> parse_question(const std::string& question);

/// Step-question text used by the agent: "Which nodes are directly
/// connected to any of the nodes in [..]?"
std::string frontier_step_question(const std::set<NodeId>& frontier);

constexpr const char* kRefusalText = "I cannot answer this question.";

/// Deterministic responder with positional bias. Re-reads the prompt's own
/// description section, keeps each description line independently with
/// probability bias(position), always keeps "Relevant facts" lines, then
/// answers the prompt's final question by exact computation on the retained
/// subgraph plus facts (degree facts override recomputed degrees). The node
/// universe comes from `graph_context`; its edges are never consulted.
/// Identical (prompt, bias, seed) triples produce identical text.
std::string simulate_llm(const std::string& prompt, const Graph& graph_context,
                         const PositionalBiasModel& bias, std::uint64_t seed);

}  // namespace graphinsight
