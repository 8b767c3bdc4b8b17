#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "graphinsight/answer.hpp"
#include "graphinsight/graph.hpp"

namespace graphinsight {

/// The benchmark question kinds: 5 macro kinds about global structure and
/// 17 micro kinds about local structure, 9 of which chain several lookup
/// steps (composite).
enum class TaskKind {
  // macro
  node_count,
  is_connected,
  has_cycle,
  max_edge_weight,
  top_k_degrees,
  // micro
  direct_connection,
  degree,
  is_leaf,
  even_degree,
  neighbors,
  common_neighbors,
  degree_greater,
  edge_weight,
  // micro, composite
  connected_edges,
  complete_subgraph,
  highest_degree_nn,
  k_order_neighbors,
  neighbors_connected_to,
  triangles,
  neighbor_pairs,
  edge_common_neighbors,
  common_k_order,
};

std::vector<TaskKind> all_task_kinds();
std::string to_string(TaskKind k);
TaskKind task_kind_from_string(const std::string& s);

enum class TaskLevel { macro, micro };
TaskLevel level_of(TaskKind k);
bool is_composite(TaskKind k);

AnswerType answer_type_of(TaskKind k);

/// Parameter slots; which ones are set depends on the kind.
struct TaskParams {
  std::optional<NodeId> u;
  std::optional<NodeId> v;
  std::optional<int> k;
  std::vector<NodeId> node_list;

  bool operator==(const TaskParams&) const = default;

  nlohmann::json to_json() const;
  static TaskParams from_json(const nlohmann::json& j);
};

/// Question text for a kind, parameters filled into the fixed template.
std::string render_question(TaskKind kind, const TaskParams& params);

/// Answer-format line appended after the question. Empty for kinds whose
/// template already embeds the instruction.
std::string format_instruction(TaskKind kind);

/// Ground truth for the task on `g`, computed exactly.
TypedAnswer answer_task(const Graph& g, TaskKind kind, const TaskParams& params);

struct Task {
  int id = 0;
  int graph_id = 0;
  TaskKind kind = TaskKind::node_count;
  TaskParams params;
  std::string question;
  TypedAnswer truth;

  AnswerType answer_type() const { return answer_type_of(kind); }
  TaskLevel level() const { return level_of(kind); }
};

/// Builds a task with its question rendered and truth computed.
Task make_task(int id, int graph_id, const Graph& g, TaskKind kind, const TaskParams& params);

}  // namespace graphinsight
