#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "graphinsight/graph.hpp"
#include "graphinsight/tasks.hpp"

namespace graphinsight {

/// Random-graph recipe. Each component gets a spanning tree (so components
/// are internally connected) plus density-probability extra edges; self
/// loops and duplicate edges are injected afterwards. Fully deterministic
/// under `seed`.
struct GenConfig {
  int node_count_min = 15;
  int node_count_max = 200;
  int component_min = 1;
  int component_max = 3;
  double edge_density = 0.1;
  int weight_min = 1;
  int weight_max = 5;
  double self_loop_prob = 0.05;
  double multi_edge_prob = 0.05;
  std::uint64_t seed = 0;

  void validate() const;
};

Graph generate_graph(const GenConfig& cfg);

struct GeneratedTasks {
  std::vector<Task> tasks;
  std::vector<std::string> warnings;  // kinds skipped as unsamplable
};

/// Samples `per_kind` tasks for each requested kind, parameters uniform
/// under `seed`; questions render from the fixed templates and truths come
/// from the exact oracles. Kinds that cannot be sampled on this graph are
/// skipped with a warning record.
GeneratedTasks generate_tasks(const Graph& g, const std::vector<TaskKind>& kinds, int per_kind,
                              std::uint64_t seed, int graph_id = 0, int first_task_id = 0);

}  // namespace graphinsight
