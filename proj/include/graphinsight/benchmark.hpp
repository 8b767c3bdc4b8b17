#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "graphinsight/generate.hpp"
#include "graphinsight/graph.hpp"
#include "graphinsight/tasks.hpp"

namespace graphinsight {

/// A set of graphs plus the tasks posed over them. Task ids are unique and
/// ascending; graph ids index into `graphs`.
struct Benchmark {
  std::uint64_t seed = 0;
  std::vector<Graph> graphs;
  std::vector<Task> tasks;
  std::vector<std::string> warnings;

  const Graph& graph_of(const Task& t) const { return graphs.at(static_cast<std::size_t>(t.graph_id)); }
  std::size_t macro_count() const;
  std::size_t micro_count() const;
};

/// Generates `graph_count` graphs from the config (per-graph seeds derived
/// from cfg.seed) and `per_kind` tasks of each requested kind per graph.
Benchmark generate_benchmark(const GenConfig& cfg, int graph_count,
                             const std::vector<TaskKind>& kinds, int per_kind);

/// Writes dir/graphs.json and dir/tasks.jsonl (one task per line).
void save_benchmark(const Benchmark& b, const std::string& dir);

/// Reloads a saved benchmark. Malformed lines raise errors naming the line;
/// every stored truth and question is re-validated against the oracles and
/// templates.
Benchmark load_benchmark(const std::string& dir);

nlohmann::json task_to_json(const Task& t);
Task task_from_json(const nlohmann::json& j);

}  // namespace graphinsight
