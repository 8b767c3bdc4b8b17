#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "graphinsight/answer.hpp"
#include "graphinsight/tasks.hpp"

namespace graphinsight {

/// Parses free-form answer text into a typed answer. Booleans take the last
/// case-insensitive yes/no token, numbers the last numeric literal, set
/// types the last bracketed list. A failed parse is a recorded outcome, not
/// an exception.
std::optional<TypedAnswer> parse_answer(const std::string& text, AnswerType type);

/// Score in [0, 1]: booleans exact-match, numbers 1 - |a-b|/max(a, b)
/// clamped to [0, 1] (1 when both are 0), set types Jaccard overlap (1 when
/// both empty). A missing prediction scores 0. Throws on mismatched answer
/// variants.
double score(const std::optional<TypedAnswer>& pred, const TypedAnswer& truth);

struct ScoredTask {
  int task_id = 0;
  TaskKind kind = TaskKind::node_count;
  double value = 0.0;
};

struct RunMetadata {
  std::string method;
  std::string model;
  std::uint64_t seed = 0;
};

/// Means per kind, per level, and overall.
struct ScoreReport {
  RunMetadata metadata;
  std::vector<ScoredTask> per_task;
  std::map<std::string, double> per_kind;
  double macro_mean = 0.0;
  double micro_mean = 0.0;
  double overall = 0.0;
  std::size_t macro_n = 0;
  std::size_t micro_n = 0;

  nlohmann::json to_json() const;
  /// Aligned table with Overall / Macro / Micro rows and per-kind detail.
  std::string to_table() const;
};

/// Aggregates per-task scores; throws on empty input.
ScoreReport aggregate(const std::vector<ScoredTask>& scores, const RunMetadata& metadata);

}  // namespace graphinsight
