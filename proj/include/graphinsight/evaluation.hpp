#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "graphinsight/benchmark.hpp"
#include "graphinsight/client.hpp"
#include "graphinsight/ragbase.hpp"
#include "graphinsight/reorganize.hpp"
#include "graphinsight/scoring.hpp"
#include "graphinsight/wrappers.hpp"

namespace graphinsight {

enum class Ordering { raw, bfs, dfs, sp, importance };
enum class Format { sequential, adjacency_list, adjacency_matrix };

std::string to_string(Ordering o);
std::string to_string(Format f);

/// One cell of the method matrix: how the graph is rendered, which prompt
/// wrapper applies, and whether retrieval augmentation is active.
/// Constraints: importance ordering needs the sequential format; retrieval
/// needs importance ordering (its base is built from the region layout);
/// structural formats need raw ordering.
struct MethodSpec {
  Ordering ordering = Ordering::raw;
  Format format = Format::sequential;
  PromptWrapper wrapper = PromptWrapper::none;
  bool rag_enabled = false;
  double alpha_pct = 4.5;
  double beta_pct = 10.5;
  double gamma_pct = 80.0;
  double damping = 0.85;
  int max_iter = 100;
  double tol = 1e-8;

  void validate() const;
  /// "raw", "bfs", "al", "importance+rag", "raw+cot", ...
  std::string name() const;
  /// Parses a '+'-separated method name onto the given parameter values.
  static MethodSpec parse(const std::string& text, const MethodSpec& defaults);
  static MethodSpec parse(const std::string& text);
};

/// Everything derivable from (graph, method) once, reused across tasks:
/// the rendered description and, for importance ordering, the region layout
/// and retrieval base.
struct MethodContext {
  std::string description_text;
  std::optional<RegionLayout> layout;
  std::optional<RagBase> base;
  std::set<NodeId> node_universe;
};

MethodContext build_method_context(const Graph& g, const MethodSpec& method);

/// Description + (for micro tasks under RAG) retrieved facts + question +
/// format instruction, wrapped per the method.
std::string build_task_prompt(const MethodContext& ctx, const Task& task,
                              const MethodSpec& method);

struct RunResult {
  int task_id = 0;
  std::string raw_text;
  std::optional<TypedAnswer> parsed;
  double score = 0.0;
};

struct EvaluationOptions {
  std::uint64_t seed = 0;
  int parallelism = 1;
  /// Route composite tasks through the multi-step agent pipeline.
  bool agent_for_composite = false;
};

struct MethodRun {
  MethodSpec method;
  std::vector<RunResult> results;  // ordered by task id
  ScoreReport report;
};

/// Evaluates every method over every benchmark task. Dispatch is concurrent
/// up to `parallelism` in-flight tasks; per-task seeds derive from
/// (options.seed, task id, method name) so results are identical regardless
/// of scheduling. A task whose transport ultimately fails scores 0.
std::vector<MethodRun> run_evaluation(const Benchmark& bench,
                                      const std::vector<MethodSpec>& methods, LlmClient& client,
                                      const EvaluationOptions& options);

/// One JSON record per line: {"task_id", "raw_text", "parsed", "score"}.
void save_run_results(const std::vector<RunResult>& results, const std::string& path);
std::vector<RunResult> load_run_results(const std::string& path, const Benchmark& bench);

}  // namespace graphinsight
