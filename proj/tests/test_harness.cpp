#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "graphinsight/agent.hpp"
#include "graphinsight/evaluation.hpp"
#include "testutil.hpp"

using namespace graphinsight;

namespace {

Benchmark tiny_benchmark(std::uint64_t seed, int graphs = 2, int per_kind = 1) {
  GenConfig cfg;
  cfg.node_count_min = 15;
  cfg.node_count_max = 25;
  cfg.seed = seed;
  return generate_benchmark(cfg, graphs, all_task_kinds(), per_kind);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

/// Client decorator that records every prompt it forwards.
class RecordingClient : public LlmClient {
 public:
  explicit RecordingClient(LlmClient& inner) : inner_(inner) {}
  std::string complete(const LlmRequest& request) override {
    prompts.push_back(request.prompt);
    return inner_.complete(request);
  }
  std::string model_name() const override { return inner_.model_name(); }
  std::vector<std::string> prompts;

 private:
  LlmClient& inner_;
};

}  // namespace

TEST_CASE("prompt wrappers") {
  CHECK(wrap_prompt("base", PromptWrapper::none) == "base");

  const std::string cot = wrap_prompt("base", PromptWrapper::cot);
  CHECK(cot == std::string("base\n") + kCotInstruction);

  const std::string bag = wrap_prompt("base", PromptWrapper::bag);
  CHECK(bag.rfind(kBagInstruction, 0) == 0);
  CHECK(bag.find("base") != std::string::npos);

  const std::string fs = wrap_prompt("base", PromptWrapper::few_shot);
  CHECK(fs.find("Example 1:") != std::string::npos);
  CHECK(fs.find("Example 2:") != std::string::npos);
  CHECK(fs.find(render_raw(few_shot_graph()).text()) != std::string::npos);
  CHECK(fs.find("A: 5") != std::string::npos);
  CHECK(fs.find("A: 3") != std::string::npos);
}

TEST_CASE("method specs parse, validate, and name themselves") {
  CHECK(MethodSpec::parse("raw").name() == "raw");
  CHECK(MethodSpec::parse("importance+rag").name() == "importance+rag");
  CHECK(MethodSpec::parse("al").name() == "al");
  CHECK(MethodSpec::parse("raw+cot").name() == "raw+cot");
  CHECK(MethodSpec::parse("bfs").ordering == Ordering::bfs);

  CHECK_THROWS_AS(MethodSpec::parse("raw+rag"), std::invalid_argument);   // rag needs importance
  CHECK_THROWS_AS(MethodSpec::parse("importance+am"), std::invalid_argument);
  CHECK_THROWS_AS(MethodSpec::parse("bfs+al"), std::invalid_argument);
  CHECK_THROWS_AS(MethodSpec::parse("nonsense"), std::invalid_argument);
}

TEST_CASE("wrapped prompts still answer exactly under full recall") {
  Graph g = testutil::clique_pair_a();
  SimulatorClient client(PositionalBiasModel::uniform(1.0));
  auto generated = generate_tasks(g, all_task_kinds(), 1, 3);
  for (PromptWrapper w : {PromptWrapper::cot, PromptWrapper::few_shot, PromptWrapper::bag}) {
    MethodSpec method;
    method.wrapper = w;
    MethodContext ctx = build_method_context(g, method);
    for (const Task& t : generated.tasks) {
      LlmRequest request{build_task_prompt(ctx, t, method), &g, 7};
      const double s = score(parse_answer(client.complete(request), t.answer_type()), t.truth);
      CHECK_MESSAGE(s == 1.0, to_string(t.kind), " under wrapper ", to_string(w));
    }
  }
}

TEST_CASE("evaluation is oracle-perfect under full recall, for every method") {
  Benchmark bench = tiny_benchmark(31);
  SimulatorClient client(PositionalBiasModel::uniform(1.0));
  std::vector<MethodSpec> methods{
      MethodSpec::parse("raw"),       MethodSpec::parse("bfs"),
      MethodSpec::parse("dfs"),       MethodSpec::parse("sp"),
      MethodSpec::parse("al"),        MethodSpec::parse("importance"),
      MethodSpec::parse("importance+rag"), MethodSpec::parse("raw+cot"),
      MethodSpec::parse("raw+fs"),    MethodSpec::parse("raw+bag"),
  };
  EvaluationOptions options;
  options.seed = 5;
  options.parallelism = 4;
  auto runs = run_evaluation(bench, methods, client, options);
  for (const auto& run : runs)
    CHECK_MESSAGE(run.report.overall == 1.0, run.method.name());
}

TEST_CASE("the method matrix reproduces description-module orderings") {
  Graph g = testutil::clique_pair_b();
  for (const char* name : {"bfs", "dfs", "sp"}) {
    MethodSpec method = MethodSpec::parse(name);
    MethodContext ctx = build_method_context(g, method);
    const TraversalOrder order = method.ordering == Ordering::bfs ? TraversalOrder::bfs
                                 : method.ordering == Ordering::dfs
                                     ? TraversalOrder::dfs
                                     : TraversalOrder::shortest_path;
    CHECK(ctx.description_text == reorder(g, order, g.nodes().front()).text());
  }
  MethodContext raw_ctx = build_method_context(g, MethodSpec::parse("raw"));
  CHECK(raw_ctx.description_text == render_raw(g).text());
}

TEST_CASE("two runs with identical seeds produce byte-identical result files") {
  Benchmark bench = tiny_benchmark(77);
  SimulatorClient client(PositionalBiasModel(0.95, 0.2, 0.95));
  std::vector<MethodSpec> methods{MethodSpec::parse("raw"), MethodSpec::parse("importance+rag")};
  EvaluationOptions options;
  options.seed = 99;

  const std::string dir = "test_eval_runs";
  std::filesystem::create_directories(dir);
  for (int round = 0; round < 2; ++round) {
    options.parallelism = round == 0 ? 1 : 8;  // scheduling must not matter
    auto runs = run_evaluation(bench, methods, client, options);
    for (std::size_t m = 0; m < runs.size(); ++m)
      save_run_results(runs[m].results,
                       dir + "/round" + std::to_string(round) + "_m" + std::to_string(m) + ".jsonl");
  }
  CHECK(slurp(dir + "/round0_m0.jsonl") == slurp(dir + "/round1_m0.jsonl"));
  CHECK(slurp(dir + "/round0_m1.jsonl") == slurp(dir + "/round1_m1.jsonl"));
  CHECK_FALSE(slurp(dir + "/round0_m0.jsonl").empty());
  std::filesystem::remove_all(dir);
}

TEST_CASE("run results round-trip through jsonl") {
  Benchmark bench = tiny_benchmark(13, 1);
  SimulatorClient client(PositionalBiasModel(0.95, 0.2, 0.95));
  auto runs = run_evaluation(bench, {MethodSpec::parse("raw")}, client, {});
  const std::string path = "test_results.jsonl";
  save_run_results(runs[0].results, path);
  auto loaded = load_run_results(path, bench);
  REQUIRE(loaded.size() == runs[0].results.size());
  for (std::size_t i = 0; i < loaded.size(); ++i) {
    CHECK(loaded[i].task_id == runs[0].results[i].task_id);
    CHECK(loaded[i].raw_text == runs[0].results[i].raw_text);
    CHECK(loaded[i].score == runs[0].results[i].score);
  }
  std::filesystem::remove(path);
}

TEST_CASE("agent answers the two-hop neighborhood question exactly under full recall") {
  Graph g = testutil::clique_pair_b();
  SimulatorClient inner(PositionalBiasModel::uniform(1.0));
  RecordingClient client(inner);

  TaskParams params;
  params.u = 7;
  params.k = 2;
  Task task = make_task(0, 0, g, TaskKind::k_order_neighbors, params);
  const std::string response = run_agent(task, g, MethodSpec::parse("importance+rag"), client, 11);
  CHECK(response == "[]");
  CHECK(client.prompts.size() == 2);  // one per hop

  // step 2 sees step 1's parsed set verbatim
  const std::string step1_set =
      TypedAnswer::node_set({8, 9, 10, 11, 12, 13}).render();
  CHECK(client.prompts[1].find("Step 1 found: " + step1_set + ".") != std::string::npos);
}

TEST_CASE("one-hop agent chains degenerate to the single neighbor query") {
  Graph g = testutil::clique_pair_b();
  SimulatorClient inner(PositionalBiasModel::uniform(1.0));
  RecordingClient client(inner);
  TaskParams params;
  params.u = 2;
  params.k = 1;
  Task task = make_task(0, 0, g, TaskKind::k_order_neighbors, params);
  const std::string response = run_agent(task, g, MethodSpec::parse("raw"), client, 11);
  CHECK(client.prompts.size() == 1);
  CHECK(client.prompts[0].find("Who are the neighbors of node 2?") != std::string::npos);
  auto parsed = parse_answer(response, AnswerType::node_set);
  REQUIRE(parsed.has_value());
  CHECK(parsed->as_node_set() == std::set<NodeId>{0, 1, 3, 4, 5, 6});
}

TEST_CASE("agent matches the oracles on every composite kind under full recall") {
  Graph g = testutil::clique_pair_b();
  SimulatorClient client(PositionalBiasModel::uniform(1.0));
  auto generated = generate_tasks(g, all_task_kinds(), 1, 19);
  for (const Task& t : generated.tasks) {
    if (!is_composite(t.kind)) continue;
    const std::string response =
        run_agent(t, g, MethodSpec::parse("importance+rag"), client, 23);
    const double s = score(parse_answer(response, t.answer_type()), t.truth);
    CHECK_MESSAGE(s == 1.0, to_string(t.kind), " -> ", response);
  }
}

TEST_CASE("a failing step aborts the agent chain") {
  class BrokenClient : public LlmClient {
   public:
    std::string complete(const LlmRequest&) override { return "gibberish with no list"; }
    std::string model_name() const override { return "broken"; }
  } client;
  Graph g = testutil::clique_pair_b();
  TaskParams params;
  params.u = 7;
  params.k = 2;
  Task task = make_task(0, 0, g, TaskKind::k_order_neighbors, params);
  const std::string response = run_agent(task, g, MethodSpec::parse("raw"), client, 1);
  CHECK(parse_answer(response, AnswerType::node_set) == std::nullopt);
  CHECK(score(parse_answer(response, task.answer_type()), task.truth) == 0.0);
}

TEST_CASE("evaluation can route composite tasks through the agent") {
  Benchmark bench = tiny_benchmark(41, 1);
  SimulatorClient client(PositionalBiasModel::uniform(1.0));
  EvaluationOptions options;
  options.agent_for_composite = true;
  auto runs = run_evaluation(bench, {MethodSpec::parse("importance+rag")}, client, options);
  CHECK(runs[0].report.overall == 1.0);
}
