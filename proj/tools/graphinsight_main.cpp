// graphinsight CLI: benchmark generation, graph description, evaluation,
// rescoring, and report aggregation.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "graphinsight/benchmark.hpp"
#include "graphinsight/client.hpp"
#include "graphinsight/description.hpp"
#include "graphinsight/evaluation.hpp"
#include "graphinsight/pagerank.hpp"
#include "graphinsight/wilcoxon.hpp"

namespace gi = graphinsight;

namespace {

struct Defaults {
  double alpha = 4.5;
  double beta = 10.5;
  double gamma = 80.0;
  double lambda = 0.85;
  int max_iter = 100;
  double tol = 1e-8;
};

Defaults load_config(const std::string& path) {
  Defaults d;
  if (path.empty()) return d;
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config " + path);
  nlohmann::json j;
  in >> j;
  if (j.contains("alpha")) d.alpha = j["alpha"].get<double>();
  if (j.contains("beta")) d.beta = j["beta"].get<double>();
  if (j.contains("gamma")) d.gamma = j["gamma"].get<double>();
  if (j.contains("lambda")) d.lambda = j["lambda"].get<double>();
  if (j.contains("max_iter")) d.max_iter = j["max_iter"].get<int>();
  if (j.contains("tol")) d.tol = j["tol"].get<double>();
  return d;
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto sep = text.find("..");
  if (sep == std::string::npos)
    throw CLI::ValidationError("range must look like 15..200");
  return {std::stoi(text.substr(0, sep)), std::stoi(text.substr(sep + 2))};
}

std::string sanitize(const std::string& name) {
  std::string out = name;
  for (char& c : out)
    if (c == '+') c = '_';
  return out;
}

int cmd_generate(const std::string& nodes_range, int graphs, int per_kind, std::uint64_t seed,
                 const std::string& out_dir, const std::string& components_range, double density,
                 double self_loop_prob, double multi_edge_prob, int min_weight, int max_weight) {
  gi::GenConfig cfg;
  std::tie(cfg.node_count_min, cfg.node_count_max) = parse_range(nodes_range);
  std::tie(cfg.component_min, cfg.component_max) = parse_range(components_range);
  cfg.edge_density = density;
  cfg.self_loop_prob = self_loop_prob;
  cfg.multi_edge_prob = multi_edge_prob;
  cfg.weight_min = min_weight;
  cfg.weight_max = max_weight;
  cfg.seed = seed;
  gi::Benchmark bench = gi::generate_benchmark(cfg, graphs, gi::all_task_kinds(), per_kind);
  gi::save_benchmark(bench, out_dir);
  std::cout << "wrote " << bench.graphs.size() << " graphs, " << bench.tasks.size()
            << " tasks (" << bench.macro_count() << " macro / " << bench.micro_count()
            << " micro) to " << out_dir << "\n";
  for (const auto& w : bench.warnings) std::cerr << "warning: " << w << "\n";
  return 0;
}

int cmd_describe(const std::string& graph_path, const std::string& method_name, int root,
                 const Defaults& defaults, const std::string& layout_out) {
  gi::Graph g = gi::load_graph(graph_path);
  gi::MethodSpec base;
  base.alpha_pct = defaults.alpha;
  base.beta_pct = defaults.beta;
  base.gamma_pct = defaults.gamma;
  base.damping = defaults.lambda;
  base.max_iter = defaults.max_iter;
  base.tol = defaults.tol;
  gi::MethodSpec method = gi::MethodSpec::parse(method_name, base);
  if (root >= 0 && method.ordering != gi::Ordering::raw &&
      method.ordering != gi::Ordering::importance && method.format == gi::Format::sequential) {
    const gi::TraversalOrder order = method.ordering == gi::Ordering::bfs
                                         ? gi::TraversalOrder::bfs
                                         : method.ordering == gi::Ordering::dfs
                                               ? gi::TraversalOrder::dfs
                                               : gi::TraversalOrder::shortest_path;
    std::cout << gi::reorder(g, order, root).text() << "\n";
    return 0;
  }
  gi::MethodContext ctx = gi::build_method_context(g, method);
  std::cout << ctx.description_text << "\n";
  if (!layout_out.empty() && ctx.layout) {
    std::ofstream out(layout_out);
    out << ctx.layout->to_json().dump(2) << "\n";
  }
  return 0;
}

int cmd_eval(const std::string& bench_dir, const std::string& out_dir,
             const std::vector<std::string>& method_names, const std::string& psi_text,
             const std::string& endpoint_url, const std::string& model,
             const std::string& api_key_env, std::uint64_t seed, int parallelism, bool agent,
             const Defaults& defaults) {
  gi::Benchmark bench = gi::load_benchmark(bench_dir);

  gi::MethodSpec base;
  base.alpha_pct = defaults.alpha;
  base.beta_pct = defaults.beta;
  base.gamma_pct = defaults.gamma;
  base.damping = defaults.lambda;
  base.max_iter = defaults.max_iter;
  base.tol = defaults.tol;
  std::vector<gi::MethodSpec> methods;
  for (const std::string& name : method_names)
    methods.push_back(gi::MethodSpec::parse(name, base));

  std::unique_ptr<gi::LlmClient> client;
  if (!endpoint_url.empty()) {
    gi::RemoteEndpoint endpoint;
    endpoint.url = endpoint_url;
    endpoint.model = model;
    if (!api_key_env.empty()) endpoint.api_key_env = api_key_env;
    client = std::make_unique<gi::RemoteClient>(endpoint);
  } else {
    std::stringstream in(psi_text);
    std::string part;
    std::vector<double> v;
    while (std::getline(in, part, ',')) v.push_back(std::stod(part));
    if (v.size() != 3) throw CLI::ValidationError("--simulator-psi expects p_head,p_middle,p_tail");
    client = std::make_unique<gi::SimulatorClient>(
        gi::PositionalBiasModel(v[0], v[1], v[2], defaults.alpha / 100.0, defaults.beta / 100.0));
  }

  gi::EvaluationOptions options;
  options.seed = seed;
  options.parallelism = parallelism;
  options.agent_for_composite = agent;

  auto runs = gi::run_evaluation(bench, methods, *client, options);
  std::filesystem::create_directories(out_dir);
  for (const auto& run : runs) {
    const std::string stem = out_dir + "/" + sanitize(run.method.name());
    gi::save_run_results(run.results, stem + ".results.jsonl");
    std::ofstream report_out(stem + ".report.json");
    report_out << run.report.to_json().dump(2) << "\n";
    std::cout << run.report.to_table() << "\n";
  }
  return 0;
}

int cmd_score(const std::string& bench_dir, const std::string& results_path,
              const std::string& out_path) {
  gi::Benchmark bench = gi::load_benchmark(bench_dir);
  std::map<int, const gi::Task*> by_id;
  for (const gi::Task& t : bench.tasks) by_id[t.id] = &t;
  auto results = gi::load_run_results(results_path, bench);
  for (auto& r : results) {
    const gi::Task* task = by_id.at(r.task_id);
    r.parsed = gi::parse_answer(r.raw_text, task->answer_type());
    r.score = gi::score(r.parsed, task->truth);
  }
  gi::save_run_results(results, out_path);
  std::cout << "rescored " << results.size() << " results to " << out_path << "\n";
  return 0;
}

int cmd_report(const std::string& bench_dir, const std::string& results_path,
               const std::string& compare_path, const std::string& out_path) {
  gi::Benchmark bench = gi::load_benchmark(bench_dir);
  std::map<int, gi::TaskKind> kinds;
  for (const gi::Task& t : bench.tasks) kinds[t.id] = t.kind;

  auto to_scored = [&](const std::vector<gi::RunResult>& results) {
    std::vector<gi::ScoredTask> scored;
    for (const auto& r : results) scored.push_back({r.task_id, kinds.at(r.task_id), r.score});
    return scored;
  };
  auto results = gi::load_run_results(results_path, bench);
  gi::ScoreReport report = gi::aggregate(to_scored(results), {results_path, "", 0});
  std::cout << report.to_table();
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    out << report.to_json().dump(2) << "\n";
  }
  if (!compare_path.empty()) {
    auto other = gi::load_run_results(compare_path, bench);
    if (other.size() != results.size())
      throw std::runtime_error("result files cover different task sets");
    std::vector<std::pair<double, double>> pairs;
    for (std::size_t i = 0; i < results.size(); ++i)
      pairs.emplace_back(other[i].score, results[i].score);
    auto w = gi::wilcoxon_signed_rank(pairs);
    std::cout << "Wilcoxon vs " << compare_path << ": W=" << w.statistic
              << " one-sided p=" << w.one_sided_p << " two-sided p=" << w.two_sided_p << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graph description toolkit: importance-ordered prompts, retrieval bases, and a graph-QA benchmark harness"};
  app.require_subcommand(1);

  std::string config_path;
  app.add_option("--config", config_path, "JSON config with alpha/beta/gamma/lambda/max_iter");

  // generate
  auto* generate = app.add_subcommand("generate", "Generate a seeded benchmark");
  std::string nodes_range = "15..200", components_range = "1..3", out_dir = "bench";
  int graphs = 10, per_kind = 1, min_weight = 1, max_weight = 5;
  double density = 0.1, self_loop_prob = 0.05, multi_edge_prob = 0.05;
  std::uint64_t gen_seed = 7;
  generate->add_option("--nodes", nodes_range, "Node count range, e.g. 15..200");
  generate->add_option("--graphs", graphs, "Number of graphs");
  generate->add_option("--tasks-per-kind", per_kind, "Tasks per kind per graph");
  generate->add_option("--seed", gen_seed, "Generation seed");
  generate->add_option("--out", out_dir, "Output directory")->required();
  generate->add_option("--components", components_range, "Component count range");
  generate->add_option("--density", density, "Extra edge probability");
  generate->add_option("--self-loop-prob", self_loop_prob, "Self-loop probability per node");
  generate->add_option("--multi-edge-prob", multi_edge_prob, "Duplicate probability per edge");
  generate->add_option("--min-weight", min_weight, "Minimum edge weight");
  generate->add_option("--max-weight", max_weight, "Maximum edge weight");

  // describe
  auto* describe = app.add_subcommand("describe", "Print a graph description");
  std::string graph_path, describe_method = "raw", layout_out;
  int root = -1;
  describe->add_option("--graph", graph_path, "Graph JSON file")->required();
  describe->add_option("--method", describe_method, "raw|bfs|dfs|sp|al|am|importance");
  describe->add_option("--root", root, "Traversal root (bfs/dfs/sp)");
  describe->add_option("--layout-out", layout_out, "Write the region layout JSON here");

  // eval
  auto* eval = app.add_subcommand("eval", "Run methods over a benchmark");
  std::string bench_dir, eval_out = "runs", psi_text = "1,1,1", endpoint_url, model = "model",
              api_key_env;
  std::vector<std::string> method_names{"raw"};
  std::uint64_t eval_seed = 7;
  int parallelism = 1;
  bool agent = false;
  eval->add_option("--bench", bench_dir, "Benchmark directory")->required();
  eval->add_option("--out", eval_out, "Output directory");
  eval->add_option("--method", method_names, "Method names, e.g. raw importance+rag al");
  eval->add_option("--simulator-psi", psi_text, "Simulator recall p_head,p_middle,p_tail");
  eval->add_option("--endpoint", endpoint_url, "Remote chat-completions URL");
  eval->add_option("--model", model, "Remote model name");
  eval->add_option("--api-key-env", api_key_env, "Env var holding the bearer token");
  eval->add_option("--seed", eval_seed, "Run seed");
  eval->add_option("--parallelism", parallelism, "Max in-flight tasks");
  eval->add_flag("--agent", agent, "Route composite tasks through the step-wise agent");

  // score
  auto* score_cmd = app.add_subcommand("score", "Re-parse and re-score raw responses");
  std::string score_bench, score_results, score_out;
  score_cmd->add_option("--bench", score_bench, "Benchmark directory")->required();
  score_cmd->add_option("--results", score_results, "Results JSONL")->required();
  score_cmd->add_option("--out", score_out, "Rescored output JSONL")->required();

  // report
  auto* report_cmd = app.add_subcommand("report", "Aggregate a results file");
  std::string report_bench, report_results, compare_path, report_out;
  report_cmd->add_option("--bench", report_bench, "Benchmark directory")->required();
  report_cmd->add_option("--results", report_results, "Results JSONL")->required();
  report_cmd->add_option("--compare", compare_path, "Baseline results JSONL for a signed-rank test");
  report_cmd->add_option("--out", report_out, "Report JSON output");

  CLI11_PARSE(app, argc, argv);

  try {
    const Defaults defaults = load_config(config_path);
    if (generate->parsed())
      return cmd_generate(nodes_range, graphs, per_kind, gen_seed, out_dir, components_range,
                          density, self_loop_prob, multi_edge_prob, min_weight, max_weight);
    if (describe->parsed())
      return cmd_describe(graph_path, describe_method, root, defaults, layout_out);
    if (eval->parsed())
      return cmd_eval(bench_dir, eval_out, method_names, psi_text, endpoint_url, model,
                      api_key_env, eval_seed, parallelism, agent, defaults);
    if (score_cmd->parsed()) return cmd_score(score_bench, score_results, score_out);
    if (report_cmd->parsed())
      return cmd_report(report_bench, report_results, compare_path, report_out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
