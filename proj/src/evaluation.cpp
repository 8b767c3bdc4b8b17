#include "graphinsight/evaluation.hpp"

#include <atomic>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <nlohmann/json.hpp>

#include "graphinsight/agent.hpp"
#include "graphinsight/description.hpp"
#include "graphinsight/pagerank.hpp"
#include "graphinsight/rng.hpp"

namespace graphinsight {

std::string to_string(Ordering o) {
  switch (o) {
    case Ordering::raw: return "raw";
    case Ordering::bfs: return "bfs";
    case Ordering::dfs: return "dfs";
    case Ordering::sp: return "sp";
    case Ordering::importance: return "importance";
  }
  throw std::logic_error("unreachable ordering");
}

std::string to_string(Format f) {
  switch (f) {
    case Format::sequential: return "seq";
    case Format::adjacency_list: return "al";
    case Format::adjacency_matrix: return "am";
  }
  throw std::logic_error("unreachable format");
}

void MethodSpec::validate() const {
  if (ordering == Ordering::importance && format != Format::sequential)
    throw std::invalid_argument("importance ordering requires the sequential format");
  if (rag_enabled && ordering != Ordering::importance)
    throw std::invalid_argument("retrieval augmentation requires importance ordering");
  if (format != Format::sequential && ordering != Ordering::raw)
    throw std::invalid_argument("structural formats take the graph as-is; use raw ordering");
  if (alpha_pct < 0 || beta_pct < 0 || alpha_pct + beta_pct > 100)
    throw std::invalid_argument("regions exceed sequence");
  if (gamma_pct < 0 || gamma_pct > 100) throw std::invalid_argument("gamma must be in [0, 100]");
}

std::string MethodSpec::name() const {
  std::string base;
  if (format == Format::adjacency_list) base = "al";
  else if (format == Format::adjacency_matrix) base = "am";
  else base = to_string(ordering);
  if (rag_enabled) base += "+rag";
  if (wrapper != PromptWrapper::none) base += "+" + to_string(wrapper);
  return base;
}

MethodSpec MethodSpec::parse(const std::string& text) { return parse(text, MethodSpec{}); }

MethodSpec MethodSpec::parse(const std::string& text, const MethodSpec& defaults) {
  MethodSpec spec = defaults;
  spec.ordering = Ordering::raw;
  spec.format = Format::sequential;
  spec.wrapper = PromptWrapper::none;
  spec.rag_enabled = false;
  std::stringstream in(text);
  std::string token;
  while (std::getline(in, token, '+')) {
    if (token == "raw") spec.ordering = Ordering::raw;
    else if (token == "bfs") spec.ordering = Ordering::bfs;
    else if (token == "dfs") spec.ordering = Ordering::dfs;
    else if (token == "sp") spec.ordering = Ordering::sp;
    else if (token == "importance" || token == "insight") spec.ordering = Ordering::importance;
    else if (token == "seq") spec.format = Format::sequential;
    else if (token == "al") spec.format = Format::adjacency_list;
    else if (token == "am") spec.format = Format::adjacency_matrix;
    else if (token == "rag") spec.rag_enabled = true;
    else if (token == "cot" || token == "fs" || token == "bag" || token == "none")
      spec.wrapper = wrapper_from_string(token);
    else
      throw std::invalid_argument("unknown method token: " + token);
  }
  spec.validate();
  return spec;
}

MethodContext build_method_context(const Graph& g, const MethodSpec& method) {
  method.validate();
  MethodContext ctx;
  const auto nodes = g.nodes();
  ctx.node_universe.insert(nodes.begin(), nodes.end());

  if (method.format != Format::sequential) {
    ctx.description_text =
        render_structural(g, method.format == Format::adjacency_list
                                 ? StructuralFormat::adjacency_list
                                 : StructuralFormat::adjacency_matrix);
    return ctx;
  }
  switch (method.ordering) {
    case Ordering::raw:
      ctx.description_text = render_raw(g).text();
      break;
    case Ordering::bfs:
    case Ordering::dfs:
    case Ordering::sp: {
      const TraversalOrder order = method.ordering == Ordering::bfs ? TraversalOrder::bfs
                                   : method.ordering == Ordering::dfs
                                       ? TraversalOrder::dfs
                                       : TraversalOrder::shortest_path;
      ctx.description_text = reorder(g, order, nodes.front()).text();
      break;
    }
    case Ordering::importance: {
      const PageRankVector pr = pagerank(g, method.damping, method.max_iter, method.tol);
      auto blocks = decompose(g, pr);
      auto [seq, layout] = reorganize(blocks, method.alpha_pct, method.beta_pct, g.directed());
      ctx.description_text = seq.text();
      ctx.layout = std::move(layout);
      if (method.rag_enabled) ctx.base = build_rag_base(*ctx.layout, g, method.gamma_pct);
      break;
    }
  }
  return ctx;
}

std::string build_task_prompt(const MethodContext& ctx, const Task& task,
                              const MethodSpec& method) {
  Retrieval retrieval;
  if (ctx.base && task.level() == TaskLevel::micro) {
    const auto query = extract_entities(task.question, ctx.node_universe);
    retrieval = retrieve(*ctx.base, query);
  }
  const std::string prompt =
      assemble_prompt(ctx.description_text, retrieval, task.question, format_instruction(task.kind));
  return wrap_prompt(prompt, method.wrapper);
}

namespace {

RunResult evaluate_one(const Task& task, const Graph& g, const MethodContext& ctx,
                       const MethodSpec& method, LlmClient& client, std::uint64_t task_seed,
                       bool agent_for_composite) {
  RunResult result;
  result.task_id = task.id;
  try {
    if (agent_for_composite && is_composite(task.kind)) {
      result.raw_text = run_agent(task, g, method, client, task_seed);
    } else {
      LlmRequest request{build_task_prompt(ctx, task, method), &g, task_seed};
      result.raw_text = client.complete(request);
    }
  } catch (const std::exception& e) {
    result.raw_text = "";  // transport/agent failure: recorded, scores 0
  }
  result.parsed = parse_answer(result.raw_text, task.answer_type());
  result.score = score(result.parsed, task.truth);
  return result;
}

}  // namespace

std::vector<MethodRun> run_evaluation(const Benchmark& bench,
                                      const std::vector<MethodSpec>& methods, LlmClient& client,
                                      const EvaluationOptions& options) {
  for (const MethodSpec& m : methods) m.validate();
  if (options.parallelism < 1) throw std::invalid_argument("parallelism must be >= 1");

  std::vector<MethodRun> runs;
  for (const MethodSpec& method : methods) {
    MethodRun run;
    run.method = method;
    run.results.resize(bench.tasks.size());

    std::vector<MethodContext> contexts;
    contexts.reserve(bench.graphs.size());
    for (const Graph& g : bench.graphs) contexts.push_back(build_method_context(g, method));

    const std::string method_name = method.name();
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      while (true) {
        const std::size_t i = next.fetch_add(1);
        if (i >= bench.tasks.size()) return;
        const Task& task = bench.tasks[i];
        const std::uint64_t task_seed =
            mix_seed(mix_seed(options.seed, static_cast<std::uint64_t>(task.id)), method_name);
        run.results[i] =
            evaluate_one(task, bench.graph_of(task), contexts[static_cast<std::size_t>(task.graph_id)],
                         method, client, task_seed, options.agent_for_composite);
      }
    };
    const int thread_count = std::min<int>(options.parallelism, static_cast<int>(bench.tasks.size()));
    if (thread_count <= 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      for (int t = 0; t < thread_count; ++t) pool.emplace_back(worker);
      for (auto& th : pool) th.join();
    }

    std::vector<ScoredTask> scored;
    scored.reserve(bench.tasks.size());
    for (std::size_t i = 0; i < bench.tasks.size(); ++i)
      scored.push_back({bench.tasks[i].id, bench.tasks[i].kind, run.results[i].score});
    run.report = aggregate(scored, {method_name, client.model_name(), options.seed});
    runs.push_back(std::move(run));
  }
  return runs;
}

void save_run_results(const std::vector<RunResult>& results, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  for (const RunResult& r : results) {
    nlohmann::json j = {{"task_id", r.task_id},
                        {"raw_text", r.raw_text},
                        {"parsed", r.parsed ? r.parsed->to_json() : nlohmann::json()},
                        {"score", r.score}};
    out << j.dump() << "\n";
  }
}

std::vector<RunResult> load_run_results(const std::string& path, const Benchmark& bench) {
  std::map<int, AnswerType> types;
  for (const Task& t : bench.tasks) types[t.id] = t.answer_type();
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<RunResult> results;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    try {
      auto j = nlohmann::json::parse(line);
      RunResult r;
      r.task_id = j.at("task_id").get<int>();
      r.raw_text = j.at("raw_text").get<std::string>();
      auto it = types.find(r.task_id);
      if (it == types.end()) throw std::runtime_error("unknown task id");
      if (!j.at("parsed").is_null()) r.parsed = TypedAnswer::from_json(j.at("parsed"), it->second);
      r.score = j.at("score").get<double>();
      results.push_back(std::move(r));
    } catch (const std::exception& e) {
      throw std::runtime_error(path + " line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return results;
}

}  // namespace graphinsight
