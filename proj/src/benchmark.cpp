#include "graphinsight/benchmark.hpp"

#include <filesystem>
#include <fstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "graphinsight/rng.hpp"

namespace graphinsight {

std::size_t Benchmark::macro_count() const {
  std::size_t n = 0;
  for (const Task& t : tasks)
    if (t.level() == TaskLevel::macro) ++n;
  return n;
}

std::size_t Benchmark::micro_count() const { return tasks.size() - macro_count(); }

Benchmark generate_benchmark(const GenConfig& cfg, int graph_count,
                             const std::vector<TaskKind>& kinds, int per_kind) {
  if (graph_count < 1) throw std::invalid_argument("graph_count must be >= 1");
  Benchmark b;
  b.seed = cfg.seed;
  int next_task_id = 0;
  for (int i = 0; i < graph_count; ++i) {
    GenConfig gcfg = cfg;
    gcfg.seed = mix_seed(cfg.seed, static_cast<std::uint64_t>(i) + 1);
    Graph g = generate_graph(gcfg);
    auto generated =
        generate_tasks(g, kinds, per_kind, mix_seed(cfg.seed, 0x7a51ULL), i, next_task_id);
    next_task_id += static_cast<int>(generated.tasks.size());
    b.graphs.push_back(std::move(g));
    b.tasks.insert(b.tasks.end(), generated.tasks.begin(), generated.tasks.end());
    b.warnings.insert(b.warnings.end(), generated.warnings.begin(), generated.warnings.end());
  }
  return b;
}

nlohmann::json task_to_json(const Task& t) {
  return {{"graph_id", t.graph_id},
          {"task_id", t.id},
          {"kind", to_string(t.kind)},
          {"question", t.question},
          {"answer_type", to_string(t.answer_type())},
          {"params", t.params.to_json()},
          {"truth", t.truth.to_json()}};
}

Task task_from_json(const nlohmann::json& j) {
  Task t;
  t.graph_id = j.at("graph_id").get<int>();
  t.id = j.at("task_id").get<int>();
  t.kind = task_kind_from_string(j.at("kind").get<std::string>());
  t.question = j.at("question").get<std::string>();
  t.params = TaskParams::from_json(j.at("params"));
  const AnswerType type = answer_type_from_string(j.at("answer_type").get<std::string>());
  if (type != answer_type_of(t.kind))
    throw std::invalid_argument("answer_type does not match kind " + to_string(t.kind));
  t.truth = TypedAnswer::from_json(j.at("truth"), type);
  return t;
}

void save_benchmark(const Benchmark& b, const std::string& dir) {
  std::filesystem::create_directories(dir);
  {
    nlohmann::json graphs = nlohmann::json::array();
    for (const Graph& g : b.graphs) graphs.push_back(g.to_json());
    nlohmann::json meta = {{"seed", b.seed},
                           {"graphs", graphs},
                           {"macro_tasks", b.macro_count()},
                           {"micro_tasks", b.micro_count()},
                           {"warnings", b.warnings}};
    std::ofstream out(dir + "/graphs.json");
    if (!out) throw std::runtime_error("cannot write " + dir + "/graphs.json");
    out << meta.dump(2) << "\n";
  }
  {
    std::ofstream out(dir + "/tasks.jsonl");
    if (!out) throw std::runtime_error("cannot write " + dir + "/tasks.jsonl");
    for (const Task& t : b.tasks) out << task_to_json(t).dump() << "\n";
  }
}

Benchmark load_benchmark(const std::string& dir) {
  Benchmark b;
  {
    std::ifstream in(dir + "/graphs.json");
    if (!in) throw std::runtime_error("cannot open " + dir + "/graphs.json");
    nlohmann::json meta;
    try {
      in >> meta;
    } catch (const nlohmann::json::exception& e) {
      throw std::runtime_error(dir + "/graphs.json: " + e.what());
    }
    b.seed = meta.at("seed").get<std::uint64_t>();
    for (const auto& gj : meta.at("graphs")) b.graphs.push_back(Graph::from_json(gj));
    if (meta.contains("warnings"))
      b.warnings = meta.at("warnings").get<std::vector<std::string>>();
  }
  {
    std::ifstream in(dir + "/tasks.jsonl");
    if (!in) throw std::runtime_error("cannot open " + dir + "/tasks.jsonl");
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (line.empty()) continue;
      Task t;
      try {
        t = task_from_json(nlohmann::json::parse(line));
      } catch (const std::exception& e) {
        throw std::runtime_error("tasks.jsonl line " + std::to_string(line_no) + ": " + e.what());
      }
      if (t.graph_id < 0 || static_cast<std::size_t>(t.graph_id) >= b.graphs.size())
        throw std::runtime_error("tasks.jsonl line " + std::to_string(line_no) +
                                 ": graph_id out of range");
      const Graph& g = b.graphs[static_cast<std::size_t>(t.graph_id)];
      // Stale or tampered ground truth is rejected outright.
      if (t.question != render_question(t.kind, t.params))
        throw std::runtime_error("tasks.jsonl line " + std::to_string(line_no) +
                                 ": question does not match template");
      if (!(answer_task(g, t.kind, t.params) == t.truth))
        throw std::runtime_error("tasks.jsonl line " + std::to_string(line_no) +
                                 ": truth does not match oracle");
      b.tasks.push_back(std::move(t));
    }
  }
  return b;
}

}  // namespace graphinsight
