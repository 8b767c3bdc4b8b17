#include "graphinsight/agent.hpp"

#include <algorithm>
#include <sstream>

#include "graphinsight/evaluation.hpp"
#include "graphinsight/ragbase.hpp"
#include "graphinsight/rng.hpp"
#include "graphinsight/scoring.hpp"

namespace graphinsight {

namespace {

constexpr const char* kChainFailure = "The reasoning chain failed at an intermediate step.";

struct AgentRun {
  const Graph& g;
  const MethodSpec& method;
  LlmClient& client;
  std::uint64_t seed;
  MethodContext ctx;
  std::vector<std::string> notes;  // rendered prior step results
  int steps = 0;

  AgentRun(const Graph& graph, const MethodSpec& m, LlmClient& c, std::uint64_t s)
      : g(graph), method(m), client(c), seed(s), ctx(build_method_context(graph, m)) {}

  std::optional<TypedAnswer> step(const std::string& question, const std::string& instruction,
                                  AnswerType type, const std::set<NodeId>& query_nodes) {
    Retrieval retrieval;
    if (ctx.base) retrieval = retrieve(*ctx.base, query_nodes);

    std::string prompt = ctx.description_text;
    const std::string facts = render_facts(retrieval);
    if (!facts.empty()) {
      prompt += "\n\n";
      prompt += facts;
    }
    if (!notes.empty()) {
      prompt += "\n";
      for (const std::string& note : notes) {
        prompt += "\n";
        prompt += note;
      }
    }
    prompt += "\n\nQ: ";
    prompt += question;
    if (!instruction.empty()) {
      prompt += "\n";
      prompt += instruction;
    }

    ++steps;
    LlmRequest request{prompt, &g, mix_seed(seed, static_cast<std::uint64_t>(steps))};
    const std::string response = client.complete(request);
    auto parsed = parse_answer(response, type);
    if (parsed)
      notes.push_back("Step " + std::to_string(steps) + " found: " + parsed->render() + ".");
    return parsed;
  }

  /// One-hop neighbor lookup of a single node.
  std::optional<std::set<NodeId>> neighbors_step(NodeId v) {
    TaskParams params;
    params.u = v;
    auto parsed = step(render_question(TaskKind::neighbors, params),
                       format_instruction(TaskKind::neighbors), AnswerType::node_set, {v});
    if (!parsed) return std::nullopt;
    return parsed->as_node_set();
  }

  /// BFS layer k around `start`, one client query per hop.
  std::optional<std::set<NodeId>> expand_k_order(NodeId start, int k) {
    std::set<NodeId> seen{start};
    std::set<NodeId> frontier{start};
    std::set<NodeId> layer;
    for (int hop = 1; hop <= k; ++hop) {
      std::optional<TypedAnswer> parsed;
      if (hop == 1) {
        TaskParams params;
        params.u = start;
        parsed = step(render_question(TaskKind::neighbors, params),
                      format_instruction(TaskKind::neighbors), AnswerType::node_set, {start});
      } else {
        parsed = step(frontier_step_question(frontier), "", AnswerType::node_set, frontier);
      }
      if (!parsed) return std::nullopt;
      layer.clear();
      for (NodeId v : parsed->as_node_set())
        if (!seen.count(v)) layer.insert(v);
      seen.insert(layer.begin(), layer.end());
      frontier = layer;
    }
    return layer;
  }

  /// Final step: the task's own question over the enriched context.
  std::optional<TypedAnswer> final_step(const Task& task, std::set<NodeId> query_nodes) {
    for (NodeId v : extract_entities(task.question, ctx.node_universe)) query_nodes.insert(v);
    return step(task.question, format_instruction(task.kind), task.answer_type(), query_nodes);
  }
};

std::set<NodeId> set_intersection_of(const std::set<NodeId>& a, const std::set<NodeId>& b) {
  std::set<NodeId> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

}  // namespace

std::string run_agent(const Task& task, const Graph& g, const MethodSpec& method,
                      LlmClient& client, std::uint64_t seed) {
  if (!is_composite(task.kind))
    throw std::invalid_argument("agent pipeline handles composite tasks only");
  AgentRun run(g, method, client, seed);

  switch (task.kind) {
    case TaskKind::k_order_neighbors: {
      auto layer = run.expand_k_order(*task.params.u, *task.params.k);
      if (!layer) return kChainFailure;
      return TypedAnswer::node_set(std::move(*layer)).render();
    }
    case TaskKind::common_k_order: {
      auto a = run.expand_k_order(*task.params.u, *task.params.k);
      if (!a) return kChainFailure;
      auto b = run.expand_k_order(*task.params.v, *task.params.k);
      if (!b) return kChainFailure;
      return TypedAnswer::node_set(set_intersection_of(*a, *b)).render();
    }
    case TaskKind::edge_common_neighbors:
    case TaskKind::neighbors_connected_to: {
      auto a = run.neighbors_step(*task.params.u);
      if (!a) return kChainFailure;
      auto b = run.neighbors_step(*task.params.v);
      if (!b) return kChainFailure;
      return TypedAnswer::node_set(set_intersection_of(*a, *b)).render();
    }
    case TaskKind::highest_degree_nn: {
      auto nbrs = run.neighbors_step(*task.params.u);
      if (!nbrs) return kChainFailure;
      std::set<NodeId> frontier = *nbrs;
      frontier.erase(*task.params.u);
      std::set<NodeId> candidates;
      if (!frontier.empty()) {
        auto parsed =
            run.step(frontier_step_question(frontier), "", AnswerType::node_set, frontier);
        if (!parsed) return kChainFailure;
        candidates = parsed->as_node_set();
      }
      std::set<NodeId> query = *nbrs;
      query.insert(candidates.begin(), candidates.end());
      auto answer = run.final_step(task, std::move(query));
      if (!answer) return kChainFailure;
      return answer->render();
    }
    case TaskKind::triangles:
    case TaskKind::neighbor_pairs: {
      auto nbrs = run.neighbors_step(*task.params.u);
      if (!nbrs) return kChainFailure;
      auto answer = run.final_step(task, *nbrs);
      if (!answer) return kChainFailure;
      return answer->render();
    }
    case TaskKind::connected_edges:
    case TaskKind::complete_subgraph: {
      auto answer = run.final_step(task, {});
      if (!answer) return kChainFailure;
      return answer->render();
    }
    default:
      throw std::logic_error("unhandled composite kind");
  }
}

}  // namespace graphinsight
