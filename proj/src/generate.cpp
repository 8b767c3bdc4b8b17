#include "graphinsight/generate.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "graphinsight/oracles.hpp"
#include "graphinsight/rng.hpp"

namespace graphinsight {

void GenConfig::validate() const {
  if (node_count_min < 1 || node_count_max < node_count_min)
    throw std::invalid_argument("infeasible config: empty node range");
  if (component_min < 1 || component_max < component_min)
    throw std::invalid_argument("infeasible config: empty component range");
  if (2 * component_min > node_count_max)
    throw std::invalid_argument("infeasible config: components need at least 2 nodes each");
  if (weight_min < 1 || weight_max < weight_min)
    throw std::invalid_argument("infeasible config: empty weight range");
  if (edge_density < 0.0 || edge_density > 1.0)
    throw std::invalid_argument("infeasible config: density must be in [0, 1]");
  if (self_loop_prob < 0.0 || self_loop_prob > 1.0 || multi_edge_prob < 0.0 ||
      multi_edge_prob > 1.0)
    throw std::invalid_argument("infeasible config: probabilities must be in [0, 1]");
}

Graph generate_graph(const GenConfig& cfg) {
  cfg.validate();
  auto rng = make_rng(cfg.seed);
  auto uniform_int = [&](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  };
  auto chance = [&](double p) {
    return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
  };
  auto weight = [&] { return uniform_int(cfg.weight_min, cfg.weight_max); };

  const int n = uniform_int(cfg.node_count_min, cfg.node_count_max);
  const int max_components = std::min(cfg.component_max, n / 2);
  if (cfg.component_min > max_components)
    throw std::invalid_argument("infeasible config: components need at least 2 nodes each");
  const int components = uniform_int(cfg.component_min, max_components);

  // Component sizes: 2 each, spare nodes spread uniformly.
  std::vector<int> sizes(components, 2);
  for (int spare = n - 2 * components; spare > 0; --spare)
    ++sizes[static_cast<std::size_t>(uniform_int(0, components - 1))];

  Graph g(false);
  for (NodeId v = 0; v < n; ++v) g.add_node(v);

  int base = 0;
  std::vector<std::pair<int, int>> ranges;
  for (int size : sizes) {
    ranges.emplace_back(base, base + size);
    for (int i = 1; i < size; ++i) {
      NodeId parent = base + uniform_int(0, i - 1);
      g.add_edge(parent, base + i, weight());
    }
    base += size;
  }
  for (const auto& [lo, hi] : ranges) {
    for (NodeId u = lo; u < hi; ++u)
      for (NodeId v = u + 1; v < hi; ++v)
        if (chance(cfg.edge_density) && !g.adjacent(u, v)) g.add_edge(u, v, weight());
  }

  const std::size_t plain_edges = g.edge_count();
  for (std::size_t i = 0; i < plain_edges; ++i) {
    const Edge e = g.edges()[i];
    if (chance(cfg.multi_edge_prob)) g.add_edge(e.u, e.v, weight());
  }
  for (NodeId v = 0; v < n; ++v)
    if (chance(cfg.self_loop_prob)) g.add_edge(v, v, weight());

  return g;
}

namespace {

struct Sampler {
  const Graph& g;
  std::mt19937_64& rng;
  std::vector<NodeId> nodes;
  std::vector<std::size_t> plain_edges;  // indices of non-self-loop edges

  Sampler(const Graph& graph, std::mt19937_64& r) : g(graph), rng(r), nodes(graph.nodes()) {
    for (std::size_t i = 0; i < g.edge_count(); ++i)
      if (g.edges()[i].u != g.edges()[i].v) plain_edges.push_back(i);
  }

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

  NodeId node() { return nodes[static_cast<std::size_t>(uniform(0, static_cast<int>(nodes.size()) - 1))]; }

  std::pair<NodeId, NodeId> distinct_pair() {
    NodeId a = node(), b = node();
    while (b == a) b = node();
    return {a, b};
  }

  const Edge& edge() {
    return g.edges()[plain_edges[static_cast<std::size_t>(
        uniform(0, static_cast<int>(plain_edges.size()) - 1))]];
  }

  int small_k() { return uniform(2, 3); }
};

// Returns false if the kind cannot be sampled on this graph at all.
bool sample_params(Sampler& s, TaskKind kind, TaskParams& out) {
  const Graph& g = s.g;
  const std::size_t n = g.node_count();
  switch (kind) {
    case TaskKind::node_count:
    case TaskKind::is_connected:
    case TaskKind::has_cycle:
      return true;
    case TaskKind::max_edge_weight:
      return g.edge_count() > 0;
    case TaskKind::top_k_degrees:
      out.k = s.uniform(1, std::min<int>(5, static_cast<int>(n)));
      return true;
    case TaskKind::degree:
    case TaskKind::is_leaf:
    case TaskKind::even_degree:
    case TaskKind::neighbors:
    case TaskKind::triangles:
    case TaskKind::neighbor_pairs:
      out.u = s.node();
      return true;
    case TaskKind::k_order_neighbors:
      out.u = s.node();
      out.k = s.small_k();
      return true;
    case TaskKind::direct_connection:
    case TaskKind::common_neighbors:
    case TaskKind::degree_greater:
    case TaskKind::neighbors_connected_to: {
      if (n < 2) return false;
      auto [a, b] = s.distinct_pair();
      out.u = a;
      out.v = b;
      return true;
    }
    case TaskKind::common_k_order: {
      if (n < 2) return false;
      auto [a, b] = s.distinct_pair();
      out.u = a;
      out.v = b;
      out.k = s.small_k();
      return true;
    }
    case TaskKind::edge_weight:
    case TaskKind::connected_edges:
    case TaskKind::edge_common_neighbors: {
      if (s.plain_edges.empty()) return false;
      const Edge& e = s.edge();
      out.u = e.u;
      out.v = e.v;
      return true;
    }
    case TaskKind::complete_subgraph: {
      if (n < 3) return false;
      std::set<NodeId> chosen;
      while (chosen.size() < 3) chosen.insert(s.node());
      out.node_list.assign(chosen.begin(), chosen.end());
      return true;
    }
    case TaskKind::highest_degree_nn: {
      // Needs a node with a non-empty neighbors-of-neighbors set.
      for (int attempt = 0; attempt < 64; ++attempt) {
        NodeId v = s.node();
        for (NodeId u : g.neighbors(v))
          for (NodeId w : g.neighbors(u))
            if (w != v) {
              out.u = v;
              return true;
            }
      }
      for (NodeId v : s.nodes)
        for (NodeId u : g.neighbors(v))
          for (NodeId w : g.neighbors(u))
            if (w != v) {
              out.u = v;
              return true;
            }
      return false;
    }
  }
  return false;
}

}  // namespace

GeneratedTasks generate_tasks(const Graph& g, const std::vector<TaskKind>& kinds, int per_kind,
                              std::uint64_t seed, int graph_id, int first_task_id) {
  if (per_kind < 0) throw std::invalid_argument("per_kind must be non-negative");
  GeneratedTasks out;
  auto rng = make_rng(mix_seed(seed, static_cast<std::uint64_t>(graph_id)));
  Sampler sampler(g, rng);
  int next_id = first_task_id;
  for (TaskKind kind : kinds) {
    std::set<std::string> seen;
    int produced = 0;
    bool samplable = true;
    for (int attempt = 0; attempt < per_kind * 16 && produced < per_kind; ++attempt) {
      TaskParams params;
      if (!sample_params(sampler, kind, params)) {
        samplable = false;
        break;
      }
      const std::string key = params.to_json().dump();
      if (!seen.insert(key).second) continue;  // duplicate parameters
      out.tasks.push_back(make_task(next_id++, graph_id, g, kind, params));
      ++produced;
    }
    if (!samplable && per_kind > 0)
      out.warnings.push_back("graph " + std::to_string(graph_id) + ": kind " + to_string(kind) +
                             " unsamplable, skipped");
  }
  return out;
}

}  // namespace graphinsight
