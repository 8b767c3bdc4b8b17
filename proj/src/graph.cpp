#include "graphinsight/graph.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace graphinsight {

Graph Graph::from_edges(bool directed, const std::vector<Edge>& edges,
                        const std::vector<NodeId>& extra_nodes) {
  Graph g(directed);
  for (NodeId v : extra_nodes) g.add_node(v);
  for (const Edge& e : edges) {
    g.add_node(e.u);
    g.add_node(e.v);
    g.add_edge(e.u, e.v, e.weight);
  }
  return g;
}

void Graph::add_node(NodeId v) {
  if (v < 0) throw std::invalid_argument("node ids must be non-negative");
  adjacency_.try_emplace(v);
}

void Graph::add_edge(NodeId u, NodeId v, int weight) {
  if (!has_node(u) || !has_node(v)) throw std::invalid_argument("unknown node");
  if (weight < 1) throw std::invalid_argument("edge weight must be >= 1");
  const std::size_t idx = edges_.size();
  edges_.push_back(Edge{u, v, weight});
  adjacency_[u].push_back(idx);
  adjacency_[v].push_back(idx);  // self-loop lands in the same list twice
}

std::vector<NodeId> Graph::nodes() const {
  std::vector<NodeId> out;
  out.reserve(adjacency_.size());
  for (const auto& [v, _] : adjacency_) out.push_back(v);
  return out;
}

int Graph::degree(NodeId v) const {
  auto it = adjacency_.find(v);
  if (it == adjacency_.end()) throw std::invalid_argument("unknown node");
  return static_cast<int>(it->second.size());
}

std::vector<NodeId> Graph::neighbors(NodeId v) const {
  auto it = adjacency_.find(v);
  if (it == adjacency_.end()) throw std::invalid_argument("unknown node");
  std::set<NodeId> distinct;
  for (std::size_t idx : it->second) {
    const Edge& e = edges_[idx];
    distinct.insert(e.u == v ? e.v : e.u);
  }
  return {distinct.begin(), distinct.end()};
}

bool Graph::adjacent(NodeId u, NodeId v) const {
  auto it = adjacency_.find(u);
  if (it == adjacency_.end() || !has_node(v)) throw std::invalid_argument("unknown node");
  for (std::size_t idx : it->second) {
    const Edge& e = edges_[idx];
    if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) return true;
  }
  return false;
}

std::optional<int> Graph::first_edge_weight(NodeId u, NodeId v) const {
  auto it = adjacency_.find(u);
  if (it == adjacency_.end() || !has_node(v)) throw std::invalid_argument("unknown node");
  std::optional<std::size_t> best;
  for (std::size_t idx : it->second) {
    const Edge& e = edges_[idx];
    if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) {
      if (!best || idx < *best) best = idx;
    }
  }
  if (!best) return std::nullopt;
  return edges_[*best].weight;
}

const std::vector<std::size_t>& Graph::incident_edges(NodeId v) const {
  auto it = adjacency_.find(v);
  if (it == adjacency_.end()) throw std::invalid_argument("unknown node");
  return it->second;
}

nlohmann::json Graph::to_json() const {
  nlohmann::json j;
  j["directed"] = directed_;
  j["nodes"] = nodes();
  nlohmann::json edges = nlohmann::json::array();
  for (const Edge& e : edges_) edges.push_back({e.u, e.v, e.weight});
  j["edges"] = std::move(edges);
  return j;
}

Graph Graph::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("directed") || !j.contains("nodes") || !j.contains("edges"))
    throw std::invalid_argument("graph json requires directed/nodes/edges fields");
  Graph g(j.at("directed").get<bool>());
  for (const auto& v : j.at("nodes")) g.add_node(v.get<NodeId>());
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 3) throw std::invalid_argument("edge entries must be [u, v, w]");
    g.add_edge(e[0].get<NodeId>(), e[1].get<NodeId>(), e[2].get<int>());
  }
  return g;
}

std::string Graph::to_json_string() const { return to_json().dump(); }

Graph Graph::from_json_string(const std::string& text) {
  return from_json(nlohmann::json::parse(text));
}

bool Graph::operator==(const Graph& other) const {
  return directed_ == other.directed_ && edges_ == other.edges_ && nodes() == other.nodes();
}

void save_graph(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << g.to_json_string() << "\n";
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return Graph::from_json_string(buf.str());
}

}  // namespace graphinsight
