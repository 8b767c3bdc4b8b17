#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace graphinsight {

using NodeId = int;

struct Edge {
  NodeId u = 0;
  NodeId v = 0;
  int weight = 1;

  bool operator==(const Edge&) const = default;
};

/// Weighted graph with integer node ids. Multi-edges and self-loops are
/// allowed; the edge list preserves insertion order, which downstream
/// serialization depends on. After construction the graph is read-only
/// and safe to share across threads.
class Graph {
 public:
  Graph() = default;
  explicit Graph(bool directed) : directed_(directed) {}

  /// Builds a graph from an edge list, registering endpoints as nodes.
  /// `extra_nodes` adds isolated nodes not mentioned by any edge.
  static Graph from_edges(bool directed, const std::vector<Edge>& edges,
                          const std::vector<NodeId>& extra_nodes = {});

  void add_node(NodeId v);
  /// Appends an edge. Both endpoints must already be nodes and the weight
  /// must be >= 1.
  void add_edge(NodeId u, NodeId v, int weight);

  bool directed() const { return directed_; }
  std::size_t node_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  bool has_node(NodeId v) const { return adjacency_.count(v) != 0; }

  /// Node ids in ascending order.
  std::vector<NodeId> nodes() const;
  const std::vector<Edge>& edges() const { return edges_; }

  /// Number of edge-endpoint incidences at v. A self-loop contributes 2;
  /// multi-edges count individually.
  int degree(NodeId v) const;

  /// Distinct adjacent nodes in ascending order. v itself appears only if
  /// it has a self-loop.
  std::vector<NodeId> neighbors(NodeId v) const;

  /// True if any edge joins u and v (either stored orientation).
  bool adjacent(NodeId u, NodeId v) const;

  /// Weight of the first-inserted edge between u and v, if any.
  std::optional<int> first_edge_weight(NodeId u, NodeId v) const;

  /// Indices into edges() of the edges incident to v, in insertion order.
  /// A self-loop index appears twice.
  const std::vector<std::size_t>& incident_edges(NodeId v) const;

  nlohmann::json to_json() const;
  static Graph from_json(const nlohmann::json& j);

  /// Canonical single-line JSON; equal graphs serialize to equal bytes.
  std::string to_json_string() const;
  static Graph from_json_string(const std::string& text);

  bool operator==(const Graph& other) const;

 private:
  bool directed_ = false;
  std::vector<Edge> edges_;
  std::map<NodeId, std::vector<std::size_t>> adjacency_;  // node -> incident edge indices
};

void save_graph(const Graph& g, const std::string& path);
Graph load_graph(const std::string& path);

}  // namespace graphinsight
