#include "graphinsight/oracles.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace graphinsight {

namespace {

void require_node(const Graph& g, NodeId v) {
  if (!g.has_node(v)) throw std::invalid_argument("unknown node");
}

void require_edge(const Graph& g, NodeId u, NodeId v) {
  require_node(g, u);
  require_node(g, v);
  if (!g.adjacent(u, v)) throw std::invalid_argument("no such edge");
}

}  // namespace

int node_count(const Graph& g) { return static_cast<int>(g.node_count()); }

std::map<NodeId, int> bfs_distances(const Graph& g, NodeId v) {
  require_node(g, v);
  std::map<NodeId, int> dist;
  dist[v] = 0;
  std::deque<NodeId> queue{v};
  while (!queue.empty()) {
    NodeId x = queue.front();
    queue.pop_front();
    for (NodeId y : g.neighbors(x)) {
      if (!dist.count(y)) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return dist;
}

bool is_connected(const Graph& g) {
  if (g.node_count() == 0) throw std::invalid_argument("empty graph");
  NodeId start = g.nodes().front();
  return bfs_distances(g, start).size() == g.node_count();
}

bool has_cycle(const Graph& g) {
  // Union-find over undirected incidences; joining two already-connected
  // endpoints (or a self-loop) closes a cycle.
  std::map<NodeId, NodeId> parent;
  for (NodeId v : g.nodes()) parent[v] = v;
  auto find = [&](NodeId v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };
  for (const Edge& e : g.edges()) {
    if (e.u == e.v) return true;
    NodeId ru = find(e.u), rv = find(e.v);
    if (ru == rv) return true;
    parent[ru] = rv;
  }
  return false;
}

int max_edge_weight(const Graph& g) {
  if (g.edge_count() == 0) throw std::invalid_argument("no edges");
  int best = 0;
  for (const Edge& e : g.edges()) best = std::max(best, e.weight);
  return best;
}

ScoredPairList top_k_degrees(const Graph& g, int k) {
  if (k < 1 || static_cast<std::size_t>(k) > g.node_count())
    throw std::invalid_argument("k out of range");
  ScoredPairList all;
  for (NodeId v : g.nodes()) all.emplace_back(v, g.degree(v));
  std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  all.resize(static_cast<std::size_t>(k));
  return all;
}

bool direct_connection(const Graph& g, NodeId u, NodeId v) {
  require_node(g, u);
  require_node(g, v);
  return g.adjacent(u, v);
}

int edge_weight(const Graph& g, NodeId u, NodeId v) {
  require_node(g, u);
  require_node(g, v);
  auto w = g.first_edge_weight(u, v);
  if (!w) throw std::invalid_argument("no such edge");
  return *w;
}

bool is_leaf(const Graph& g, NodeId v) { return g.degree(v) == 1; }

bool even_degree(const Graph& g, NodeId v) { return g.degree(v) % 2 == 0; }

std::set<NodeId> common_neighbors(const Graph& g, NodeId u, NodeId v) {
  auto nu = g.neighbors(u);
  auto nv = g.neighbors(v);
  std::set<NodeId> out;
  std::set_intersection(nu.begin(), nu.end(), nv.begin(), nv.end(),
                        std::inserter(out, out.end()));
  return out;
}

bool degree_greater(const Graph& g, NodeId u, NodeId v) {
  return g.degree(u) > g.degree(v);
}

std::set<NodePair> connected_edges(const Graph& g, NodeId u, NodeId v) {
  require_edge(g, u, v);
  std::set<NodePair> out;
  for (NodeId anchor : {u, v}) {
    for (std::size_t idx : g.incident_edges(anchor)) {
      const Edge& e = g.edges()[idx];
      out.emplace(anchor, e.u == anchor ? e.v : e.u);
    }
  }
  return out;
}

bool complete_subgraph(const Graph& g, const std::vector<NodeId>& nodes) {
  for (NodeId v : nodes) require_node(g, v);
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (std::size_t j = i + 1; j < nodes.size(); ++j)
      if (!g.adjacent(nodes[i], nodes[j])) return false;
  return true;
}

NodeId highest_degree_nn(const Graph& g, NodeId v) {
  require_node(g, v);
  bool found = false;
  NodeId best = 0;
  int best_degree = -1;
  for (NodeId u : g.neighbors(v)) {
    for (NodeId w : g.neighbors(u)) {
      if (w == v) continue;
      int d = g.degree(w);
      if (d > best_degree) {
        best = w;
        best_degree = d;
        found = true;
      }
    }
  }
  if (!found) throw std::runtime_error("no neighbors of neighbors");
  return best;
}

std::set<NodeId> k_order_neighbors(const Graph& g, NodeId v, int k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  std::set<NodeId> out;
  for (const auto& [node, d] : bfs_distances(g, v))
    if (d == k) out.insert(node);
  return out;
}

std::set<NodeId> neighbors_connected_to(const Graph& g, NodeId v, NodeId m) {
  require_node(g, m);
  std::set<NodeId> out;
  for (NodeId x : g.neighbors(v))
    if (g.adjacent(x, m)) out.insert(x);
  return out;
}

std::set<NodeTriple> triangles(const Graph& g, NodeId v) {
  std::set<NodeTriple> out;
  auto nbrs = g.neighbors(v);
  for (std::size_t i = 0; i < nbrs.size(); ++i) {
    if (nbrs[i] == v) continue;
    for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
      if (nbrs[j] == v) continue;
      if (g.adjacent(nbrs[i], nbrs[j])) out.insert(make_triple(v, nbrs[i], nbrs[j]));
    }
  }
  return out;
}

std::set<NodePair> neighbor_pairs(const Graph& g, NodeId v) {
  std::set<NodePair> out;
  auto nbrs = g.neighbors(v);
  for (std::size_t i = 0; i < nbrs.size(); ++i) {
    if (nbrs[i] == v) continue;
    for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
      if (nbrs[j] == v) continue;
      if (g.adjacent(nbrs[i], nbrs[j])) out.insert(make_sorted_pair(nbrs[i], nbrs[j]));
    }
  }
  return out;
}

std::set<NodeId> edge_common_neighbors(const Graph& g, NodeId u, NodeId v) {
  require_edge(g, u, v);
  return common_neighbors(g, u, v);
}

std::set<NodeId> common_k_order(const Graph& g, NodeId u, NodeId v, int k) {
  auto a = k_order_neighbors(g, u, k);
  auto b = k_order_neighbors(g, v, k);
  std::set<NodeId> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::inserter(out, out.end()));
  return out;
}

}  // namespace graphinsight
