#pragma once

#include <set>
#include <vector>

#include "graphinsight/answer.hpp"
#include "graphinsight/graph.hpp"

namespace graphinsight {

// Exact graph computations used for benchmark ground truth, for the
// simulated responder, and for cross-checking in tests. All functions
// validate referenced nodes/edges and throw std::invalid_argument or
// std::runtime_error on bad input.

// --- whole-graph queries ---

int node_count(const Graph& g);

/// Every pair of nodes connected, edges traversed both ways.
bool is_connected(const Graph& g);

/// True iff any cycle exists; a self-loop or a duplicated edge counts.
bool has_cycle(const Graph& g);

/// Maximum edge weight. Throws "no edges" on an edgeless graph.
int max_edge_weight(const Graph& g);

/// k (node, degree) pairs, degree descending then node id ascending.
ScoredPairList top_k_degrees(const Graph& g, int k);

// --- node/edge-local queries ---

bool direct_connection(const Graph& g, NodeId u, NodeId v);

/// Weight of the first-inserted edge between u and v.
/// Throws "no such edge" if none exists.
int edge_weight(const Graph& g, NodeId u, NodeId v);

bool is_leaf(const Graph& g, NodeId v);
bool even_degree(const Graph& g, NodeId v);
std::set<NodeId> common_neighbors(const Graph& g, NodeId u, NodeId v);
bool degree_greater(const Graph& g, NodeId u, NodeId v);

// --- multi-step queries ---

/// All edges sharing an endpoint with the anchor edge (u, v), each emitted
/// as an ordered (anchor, other) pair; the anchor edge itself appears once
/// per endpoint. Throws if the anchor edge is absent.
std::set<NodePair> connected_edges(const Graph& g, NodeId u, NodeId v);

/// True iff every pair of the given nodes is adjacent.
bool complete_subgraph(const Graph& g, const std::vector<NodeId>& nodes);

/// Walks neighbors of v ascending, then their neighbors ascending
/// (skipping v), and keeps the first strictly-highest-degree node seen.
/// Throws "no neighbors of neighbors" when the candidate set is empty.
NodeId highest_degree_nn(const Graph& g, NodeId v);

/// Nodes at shortest-path distance exactly k from v (closer nodes excluded).
std::set<NodeId> k_order_neighbors(const Graph& g, NodeId v, int k);

/// Neighbors of v that are directly connected to m.
std::set<NodeId> neighbors_connected_to(const Graph& g, NodeId v, NodeId m);

/// All triangles {v, a, b} with a, b adjacent neighbors of v, sorted.
std::set<NodeTriple> triangles(const Graph& g, NodeId v);

/// Adjacent unordered pairs within neighbors(v), low id first.
std::set<NodePair> neighbor_pairs(const Graph& g, NodeId v);

/// Common neighbors of an edge's endpoints. Throws if the edge is absent.
std::set<NodeId> edge_common_neighbors(const Graph& g, NodeId u, NodeId v);

/// Intersection of the two k-order neighbor sets.
std::set<NodeId> common_k_order(const Graph& g, NodeId u, NodeId v, int k);

/// BFS hop distances from v; unreachable nodes are absent from the map.
std::map<NodeId, int> bfs_distances(const Graph& g, NodeId v);

}  // namespace graphinsight
