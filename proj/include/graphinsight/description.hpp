#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "graphinsight/graph.hpp"

namespace graphinsight {

/// One rendered edge statement.
struct EdgeClause {
  NodeId u = 0;
  NodeId v = 0;
  int weight = 1;

  /// "From node {u} to node {v} with weight {w};"
  std::string text() const;

  bool operator==(const EdgeClause&) const = default;
};

std::string description_preamble(bool directed);

/// An ordered clause rendering of a graph. position_map[i] is the index in
/// Graph::edges() of the edge behind clause i; for any permutation-style
/// rendering it is a bijection onto the edge indices.
struct DescriptionSequence {
  std::string header;
  std::vector<EdgeClause> clauses;
  std::vector<std::size_t> position_map;

  /// Header plus one clause per line.
  std::string text() const;
};

/// Edge-by-edge description in insertion order. An edgeless graph yields
/// the preamble with zero clauses.
DescriptionSequence render_raw(const Graph& g);

enum class TraversalOrder { bfs, dfs, shortest_path };

/// Re-emits every edge exactly once, ordered by first traversal touch from
/// `root`. Unreachable components follow in ascending min-node-id order,
/// re-rooted at their min node. Neighbor visits are ascending by id.
DescriptionSequence reorder(const Graph& g, TraversalOrder order, NodeId root);

enum class StructuralFormat { adjacency_list, adjacency_matrix };

/// Adjacency list ("v: [(nbr, w), ...]" per node, ascending) or adjacency
/// matrix (weight rows over nodes in ascending order; requires no
/// multi-edges). Deterministic byte-for-byte.
std::string render_structural(const Graph& g, StructuralFormat format);

std::string adjacency_list_preamble(bool directed);
std::string adjacency_matrix_preamble(bool directed);

/// Parses a clause line back into its edge; returns false if the line is
/// not a clause.
bool parse_clause(const std::string& line, EdgeClause& out);

/// Parses a full sequential description (preamble + clause lines).
/// Inverse of DescriptionSequence::text() for sequential renderings.
struct ParsedDescription {
  bool directed = false;
  std::vector<EdgeClause> clauses;
};
ParsedDescription parse_description(const std::string& text);

}  // namespace graphinsight
