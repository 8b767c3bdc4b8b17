#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "graphinsight/bias.hpp"
#include "graphinsight/description.hpp"
#include "graphinsight/graph.hpp"
#include "graphinsight/pagerank.hpp"

namespace graphinsight {

/// Edges claimed by one center node, with the center's PageRank score as
/// the block's importance. Blocks partition the edge set.
struct SubgraphBlock {
  NodeId center = 0;
  double importance = 0.0;
  std::vector<std::size_t> edge_indices;  // into Graph::edges(), claim order
  std::vector<Edge> edges;
  std::vector<NodeId> nodes;  // center plus claimed endpoints, ascending

  std::size_t size() const { return edges.size(); }
};

/// Walks nodes by PageRank descending (ties: ascending id); each center
/// claims its not-yet-claimed incident edges and becomes a block if it
/// claimed at least one. The returned blocks are edge-disjoint, cover every
/// edge, and arrive sorted by importance descending.
std::vector<SubgraphBlock> decompose(const Graph& g, const PageRankVector& pr);

/// Head/tail strong regions and the middle weak region, all measured in
/// edges. Blocks are atomic: none straddles a region boundary.
struct RegionLayout {
  double alpha_pct = 0.0;
  double beta_pct = 0.0;
  std::size_t head_capacity = 0;
  std::size_t tail_capacity = 0;
  std::vector<SubgraphBlock> head;
  std::vector<SubgraphBlock> middle;
  std::vector<SubgraphBlock> tail;

  std::size_t total_edges() const;
  /// Blocks in output order: head, then middle, then tail.
  std::vector<const SubgraphBlock*> sequence_blocks() const;

  nlohmann::json to_json() const;
};

/// Places blocks (already importance-descending) whole into the strong
/// regions, head preferred over tail; a block that fits neither region's
/// remaining space joins the middle, which stays importance-descending.
/// Head capacity is round(alpha% * |E|) edges, tail capacity
/// round(beta% * |E|).
std::pair<DescriptionSequence, RegionLayout> reorganize(
    const std::vector<SubgraphBlock>& blocks, double alpha_pct, double beta_pct,
    bool directed = false);

/// Per-clause importance, each clause inheriting its block's importance,
/// normalized to sum 1.
struct ImportanceProfile {
  std::vector<double> weights;

  std::size_t size() const { return weights.size(); }
};

/// Profile of a sequence laid out by `layout` (head, middle, tail order).
ImportanceProfile layout_profile(const RegionLayout& layout);

/// Profile of the insertion-order sequence: clause i carries the importance
/// of the block that claimed edge i.
ImportanceProfile raw_profile(const Graph& g, const std::vector<SubgraphBlock>& blocks);

/// KL divergence D(profile || bias curve discretized over the same clause
/// positions), with 0 * log(0/q) taken as 0. Throws if the bias curve puts
/// zero mass where the profile has positive mass.
double kl_diagnostic(const ImportanceProfile& profile, const PositionalBiasModel& psi);

}  // namespace graphinsight
