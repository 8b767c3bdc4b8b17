#include "graphinsight/reorganize.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace graphinsight {

std::vector<SubgraphBlock> decompose(const Graph& g, const PageRankVector& pr) {
  if (pr.scores.size() != g.node_count())
    throw std::invalid_argument("pagerank vector does not match graph");

  std::vector<NodeId> order = g.nodes();
  std::sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
    double pa = pr.at(a), pb = pr.at(b);
    if (pa != pb) return pa > pb;
    return a < b;
  });

  std::vector<bool> claimed(g.edge_count(), false);
  std::vector<SubgraphBlock> blocks;
  for (NodeId center : order) {
    SubgraphBlock block;
    block.center = center;
    block.importance = pr.at(center);
    std::set<std::size_t> taken;
    std::set<NodeId> members{center};
    for (std::size_t idx : g.incident_edges(center)) {
      if (claimed[idx] || !taken.insert(idx).second) continue;
      claimed[idx] = true;
      const Edge& e = g.edges()[idx];
      block.edge_indices.push_back(idx);
      block.edges.push_back(e);
      members.insert(e.u);
      members.insert(e.v);
    }
    if (block.edges.empty()) continue;
    block.nodes.assign(members.begin(), members.end());
    blocks.push_back(std::move(block));
  }
  return blocks;
}

std::size_t RegionLayout::total_edges() const {
  std::size_t n = 0;
  for (const auto& b : head) n += b.size();
  for (const auto& b : middle) n += b.size();
  for (const auto& b : tail) n += b.size();
  return n;
}

std::vector<const SubgraphBlock*> RegionLayout::sequence_blocks() const {
  std::vector<const SubgraphBlock*> out;
  for (const auto& b : head) out.push_back(&b);
  for (const auto& b : middle) out.push_back(&b);
  for (const auto& b : tail) out.push_back(&b);
  return out;
}

nlohmann::json RegionLayout::to_json() const {
  auto blocks_json = [](const std::vector<SubgraphBlock>& blocks) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& b : blocks) {
      nlohmann::json edges = nlohmann::json::array();
      for (const Edge& e : b.edges) edges.push_back({e.u, e.v, e.weight});
      arr.push_back({{"center", b.center}, {"importance", b.importance}, {"edges", edges}});
    }
    return arr;
  };
  return {{"alpha_pct", alpha_pct},
          {"beta_pct", beta_pct},
          {"head_capacity", head_capacity},
          {"tail_capacity", tail_capacity},
          {"head", blocks_json(head)},
          {"middle", blocks_json(middle)},
          {"tail", blocks_json(tail)}};
}

std::pair<DescriptionSequence, RegionLayout> reorganize(
    const std::vector<SubgraphBlock>& blocks, double alpha_pct, double beta_pct,
    bool directed) {
  if (alpha_pct < 0.0 || beta_pct < 0.0 || alpha_pct + beta_pct > 100.0)
    throw std::invalid_argument("regions exceed sequence");

  std::size_t total = 0;
  for (const auto& b : blocks) total += b.size();

  RegionLayout layout;
  layout.alpha_pct = alpha_pct;
  layout.beta_pct = beta_pct;
  layout.head_capacity =
      static_cast<std::size_t>(std::lround(alpha_pct / 100.0 * static_cast<double>(total)));
  layout.tail_capacity =
      static_cast<std::size_t>(std::lround(beta_pct / 100.0 * static_cast<double>(total)));

  // Greedy by importance: a block lands in the first strong region with
  // room for all of its edges, head preferred; blocks too large for the
  // remaining room fall through to the middle, which stays
  // importance-descending, so skipped blocks sit at its front.
  std::size_t head_used = 0, tail_used = 0;
  for (const auto& block : blocks) {
    if (head_used + block.size() <= layout.head_capacity) {
      layout.head.push_back(block);
      head_used += block.size();
    } else if (tail_used + block.size() <= layout.tail_capacity) {
      layout.tail.push_back(block);
      tail_used += block.size();
    } else {
      layout.middle.push_back(block);
    }
  }

  DescriptionSequence seq;
  seq.header = description_preamble(directed);
  for (const SubgraphBlock* b : layout.sequence_blocks()) {
    for (std::size_t i = 0; i < b->edges.size(); ++i) {
      const Edge& e = b->edges[i];
      seq.clauses.push_back(EdgeClause{e.u, e.v, e.weight});
      seq.position_map.push_back(b->edge_indices[i]);
    }
  }
  return {std::move(seq), std::move(layout)};
}

namespace {

ImportanceProfile normalize_profile(std::vector<double> weights) {
  double sum = 0.0;
  for (double w : weights) {
    if (w < 0.0) throw std::invalid_argument("importance weights must be non-negative");
    sum += w;
  }
  if (sum <= 0.0) throw std::invalid_argument("importance profile has no mass");
  for (double& w : weights) w /= sum;
  return ImportanceProfile{std::move(weights)};
}

}  // namespace

ImportanceProfile layout_profile(const RegionLayout& layout) {
  std::vector<double> weights;
  for (const SubgraphBlock* b : layout.sequence_blocks())
    weights.insert(weights.end(), b->size(), b->importance);
  return normalize_profile(std::move(weights));
}

ImportanceProfile raw_profile(const Graph& g, const std::vector<SubgraphBlock>& blocks) {
  std::vector<double> weights(g.edge_count(), -1.0);
  for (const auto& b : blocks)
    for (std::size_t idx : b.edge_indices) weights[idx] = b.importance;
  for (double w : weights)
    if (w < 0.0) throw std::invalid_argument("blocks do not cover the edge set");
  return normalize_profile(std::move(weights));
}

double kl_diagnostic(const ImportanceProfile& profile, const PositionalBiasModel& psi) {
  const std::size_t n = profile.size();
  if (n == 0) throw std::invalid_argument("empty profile");
  std::vector<double> q(n);
  double qsum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    q[i] = psi.recall_at(i, n);
    qsum += q[i];
  }
  if (qsum <= 0.0) throw std::invalid_argument("unsupported support mismatch");
  double kl = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double p = profile.weights[i];
    if (p == 0.0) continue;
    double qi = q[i] / qsum;
    if (qi == 0.0) throw std::invalid_argument("unsupported support mismatch");
    kl += p * std::log(p / qi);
  }
  return std::max(kl, 0.0);
}

}  // namespace graphinsight
