#include "graphinsight/pagerank.hpp"

#include <stdexcept>
#include <vector>

#include <Eigen/Core>

namespace graphinsight {

double PageRankVector::at(NodeId v) const {
  auto it = scores.find(v);
  if (it == scores.end()) throw std::invalid_argument("unknown node");
  return it->second;
}

PageRankVector pagerank(const Graph& g, double damping, int max_iter, double tol) {
  if (g.node_count() == 0) throw std::invalid_argument("empty graph");
  if (!(damping > 0.0 && damping < 1.0)) throw std::invalid_argument("damping must be in (0, 1)");
  if (max_iter < 0 || tol < 0.0) throw std::invalid_argument("max_iter and tol must be non-negative");

  const auto nodes = g.nodes();
  const int n = static_cast<int>(nodes.size());
  std::map<NodeId, int> index;
  for (int i = 0; i < n; ++i) index[nodes[i]] = i;

  struct Arc {
    int from, to;
  };
  std::vector<Arc> arcs;
  arcs.reserve(g.edge_count() * 2);
  Eigen::VectorXd out_degree = Eigen::VectorXd::Zero(n);
  for (const Edge& e : g.edges()) {
    int iu = index[e.u], iv = index[e.v];
    arcs.push_back({iu, iv});
    out_degree[iu] += 1.0;
    if (!g.directed()) {
      arcs.push_back({iv, iu});
      out_degree[iv] += 1.0;
    }
  }

  Eigen::VectorXd rank = Eigen::VectorXd::Constant(n, 1.0 / n);
  Eigen::VectorXd next(n);
  const double teleport = (1.0 - damping) / n;
  int iterations = 0;
  for (; iterations < max_iter; ++iterations) {
    double dangling_mass = 0.0;
    for (int i = 0; i < n; ++i)
      if (out_degree[i] == 0.0) dangling_mass += rank[i];
    next.setConstant(teleport + damping * dangling_mass / n);
    for (const Arc& a : arcs) next[a.to] += damping * rank[a.from] / out_degree[a.from];
    const double change = (next - rank).lpNorm<1>();
    rank.swap(next);
    if (change < tol) {
      ++iterations;
      break;
    }
  }

  PageRankVector result;
  result.damping = damping;
  result.iterations_run = iterations;
  for (int i = 0; i < n; ++i) result.scores[nodes[i]] = rank[i];
  return result;
}

}  // namespace graphinsight
