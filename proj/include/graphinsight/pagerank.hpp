#pragma once

#include <map>

#include "graphinsight/graph.hpp"

namespace graphinsight {

struct PageRankVector {
  std::map<NodeId, double> scores;
  double damping = 0.85;
  int iterations_run = 0;

  double at(NodeId v) const;
};

/// Power iteration from the uniform vector until the L1 change drops below
/// `tol` or `max_iter` sweeps have run. Undirected edges act as two directed
/// arcs; multi-edges carry multiplicity; dangling nodes spread their mass
/// uniformly over all nodes each sweep, so scores stay a probability vector.
PageRankVector pagerank(const Graph& g, double damping = 0.85, int max_iter = 100,
                        double tol = 1e-8);

}  // namespace graphinsight
