#pragma once

#include <utility>
#include <vector>

namespace graphinsight {

struct WilcoxonResult {
  double statistic = 0.0;  // W = min(w_plus, w_minus)
  double w_plus = 0.0;
  double w_minus = 0.0;
  double one_sided_p = 0.0;  // P(W <= observed) in the observed direction
  double two_sided_p = 0.0;
};

/// Signed-rank test over paired samples (a_i, b_i) with differences
/// d_i = b_i - a_i. Zero differences are dropped; ties get midranks. The
/// p-value is exact (full sign enumeration, via subset-sum counting) for up
/// to 25 nonzero differences and a tie-corrected normal approximation
/// beyond. Requires at least 5 nonzero differences; all-zero input is a
/// degenerate sample.
WilcoxonResult wilcoxon_signed_rank(const std::vector<std::pair<double, double>>& pairs);

}  // namespace graphinsight
