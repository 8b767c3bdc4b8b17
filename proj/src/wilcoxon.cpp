#include "graphinsight/wilcoxon.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>

namespace graphinsight {

namespace {

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

}  // namespace

WilcoxonResult wilcoxon_signed_rank(const std::vector<std::pair<double, double>>& pairs) {
  std::vector<double> diffs;
  diffs.reserve(pairs.size());
  for (const auto& [a, b] : pairs) {
    const double d = b - a;
    if (d != 0.0) diffs.push_back(d);
  }
  if (diffs.empty()) throw std::invalid_argument("degenerate sample");
  if (diffs.size() < 5) throw std::invalid_argument("need at least 5 nonzero differences");

  const std::size_t n = diffs.size();
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return std::abs(diffs[i]) < std::abs(diffs[j]);
  });

  // Midranks, doubled so ties stay integral.
  std::vector<long long> rank2(n, 0);
  std::map<long long, long long> tie_counts;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && std::abs(diffs[order[j]]) == std::abs(diffs[order[i]])) ++j;
    const long long doubled = static_cast<long long>(i + 1 + j) ;  // 2 * mean of ranks i+1..j
    for (std::size_t k = i; k < j; ++k) rank2[order[k]] = doubled;
    tie_counts[doubled] += static_cast<long long>(j - i);
    i = j;
  }

  long long wp2 = 0, wm2 = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (diffs[i] > 0) wp2 += rank2[i];
    else wm2 += rank2[i];
  }

  WilcoxonResult result;
  result.w_plus = static_cast<double>(wp2) / 2.0;
  result.w_minus = static_cast<double>(wm2) / 2.0;
  result.statistic = std::min(result.w_plus, result.w_minus);
  const long long w2_obs = std::min(wp2, wm2);

  if (n <= 25) {
    // Exact null distribution of the doubled positive-rank sum.
    const long long total2 = wp2 + wm2;
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(total2) + 1, 0);
    counts[0] = 1;
    long long reached = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const long long r = rank2[i];
      reached += r;
      for (long long s = reached; s >= r; --s)
        counts[static_cast<std::size_t>(s)] += counts[static_cast<std::size_t>(s - r)];
    }
    std::uint64_t at_most = 0;
    for (long long s = 0; s <= w2_obs; ++s) at_most += counts[static_cast<std::size_t>(s)];
    const double denom = std::pow(2.0, static_cast<double>(n));
    result.one_sided_p = static_cast<double>(at_most) / denom;
  } else {
    const double dn = static_cast<double>(n);
    const double mean = dn * (dn + 1.0) / 4.0;
    double tie_term = 0.0;
    for (const auto& [_, t] : tie_counts) {
      const double td = static_cast<double>(t);
      tie_term += (td * td * td - td);
    }
    const double var = dn * (dn + 1.0) * (2.0 * dn + 1.0) / 24.0 - tie_term / 48.0;
    const double z = (result.statistic - mean) / std::sqrt(var);
    result.one_sided_p = normal_cdf(z);
  }
  result.two_sided_p = std::min(1.0, 2.0 * result.one_sided_p);
  return result;
}

}  // namespace graphinsight
