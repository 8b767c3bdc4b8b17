#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>

namespace graphinsight {

/// Three-plateau positional recall curve: a head plateau, a middle trough,
/// and a tail plateau, evaluated per clause position. Head and tail must
/// not dip below the middle (U-shape). Region boundaries are measured in
/// whole clauses, matching the region capacities used for reordering.
struct PositionalBiasModel {
  double head_recall = 1.0;
  double middle_recall = 1.0;
  double tail_recall = 1.0;
  double head_fraction = 0.045;
  double tail_fraction = 0.105;

  PositionalBiasModel() = default;
  PositionalBiasModel(double head, double middle, double tail,
                      double head_frac = 0.045, double tail_frac = 0.105)
      : head_recall(head),
        middle_recall(middle),
        tail_recall(tail),
        head_fraction(head_frac),
        tail_fraction(tail_frac) {
    validate();
  }

  static PositionalBiasModel uniform(double p) { return {p, p, p}; }

  void validate() const {
    auto in_unit = [](double x) { return x >= 0.0 && x <= 1.0; };
    if (!in_unit(head_recall) || !in_unit(middle_recall) || !in_unit(tail_recall))
      throw std::invalid_argument("recall probabilities must be in [0, 1]");
    if (head_recall < middle_recall || tail_recall < middle_recall)
      throw std::invalid_argument("head/tail recall must be >= middle recall");
    if (!in_unit(head_fraction) || !in_unit(tail_fraction) ||
        head_fraction + tail_fraction > 1.0)
      throw std::invalid_argument("region fractions must be in [0, 1] with sum <= 1");
  }

  std::size_t head_clauses(std::size_t n) const {
    return static_cast<std::size_t>(std::lround(head_fraction * static_cast<double>(n)));
  }
  std::size_t tail_clauses(std::size_t n) const {
    return static_cast<std::size_t>(std::lround(tail_fraction * static_cast<double>(n)));
  }

  /// Recall probability for clause `i` of a sequence of `n` clauses.
  double recall_at(std::size_t i, std::size_t n) const {
    if (n == 0) return middle_recall;
    if (i < head_clauses(n)) return head_recall;
    if (i + tail_clauses(n) >= n) return tail_recall;
    return middle_recall;
  }

  /// Mean recall across positions; the model's overall comprehension level.
  double mean_recall(std::size_t n) const {
    if (n == 0) return middle_recall;
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) sum += recall_at(i, n);
    return sum / static_cast<double>(n);
  }
};

}  // namespace graphinsight
