#pragma once

#include <array>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "graphinsight/graph.hpp"

namespace graphinsight {

enum class AnswerType {
  boolean,
  number,
  node_set,
  pair_set,
  triple_set,
  scored_pair_list,
};

std::string to_string(AnswerType t);
AnswerType answer_type_from_string(const std::string& s);

using NodePair = std::pair<NodeId, NodeId>;
using NodeTriple = std::array<NodeId, 3>;
/// (node, degree) entries, ordered by degree descending then id ascending.
using ScoredPairList = std::vector<std::pair<NodeId, int>>;

/// A typed ground-truth or parsed answer. Pairs keep the orientation they
/// were produced with (some answers are anchored ordered pairs); producers
/// of unordered pairs emit them low-id-first. Triples are always stored
/// sorted ascending.
class TypedAnswer {
 public:
  using Value = std::variant<bool, double, std::set<NodeId>, std::set<NodePair>,
                             std::set<NodeTriple>, ScoredPairList>;

  TypedAnswer() : value_(false) {}
  explicit TypedAnswer(Value v) : value_(std::move(v)) {}

  static TypedAnswer boolean(bool b) { return TypedAnswer(Value(b)); }
  static TypedAnswer number(double x) { return TypedAnswer(Value(x)); }
  static TypedAnswer node_set(std::set<NodeId> s) { return TypedAnswer(Value(std::move(s))); }
  static TypedAnswer pair_set(std::set<NodePair> s) { return TypedAnswer(Value(std::move(s))); }
  static TypedAnswer triple_set(std::set<NodeTriple> s) { return TypedAnswer(Value(std::move(s))); }
  static TypedAnswer scored_pairs(ScoredPairList l) { return TypedAnswer(Value(std::move(l))); }

  AnswerType type() const;
  const Value& value() const { return value_; }

  bool as_bool() const { return std::get<bool>(value_); }
  double as_number() const { return std::get<double>(value_); }
  const std::set<NodeId>& as_node_set() const { return std::get<std::set<NodeId>>(value_); }
  const std::set<NodePair>& as_pair_set() const { return std::get<std::set<NodePair>>(value_); }
  const std::set<NodeTriple>& as_triple_set() const { return std::get<std::set<NodeTriple>>(value_); }
  const ScoredPairList& as_scored_pairs() const { return std::get<ScoredPairList>(value_); }

  /// Plain-text rendering: Yes/No, bare numbers, "[1, 2]", "[(1, 2)]", ...
  std::string render() const;

  nlohmann::json to_json() const;
  static TypedAnswer from_json(const nlohmann::json& j, AnswerType type);

  bool operator==(const TypedAnswer& other) const { return value_ == other.value_; }

 private:
  Value value_;
};

/// Triple canonicalization: members sorted ascending.
NodeTriple make_triple(NodeId a, NodeId b, NodeId c);
/// Unordered-pair canonicalization: low id first.
NodePair make_sorted_pair(NodeId a, NodeId b);

}  // namespace graphinsight
