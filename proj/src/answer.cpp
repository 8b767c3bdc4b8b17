#include "graphinsight/answer.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace graphinsight {

std::string to_string(AnswerType t) {
  switch (t) {
    case AnswerType::boolean: return "boolean";
    case AnswerType::number: return "number";
    case AnswerType::node_set: return "node_set";
    case AnswerType::pair_set: return "pair_set";
    case AnswerType::triple_set: return "triple_set";
    case AnswerType::scored_pair_list: return "scored_pair_list";
  }
  throw std::logic_error("unreachable answer type");
}

AnswerType answer_type_from_string(const std::string& s) {
  if (s == "boolean") return AnswerType::boolean;
  if (s == "number") return AnswerType::number;
  if (s == "node_set") return AnswerType::node_set;
  if (s == "pair_set") return AnswerType::pair_set;
  if (s == "triple_set") return AnswerType::triple_set;
  if (s == "scored_pair_list") return AnswerType::scored_pair_list;
  throw std::invalid_argument("unknown answer type: " + s);
}

AnswerType TypedAnswer::type() const {
  return static_cast<AnswerType>(value_.index());
}

namespace {

std::string render_number(double x) {
  if (std::floor(x) == x && std::abs(x) < 1e15) {
    return std::to_string(static_cast<long long>(x));
  }
  std::ostringstream os;
  os.precision(12);
  os << x;
  return os.str();
}

}  // namespace

std::string TypedAnswer::render() const {
  std::ostringstream os;
  switch (type()) {
    case AnswerType::boolean:
      return as_bool() ? "Yes" : "No";
    case AnswerType::number:
      return render_number(as_number());
    case AnswerType::node_set: {
      os << "[";
      bool first = true;
      for (NodeId v : as_node_set()) {
        if (!first) os << ", ";
        os << v;
        first = false;
      }
      os << "]";
      return os.str();
    }
    case AnswerType::pair_set: {
      os << "[";
      bool first = true;
      for (const auto& [a, b] : as_pair_set()) {
        if (!first) os << ", ";
        os << "(" << a << ", " << b << ")";
        first = false;
      }
      os << "]";
      return os.str();
    }
    case AnswerType::triple_set: {
      os << "[";
      bool first = true;
      for (const auto& t : as_triple_set()) {
        if (!first) os << ", ";
        os << "(" << t[0] << ", " << t[1] << ", " << t[2] << ")";
        first = false;
      }
      os << "]";
      return os.str();
    }
    case AnswerType::scored_pair_list: {
      os << "[";
      bool first = true;
      for (const auto& [v, d] : as_scored_pairs()) {
        if (!first) os << ", ";
        os << "(" << v << ", " << d << ")";
        first = false;
      }
      os << "]";
      return os.str();
    }
  }
  throw std::logic_error("unreachable answer type");
}

nlohmann::json TypedAnswer::to_json() const {
  switch (type()) {
    case AnswerType::boolean:
      return as_bool();
    case AnswerType::number: {
      double x = as_number();
      if (std::floor(x) == x && std::abs(x) < 1e15) return static_cast<long long>(x);
      return x;
    }
    case AnswerType::node_set:
      return nlohmann::json(as_node_set());
    case AnswerType::pair_set: {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& [a, b] : as_pair_set()) arr.push_back({a, b});
      return arr;
    }
    case AnswerType::triple_set: {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& t : as_triple_set()) arr.push_back({t[0], t[1], t[2]});
      return arr;
    }
    case AnswerType::scored_pair_list: {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& [v, d] : as_scored_pairs()) arr.push_back({v, d});
      return arr;
    }
  }
  throw std::logic_error("unreachable answer type");
}

TypedAnswer TypedAnswer::from_json(const nlohmann::json& j, AnswerType type) {
  switch (type) {
    case AnswerType::boolean:
      return boolean(j.get<bool>());
    case AnswerType::number:
      return number(j.get<double>());
    case AnswerType::node_set:
      return node_set(std::set<NodeId>(j.begin(), j.end()));
    case AnswerType::pair_set: {
      std::set<NodePair> s;
      for (const auto& e : j) s.emplace(e.at(0).get<NodeId>(), e.at(1).get<NodeId>());
      return pair_set(std::move(s));
    }
    case AnswerType::triple_set: {
      std::set<NodeTriple> s;
      for (const auto& e : j)
        s.insert(NodeTriple{e.at(0).get<NodeId>(), e.at(1).get<NodeId>(), e.at(2).get<NodeId>()});
      return triple_set(std::move(s));
    }
    case AnswerType::scored_pair_list: {
      ScoredPairList l;
      for (const auto& e : j) l.emplace_back(e.at(0).get<NodeId>(), e.at(1).get<int>());
      return scored_pairs(std::move(l));
    }
  }
  throw std::logic_error("unreachable answer type");
}

NodeTriple make_triple(NodeId a, NodeId b, NodeId c) {
  NodeTriple t{a, b, c};
  std::sort(t.begin(), t.end());
  return t;
}

NodePair make_sorted_pair(NodeId a, NodeId b) {
  return a <= b ? NodePair{a, b} : NodePair{b, a};
}

}  // namespace graphinsight
