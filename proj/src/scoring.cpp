#include "graphinsight/scoring.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace graphinsight {

namespace {

bool is_word_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; }

std::optional<bool> last_yes_no(const std::string& text) {
  std::optional<bool> result;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (i > 0 && is_word_char(text[i - 1])) continue;
    auto word_matches = [&](const char* w, std::size_t len) {
      if (i + len > text.size()) return false;
      for (std::size_t k = 0; k < len; ++k)
        if (std::tolower(static_cast<unsigned char>(text[i + k])) != w[k]) return false;
      return i + len == text.size() || !is_word_char(text[i + len]);
    };
    if (word_matches("yes", 3)) result = true;
    else if (word_matches("no", 2)) result = false;
  }
  return result;
}

std::optional<double> last_number(const std::string& text) {
  std::optional<double> result;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    if (std::isdigit(static_cast<unsigned char>(text[i])) ||
        (text[i] == '.' && i + 1 < n && std::isdigit(static_cast<unsigned char>(text[i + 1])))) {
      std::size_t start = i;
      if (start > 0 && (text[start - 1] == '-' || text[start - 1] == '+')) --start;
      double value = 0.0;
      auto [ptr, ec] = std::from_chars(text.data() + start, text.data() + n, value);
      if (ec == std::errc()) {
        result = value;
        i = static_cast<std::size_t>(ptr - text.data());
        continue;
      }
    }
    ++i;
  }
  return result;
}

std::optional<std::string> last_bracketed(const std::string& text) {
  std::optional<std::string> result;
  std::size_t i = 0;
  while ((i = text.find('[', i)) != std::string::npos) {
    std::size_t close = text.find(']', i);
    if (close == std::string::npos) break;
    result = text.substr(i + 1, close - i - 1);
    i = close + 1;
  }
  return result;
}

// Splits "( a, b ), (c, d)" into integer tuples; tuple_size 2 or 3.
std::optional<std::vector<std::vector<int>>> parse_tuples(const std::string& body,
                                                          std::size_t tuple_size) {
  std::vector<std::vector<int>> tuples;
  std::size_t i = 0;
  const std::size_t n = body.size();
  auto skip_ws = [&] {
    while (i < n && (body[i] == ' ' || body[i] == ',' || body[i] == '\n')) ++i;
  };
  skip_ws();
  while (i < n) {
    if (body[i] != '(') return std::nullopt;
    ++i;
    std::vector<int> tuple;
    while (i < n && body[i] != ')') {
      while (i < n && (body[i] == ' ' || body[i] == ',')) ++i;
      int value = 0;
      auto [ptr, ec] = std::from_chars(body.data() + i, body.data() + n, value);
      if (ec != std::errc()) return std::nullopt;
      tuple.push_back(value);
      i = static_cast<std::size_t>(ptr - body.data());
    }
    if (i >= n || tuple.size() != tuple_size) return std::nullopt;
    ++i;  // ')'
    tuples.push_back(std::move(tuple));
    skip_ws();
  }
  return tuples;
}

std::optional<std::vector<int>> parse_int_list(const std::string& body) {
  std::vector<int> values;
  std::size_t i = 0;
  const std::size_t n = body.size();
  while (i < n) {
    if (body[i] == ' ' || body[i] == ',' || body[i] == '\n') {
      ++i;
      continue;
    }
    int value = 0;
    auto [ptr, ec] = std::from_chars(body.data() + i, body.data() + n, value);
    if (ec != std::errc()) return std::nullopt;
    values.push_back(value);
    i = static_cast<std::size_t>(ptr - body.data());
  }
  return values;
}

}  // namespace

std::optional<TypedAnswer> parse_answer(const std::string& text, AnswerType type) {
  switch (type) {
    case AnswerType::boolean: {
      auto b = last_yes_no(text);
      if (!b) return std::nullopt;
      return TypedAnswer::boolean(*b);
    }
    case AnswerType::number: {
      auto x = last_number(text);
      if (!x) return std::nullopt;
      return TypedAnswer::number(*x);
    }
    case AnswerType::node_set: {
      auto body = last_bracketed(text);
      if (!body) return std::nullopt;
      auto values = parse_int_list(*body);
      if (!values) return std::nullopt;
      return TypedAnswer::node_set({values->begin(), values->end()});
    }
    case AnswerType::pair_set: {
      auto body = last_bracketed(text);
      if (!body) return std::nullopt;
      auto tuples = parse_tuples(*body, 2);
      if (!tuples) return std::nullopt;
      std::set<NodePair> s;
      for (const auto& t : *tuples) s.emplace(t[0], t[1]);
      return TypedAnswer::pair_set(std::move(s));
    }
    case AnswerType::triple_set: {
      auto body = last_bracketed(text);
      if (!body) return std::nullopt;
      auto tuples = parse_tuples(*body, 3);
      if (!tuples) return std::nullopt;
      std::set<NodeTriple> s;
      for (const auto& t : *tuples) s.insert(make_triple(t[0], t[1], t[2]));
      return TypedAnswer::triple_set(std::move(s));
    }
    case AnswerType::scored_pair_list: {
      auto body = last_bracketed(text);
      if (!body) return std::nullopt;
      auto tuples = parse_tuples(*body, 2);
      if (!tuples) return std::nullopt;
      ScoredPairList l;
      for (const auto& t : *tuples) l.emplace_back(t[0], t[1]);
      return TypedAnswer::scored_pairs(std::move(l));
    }
  }
  return std::nullopt;
}

namespace {

template <typename Set>
double jaccard(const Set& a, const Set& b) {
  if (a.empty() && b.empty()) return 1.0;
  std::size_t common = 0;
  for (const auto& x : a) common += b.count(x);
  const std::size_t unions = a.size() + b.size() - common;
  return static_cast<double>(common) / static_cast<double>(unions);
}

}  // namespace

double score(const std::optional<TypedAnswer>& pred, const TypedAnswer& truth) {
  if (!pred) return 0.0;
  if (pred->type() != truth.type()) throw std::invalid_argument("incomparable answer types");
  switch (truth.type()) {
    case AnswerType::boolean:
      return pred->as_bool() == truth.as_bool() ? 1.0 : 0.0;
    case AnswerType::number: {
      const double a = pred->as_number(), b = truth.as_number();
      if (a == b) return 1.0;
      const double denom = std::max(a, b);
      if (denom <= 0.0) return 0.0;
      return std::clamp(1.0 - std::abs(a - b) / denom, 0.0, 1.0);
    }
    case AnswerType::node_set:
      return jaccard(pred->as_node_set(), truth.as_node_set());
    case AnswerType::pair_set:
      return jaccard(pred->as_pair_set(), truth.as_pair_set());
    case AnswerType::triple_set:
      return jaccard(pred->as_triple_set(), truth.as_triple_set());
    case AnswerType::scored_pair_list: {
      std::set<std::pair<NodeId, int>> a(pred->as_scored_pairs().begin(),
                                         pred->as_scored_pairs().end());
      std::set<std::pair<NodeId, int>> b(truth.as_scored_pairs().begin(),
                                         truth.as_scored_pairs().end());
      return jaccard(a, b);
    }
  }
  throw std::logic_error("unreachable answer type");
}

ScoreReport aggregate(const std::vector<ScoredTask>& scores, const RunMetadata& metadata) {
  if (scores.empty()) throw std::invalid_argument("no scores to aggregate");
  ScoreReport report;
  report.metadata = metadata;
  report.per_task = scores;

  std::map<std::string, std::pair<double, std::size_t>> kind_sums;
  double macro_sum = 0.0, micro_sum = 0.0, total = 0.0;
  for (const ScoredTask& s : scores) {
    kind_sums[to_string(s.kind)].first += s.value;
    kind_sums[to_string(s.kind)].second += 1;
    total += s.value;
    if (level_of(s.kind) == TaskLevel::macro) {
      macro_sum += s.value;
      ++report.macro_n;
    } else {
      micro_sum += s.value;
      ++report.micro_n;
    }
  }
  for (const auto& [kind, sum_n] : kind_sums)
    report.per_kind[kind] = sum_n.first / static_cast<double>(sum_n.second);
  report.overall = total / static_cast<double>(scores.size());
  report.macro_mean = report.macro_n ? macro_sum / static_cast<double>(report.macro_n) : 0.0;
  report.micro_mean = report.micro_n ? micro_sum / static_cast<double>(report.micro_n) : 0.0;
  return report;
}

nlohmann::json ScoreReport::to_json() const {
  nlohmann::json per_task_json = nlohmann::json::array();
  for (const ScoredTask& s : per_task)
    per_task_json.push_back({{"task_id", s.task_id}, {"kind", to_string(s.kind)}, {"score", s.value}});
  return {{"method", metadata.method},
          {"model", metadata.model},
          {"seed", metadata.seed},
          {"overall", overall},
          {"macro", macro_mean},
          {"micro", micro_mean},
          {"macro_n", macro_n},
          {"micro_n", micro_n},
          {"per_kind", per_kind},
          {"per_task", per_task_json}};
}

std::string ScoreReport::to_table() const {
  std::ostringstream os;
  os << "Method: " << metadata.method << "  Model: " << metadata.model
     << "  Seed: " << metadata.seed << "\n";
  os << std::left << std::setw(24) << "Level" << "Score" << "\n";
  os << std::fixed << std::setprecision(4);
  os << std::left << std::setw(24) << "Overall" << overall << "\n";
  os << std::left << std::setw(24) << "Macro" << macro_mean << "\n";
  os << std::left << std::setw(24) << "Micro" << micro_mean << "\n";
  os << std::left << std::setw(24) << "Kind" << "Score" << "\n";
  for (const auto& [kind, value] : per_kind)
    os << std::left << std::setw(24) << kind << value << "\n";
  return os.str();
}

}  // namespace graphinsight
