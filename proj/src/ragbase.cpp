#include "graphinsight/ragbase.hpp"

#include <cctype>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace graphinsight {

nlohmann::json RagBase::to_json() const {
  nlohmann::json nodes = nlohmann::json::array();
  for (const auto& [v, d] : node_store) nodes.push_back({v, d});
  nlohmann::json edges = nlohmann::json::array();
  for (const Edge& e : edge_store) edges.push_back({e.u, e.v, e.weight});
  return {{"gamma", gamma_pct}, {"nodes", nodes}, {"edges", edges}};
}

RagBase RagBase::from_json(const nlohmann::json& j) {
  RagBase base;
  base.gamma_pct = j.at("gamma").get<double>();
  for (const auto& e : j.at("nodes"))
    base.node_store[e.at(0).get<NodeId>()] = e.at(1).get<int>();
  for (const auto& e : j.at("edges"))
    base.edge_store.push_back(Edge{e.at(0).get<NodeId>(), e.at(1).get<NodeId>(), e.at(2).get<int>()});
  return base;
}

RagBase build_rag_base(const RegionLayout& layout, const Graph& g, double gamma_pct) {
  if (gamma_pct < 0.0 || gamma_pct > 100.0)
    throw std::invalid_argument("gamma must be in [0, 100]");
  RagBase base;
  base.gamma_pct = gamma_pct;
  const std::size_t weak_count = layout.middle.size();
  const std::size_t keep = static_cast<std::size_t>(
      std::ceil(gamma_pct / 100.0 * static_cast<double>(weak_count)));
  base.retained_blocks = keep;
  for (std::size_t i = 0; i < keep && i < weak_count; ++i) {
    const SubgraphBlock& block = layout.middle[i];
    for (const Edge& e : block.edges) {
      base.edge_store.push_back(e);
      base.node_store[e.u] = g.degree(e.u);
      base.node_store[e.v] = g.degree(e.v);
    }
  }
  return base;
}

std::set<NodeId> extract_entities(const std::string& question,
                                  const std::set<NodeId>& known_nodes) {
  std::set<NodeId> found;
  auto add = [&](long value) {
    if (value >= 0 && known_nodes.count(static_cast<NodeId>(value)))
      found.insert(static_cast<NodeId>(value));
  };

  const std::size_t n = question.size();
  auto is_word_char = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; };

  std::size_t i = 0;
  while (i < n) {
    // "node 7" / "nodes 4 and 9" / "nodes 1, 2, and 3"
    if ((question.compare(i, 4, "node") == 0) && (i == 0 || !is_word_char(question[i - 1]))) {
      std::size_t j = i + 4;
      if (j < n && question[j] == 's') ++j;
      bool expecting = true;
      while (j < n && expecting) {
        while (j < n && question[j] == ' ') ++j;
        if (j < n && std::isdigit(static_cast<unsigned char>(question[j]))) {
          long value = 0;
          while (j < n && std::isdigit(static_cast<unsigned char>(question[j])))
            value = value * 10 + (question[j++] - '0');
          add(value);
          // continue over ", " / " and " joiners
          std::size_t k = j;
          while (k < n && question[k] == ' ') ++k;
          if (k < n && question[k] == ',') ++k;
          while (k < n && question[k] == ' ') ++k;
          if (question.compare(k, 4, "and ") == 0) k += 4;
          if (k < n && std::isdigit(static_cast<unsigned char>(question[k]))) {
            j = k;
            continue;
          }
        }
        expecting = false;
      }
      i = j;
      continue;
    }
    // "[0, 1, 6]" and "(8, 11)"
    if (question[i] == '[' || question[i] == '(') {
      const char close = question[i] == '[' ? ']' : ')';
      std::size_t j = i + 1;
      std::vector<long> values;
      bool well_formed = true;
      while (j < n && question[j] != close) {
        if (std::isdigit(static_cast<unsigned char>(question[j]))) {
          long value = 0;
          while (j < n && std::isdigit(static_cast<unsigned char>(question[j])))
            value = value * 10 + (question[j++] - '0');
          values.push_back(value);
        } else if (question[j] == ',' || question[j] == ' ') {
          ++j;
        } else {
          well_formed = false;
          break;
        }
      }
      if (well_formed && j < n && question[j] == close) {
        for (long v : values) add(v);
        i = j + 1;
        continue;
      }
    }
    ++i;
  }
  return found;
}

Retrieval retrieve(const RagBase& base, const std::set<NodeId>& query_nodes) {
  Retrieval r;
  r.query_nodes = query_nodes;
  for (NodeId v : query_nodes) {
    auto it = base.node_store.find(v);
    if (it != base.node_store.end()) r.node_hits.emplace(v, it->second);
  }
  for (const Edge& e : base.edge_store) {
    if (query_nodes.count(e.u) || query_nodes.count(e.v))
      r.edge_hits.emplace(e.u, e.v, e.weight);
  }
  return r;
}

std::string render_facts(const Retrieval& retrieval) {
  if (retrieval.empty()) return "";
  std::ostringstream os;
  os << kFactsHeader;
  for (const auto& [v, d] : retrieval.node_hits)
    os << "\nNode " << v << " has degree " << d << ".";
  for (const auto& [u, v, w] : retrieval.edge_hits)
    os << "\nEdge (" << u << ", " << v << ") has weight " << w << ".";
  return os.str();
}

std::string assemble_prompt(const std::string& description_text, const Retrieval& retrieval,
                            const std::string& question, const std::string& format_instruction) {
  std::string prompt = description_text;
  const std::string facts = render_facts(retrieval);
  if (!facts.empty()) {
    prompt += "\n\n";
    prompt += facts;
  }
  prompt += "\n\nQ: ";
  prompt += question;
  if (!format_instruction.empty()) {
    prompt += "\n";
    prompt += format_instruction;
  }
  return prompt;
}

std::string assemble_prompt(const DescriptionSequence& description, const Retrieval& retrieval,
                            const std::string& question, const std::string& format_instruction) {
  return assemble_prompt(description.text(), retrieval, question, format_instruction);
}

}  // namespace graphinsight
