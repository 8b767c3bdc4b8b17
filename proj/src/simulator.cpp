#include "graphinsight/simulator.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <sstream>
#include <vector>

#include "graphinsight/description.hpp"
#include "graphinsight/oracles.hpp"
#include "graphinsight/ragbase.hpp"
#include "graphinsight/rng.hpp"

namespace graphinsight {

namespace {

// --- tiny scanning helpers (prompts are parsed line by line, no regex) ---

bool eat(const char*& p, const char* end, const char* literal) {
  const char* q = literal;
  while (*q) {
    if (p == end || *p != *q) return false;
    ++p;
    ++q;
  }
  return true;
}

bool eat_int(const char*& p, const char* end, int& out) {
  auto [ptr, ec] = std::from_chars(p, end, out);
  if (ec != std::errc() || ptr == p) return false;
  p = ptr;
  return true;
}

bool eat_int_list(const char*& p, const char* end, char close, std::vector<int>& out) {
  while (p < end && *p != close) {
    while (p < end && (*p == ' ' || *p == ',')) ++p;
    if (p < end && *p == close) break;
    int value = 0;
    if (!eat_int(p, end, value)) return false;
    out.push_back(value);
  }
  if (p == end) return false;
  ++p;  // consume close
  return true;
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t nl = text.find('\n', start);
    if (nl == std::string::npos) {
      lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  return lines;
}

enum class DescriptionKind { sequential, adjacency_list, adjacency_matrix };

struct PromptView {
  DescriptionKind kind = DescriptionKind::sequential;
  bool directed = false;
  std::size_t body_begin = 0;  // first line after the preamble
  std::vector<std::string> lines;
  std::optional<std::string> question;           // text after "Q: "
  std::vector<std::pair<NodeId, int>> fact_degrees;
  std::vector<Edge> fact_edges;
};

bool parse_fact_line(const std::string& line, PromptView& view) {
  const char* p = line.data();
  const char* end = p + line.size();
  int a = 0, b = 0, c = 0;
  const char* q = p;
  if (eat(q, end, "Node ") && eat_int(q, end, a) && eat(q, end, " has degree ") &&
      eat_int(q, end, b) && eat(q, end, ".") && q == end) {
    view.fact_degrees.emplace_back(a, b);
    return true;
  }
  q = p;
  if (eat(q, end, "Edge (") && eat_int(q, end, a) && eat(q, end, ", ") && eat_int(q, end, b) &&
      eat(q, end, ") has weight ") && eat_int(q, end, c) && eat(q, end, ".") && q == end) {
    view.fact_edges.push_back(Edge{a, b, c});
    return true;
  }
  return false;
}

PromptView scan_prompt(const std::string& prompt) {
  PromptView view;
  view.lines = split_lines(prompt);
  std::size_t preamble_at = 0;
  bool found = false;
  for (std::size_t i = 0; i < view.lines.size(); ++i) {
    const std::string& line = view.lines[i];
    for (bool directed : {false, true}) {
      if (line == description_preamble(directed)) {
        view.kind = DescriptionKind::sequential;
        view.directed = directed;
        preamble_at = i;
        found = true;
      } else if (line == adjacency_list_preamble(directed)) {
        view.kind = DescriptionKind::adjacency_list;
        view.directed = directed;
        preamble_at = i;
        found = true;
      } else if (line == adjacency_matrix_preamble(directed)) {
        view.kind = DescriptionKind::adjacency_matrix;
        view.directed = directed;
        preamble_at = i;
        found = true;
      }
    }
  }
  if (!found) throw std::invalid_argument("prompt has no description preamble");
  view.body_begin = preamble_at + 1;
  for (std::size_t i = view.body_begin; i < view.lines.size(); ++i) {
    const std::string& line = view.lines[i];
    if (line.rfind("Q: ", 0) == 0) view.question = line.substr(3);
    parse_fact_line(line, view);
  }
  return view;
}

struct RecalledGraph {
  Graph g;
  std::map<NodeId, int> degree_overrides;
};

// Edges recovered from one recalled description line. For undirected
// adjacency formats each edge is owned by its lower-endpoint line so a
// recalled line contributes each edge exactly once.
void edges_of_line(const PromptView& view, const std::string& line,
                   const std::vector<NodeId>& matrix_nodes, std::size_t row_index,
                   std::vector<Edge>& out) {
  const char* p = line.data();
  const char* end = p + line.size();
  switch (view.kind) {
    case DescriptionKind::sequential: {
      EdgeClause clause;
      if (parse_clause(line, clause)) out.push_back(Edge{clause.u, clause.v, clause.weight});
      return;
    }
    case DescriptionKind::adjacency_list: {
      int owner = 0;
      if (!eat_int(p, end, owner) || !eat(p, end, ": [")) return;
      while (p < end && *p != ']') {
        while (p < end && (*p == ' ' || *p == ',')) ++p;
        if (p < end && *p == ']') break;
        int nbr = 0, w = 0;
        if (!eat(p, end, "(") || !eat_int(p, end, nbr) || !eat(p, end, ", ") ||
            !eat_int(p, end, w) || !eat(p, end, ")"))
          return;
        if (view.directed || nbr >= owner) out.push_back(Edge{owner, nbr, w});
      }
      return;
    }
    case DescriptionKind::adjacency_matrix: {
      if (row_index >= matrix_nodes.size()) return;
      if (!eat(p, end, "[")) return;
      std::vector<int> row;
      if (!eat_int_list(p, end, ']', row) || row.size() != matrix_nodes.size()) return;
      const NodeId u = matrix_nodes[row_index];
      for (std::size_t j = 0; j < row.size(); ++j) {
        if (row[j] == 0) continue;
        if (view.directed || j >= row_index) out.push_back(Edge{u, matrix_nodes[j], row[j]});
      }
      return;
    }
  }
}

RecalledGraph recall_graph(const PromptView& view, const Graph& graph_context,
                           const PositionalBiasModel& bias, std::uint64_t seed) {
  // Collect the description body lines (clauses / list rows / matrix rows).
  std::vector<std::size_t> body_lines;
  std::vector<NodeId> matrix_nodes;
  for (std::size_t i = view.body_begin; i < view.lines.size(); ++i) {
    const std::string& line = view.lines[i];
    if (line.empty()) break;
    if (view.kind == DescriptionKind::adjacency_matrix && line.rfind("Nodes: [", 0) == 0) {
      const char* p = line.data() + 7;
      const char* end = line.data() + line.size();
      ++p;  // past '['
      std::vector<int> ids;
      if (eat_int_list(p, end, ']', ids)) matrix_nodes.assign(ids.begin(), ids.end());
      continue;
    }
    body_lines.push_back(i);
  }

  auto rng = make_rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  RecalledGraph recalled;
  recalled.g = Graph(view.directed);
  for (NodeId v : graph_context.nodes()) recalled.g.add_node(v);

  const std::size_t n = body_lines.size();
  std::vector<Edge> kept;
  for (std::size_t pos = 0; pos < n; ++pos) {
    const double draw = unit(rng);
    if (draw >= bias.recall_at(pos, n)) continue;
    std::size_t matrix_row = pos;  // rows follow the Nodes: line in order
    edges_of_line(view, view.lines[body_lines[pos]], matrix_nodes, matrix_row, kept);
  }
  for (const Edge& e : kept)
    if (recalled.g.has_node(e.u) && recalled.g.has_node(e.v))
      recalled.g.add_edge(e.u, e.v, e.weight);

  // Facts are always retained; fact edges not already recalled are added.
  for (const Edge& f : view.fact_edges) {
    if (!recalled.g.has_node(f.u) || !recalled.g.has_node(f.v)) continue;
    bool present = false;
    for (const Edge& e : recalled.g.edges())
      if (((e.u == f.u && e.v == f.v) || (e.u == f.v && e.v == f.u)) && e.weight == f.weight) {
        present = true;
        break;
      }
    if (!present) recalled.g.add_edge(f.u, f.v, f.weight);
  }
  for (const auto& [v, d] : view.fact_degrees) recalled.degree_overrides[v] = d;
  return recalled;
}

int effective_degree(const RecalledGraph& rg, NodeId v) {
  auto it = rg.degree_overrides.find(v);
  if (it != rg.degree_overrides.end()) return it->second;
  return rg.g.has_node(v) ? rg.g.degree(v) : 0;
}

std::string answer_question(const RecalledGraph& rg, const PromptView& view,
                            const ParsedQuestion& q) {
  const Graph& g = rg.g;
  if (q.frontier_step) {
    std::set<NodeId> out;
    for (NodeId v : q.frontier)
      if (g.has_node(v))
        for (NodeId nbr : g.neighbors(v)) out.insert(nbr);
    return TypedAnswer::node_set(std::move(out)).render();
  }
  const TaskParams& p = q.params;
  switch (q.kind) {
    case TaskKind::degree:
      return TypedAnswer::number(effective_degree(rg, *p.u)).render();
    case TaskKind::is_leaf:
      return TypedAnswer::boolean(effective_degree(rg, *p.u) == 1).render();
    case TaskKind::even_degree:
      return TypedAnswer::boolean(effective_degree(rg, *p.u) % 2 == 0).render();
    case TaskKind::degree_greater:
      return TypedAnswer::boolean(effective_degree(rg, *p.u) > effective_degree(rg, *p.v))
          .render();
    case TaskKind::top_k_degrees: {
      ScoredPairList all;
      for (NodeId v : g.nodes()) all.emplace_back(v, effective_degree(rg, v));
      std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
      });
      const std::size_t k = std::min<std::size_t>(static_cast<std::size_t>(*p.k), all.size());
      all.resize(k);
      return TypedAnswer::scored_pairs(std::move(all)).render();
    }
    case TaskKind::direct_connection: {
      bool connected = g.has_node(*p.u) && g.has_node(*p.v) && g.adjacent(*p.u, *p.v);
      return TypedAnswer::boolean(connected).render();
    }
    case TaskKind::edge_weight: {
      if (g.has_node(*p.u) && g.has_node(*p.v)) {
        auto w = g.first_edge_weight(*p.u, *p.v);
        if (w) return TypedAnswer::number(*w).render();
      }
      return kRefusalText;
    }
    default: {
      try {
        return answer_task(g, q.kind, p).render();
      } catch (const std::exception&) {
        return kRefusalText;
      }
    }
  }
}

}  // namespace

std::string frontier_step_question(const std::set<NodeId>& frontier) {
  std::ostringstream os;
  os << "Which nodes are directly connected to any of the nodes in "
     << TypedAnswer::node_set(frontier).render()
     << "? List the answers in the format of '[1, 2, ...]'.";
  return os.str();
}

std::optional<ParsedQuestion> parse_question(const std::string& question) {
  const char* p = question.data();
  const char* end = p + question.size();
  ParsedQuestion out;
  int a = 0, b = 0, k = 0;

  auto reset = [&] { p = question.data(); };

  if (eat(p, end, "Which nodes are directly connected to any of the nodes in [")) {
    std::vector<int> ids;
    if (eat_int_list(p, end, ']', ids)) {
      out.frontier_step = true;
      out.frontier.insert(ids.begin(), ids.end());
      return out;
    }
    return std::nullopt;
  }
  reset();
  if (eat(p, end, "How many nodes are in this graph?")) {
    out.kind = TaskKind::node_count;
    return out;
  }
  reset();
  if (eat(p, end, "Is this graph a connected graph?")) {
    out.kind = TaskKind::is_connected;
    return out;
  }
  reset();
  if (eat(p, end, "Does this graph contain a cycle?")) {
    out.kind = TaskKind::has_cycle;
    return out;
  }
  reset();
  if (eat(p, end, "What is the maximum weight of the edges in this graph?")) {
    out.kind = TaskKind::max_edge_weight;
    return out;
  }
  reset();
  if (eat(p, end, "What are the nodes with the top ") && eat_int(p, end, k)) {
    out.kind = TaskKind::top_k_degrees;
    out.params.k = k;
    return out;
  }
  reset();
  if (eat(p, end, "Is there a direct connection between node ") && eat_int(p, end, a) &&
      eat(p, end, " and node ") && eat_int(p, end, b)) {
    out.kind = TaskKind::direct_connection;
    out.params.u = a;
    out.params.v = b;
    return out;
  }
  reset();
  if (eat(p, end, "What is the degree of node ") && eat_int(p, end, a)) {
    out.kind = TaskKind::degree;
    out.params.u = a;
    return out;
  }
  reset();
  if (eat(p, end, "Is node ") && eat_int(p, end, a) && eat(p, end, " a leaf node?")) {
    out.kind = TaskKind::is_leaf;
    out.params.u = a;
    return out;
  }
  reset();
  if (eat(p, end, "Does node ") && eat_int(p, end, a) && eat(p, end, " have an even degree?")) {
    out.kind = TaskKind::even_degree;
    out.params.u = a;
    return out;
  }
  reset();
  if (eat(p, end, "Who are the neighbors of node ") && eat_int(p, end, a)) {
    out.kind = TaskKind::neighbors;
    out.params.u = a;
    return out;
  }
  reset();
  if (eat(p, end, "Do nodes ") && eat_int(p, end, a) && eat(p, end, " and ") &&
      eat_int(p, end, b) && eat(p, end, " have any common neighbors?")) {
    out.kind = TaskKind::common_neighbors;
    out.params.u = a;
    out.params.v = b;
    return out;
  }
  reset();
  if (eat(p, end, "Is the degree of node ") && eat_int(p, end, a) &&
      eat(p, end, " greater than the degree of node ") && eat_int(p, end, b)) {
    out.kind = TaskKind::degree_greater;
    out.params.u = a;
    out.params.v = b;
    return out;
  }
  reset();
  if (eat(p, end, "What is the weight of the edge between node ") && eat_int(p, end, a) &&
      eat(p, end, " and node ") && eat_int(p, end, b)) {
    out.kind = TaskKind::edge_weight;
    out.params.u = a;
    out.params.v = b;
    return out;
  }
  reset();
  if (eat(p, end, "Given the edge (") && eat_int(p, end, a) && eat(p, end, ", ") &&
      eat_int(p, end, b) && eat(p, end, "), find all edges connected to it")) {
    out.kind = TaskKind::connected_edges;
    out.params.u = a;
    out.params.v = b;
    return out;
  }
  reset();
  if (eat(p, end, "Given the edge (") && eat_int(p, end, a) && eat(p, end, ", ") &&
      eat_int(p, end, b) && eat(p, end, "), find all common neighbors")) {
    out.kind = TaskKind::edge_common_neighbors;
    out.params.u = a;
    out.params.v = b;
    return out;
  }
  reset();
  if (eat(p, end, "Given the nodes [")) {
    std::vector<int> ids;
    if (eat_int_list(p, end, ']', ids) && eat(p, end, ", determine if they form a complete subgraph")) {
      out.kind = TaskKind::complete_subgraph;
      out.params.node_list.assign(ids.begin(), ids.end());
      return out;
    }
    return std::nullopt;
  }
  reset();
  if (eat(p, end, "Given the node ") && eat_int(p, end, a)) {
    const char* after_node = p;
    if (eat(p, end, ", find the neighbor's neighbor with the highest degree")) {
      out.kind = TaskKind::highest_degree_nn;
      out.params.u = a;
      return out;
    }
    p = after_node;
    if (eat(p, end, ", find all its ") && eat_int(p, end, k) && eat(p, end, "-order neighbors")) {
      out.kind = TaskKind::k_order_neighbors;
      out.params.u = a;
      out.params.k = k;
      return out;
    }
    p = after_node;
    if (eat(p, end, ", find its neighbors that are directly connected to node ") &&
        eat_int(p, end, b)) {
      out.kind = TaskKind::neighbors_connected_to;
      out.params.u = a;
      out.params.v = b;
      return out;
    }
    p = after_node;
    if (eat(p, end, ", find all triangles")) {
      out.kind = TaskKind::triangles;
      out.params.u = a;
      return out;
    }
    p = after_node;
    if (eat(p, end, ", find all connected pairs among its neighbors")) {
      out.kind = TaskKind::neighbor_pairs;
      out.params.u = a;
      return out;
    }
    return std::nullopt;
  }
  reset();
  if (eat(p, end, "Given nodes ") && eat_int(p, end, a) && eat(p, end, " and ") &&
      eat_int(p, end, b) && eat(p, end, ", find all common ") && eat_int(p, end, k) &&
      eat(p, end, "-order neighbors")) {
    out.kind = TaskKind::common_k_order;
    out.params.u = a;
    out.params.v = b;
    out.params.k = k;
    return out;
  }
  return std::nullopt;
}

std::string simulate_llm(const std::string& prompt, const Graph& graph_context,
                         const PositionalBiasModel& bias, std::uint64_t seed) {
  bias.validate();
  PromptView view = scan_prompt(prompt);
  if (!view.question) return kRefusalText;
  auto question = parse_question(*view.question);
  if (!question) return kRefusalText;
  RecalledGraph recalled = recall_graph(view, graph_context, bias, seed);
  return answer_question(recalled, view, *question);
}

}  // namespace graphinsight
