#include "graphinsight/description.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "graphinsight/oracles.hpp"

namespace graphinsight {

namespace {

constexpr const char* kClausePrefix = "From node ";

// Consumes an expected literal; returns false on mismatch.
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

}  // namespace

std::string EdgeClause::text() const {
  std::ostringstream os;
  os << kClausePrefix << u << " to node " << v << " with weight " << weight << ";";
  return os.str();
}

std::string description_preamble(bool directed) {
  return directed ? "This is a directed graph with the following edges:"
                  : "This is an undirected graph with the following edges:";
}

std::string adjacency_list_preamble(bool directed) {
  return directed ? "This is a directed graph with the following adjacency list:"
                  : "This is an undirected graph with the following adjacency list:";
}

std::string adjacency_matrix_preamble(bool directed) {
  return directed
             ? "This is a directed graph with the following adjacency matrix (rows and columns ordered by node id):"
             : "This is an undirected graph with the following adjacency matrix (rows and columns ordered by node id):";
}

std::string DescriptionSequence::text() const {
  std::string out = header;
  for (const EdgeClause& c : clauses) {
    out += "\n";
    out += c.text();
  }
  return out;
}

DescriptionSequence render_raw(const Graph& g) {
  DescriptionSequence seq;
  seq.header = description_preamble(g.directed());
  seq.clauses.reserve(g.edge_count());
  seq.position_map.reserve(g.edge_count());
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edges()[i];
    seq.clauses.push_back(EdgeClause{e.u, e.v, e.weight});
    seq.position_map.push_back(i);
  }
  return seq;
}

namespace {

// Incident edge indices of v ordered by (other endpoint asc, insertion asc),
// each index listed once even for self-loops.
std::vector<std::size_t> ordered_incident(const Graph& g, NodeId v) {
  std::set<std::size_t> seen;
  std::vector<std::pair<NodeId, std::size_t>> keyed;
  for (std::size_t idx : g.incident_edges(v)) {
    if (!seen.insert(idx).second) continue;
    const Edge& e = g.edges()[idx];
    keyed.emplace_back(e.u == v ? e.v : e.u, idx);
  }
  std::sort(keyed.begin(), keyed.end());
  std::vector<std::size_t> out;
  out.reserve(keyed.size());
  for (const auto& [_, idx] : keyed) out.push_back(idx);
  return out;
}

// Components listed root-component first, then by ascending min node id,
// each re-rooted at its min node.
std::vector<NodeId> component_roots(const Graph& g, NodeId root) {
  std::vector<NodeId> roots{root};
  std::set<NodeId> covered;
  auto cover_from = [&](NodeId start) {
    std::vector<NodeId> stack{start};
    covered.insert(start);
    while (!stack.empty()) {
      NodeId x = stack.back();
      stack.pop_back();
      for (NodeId y : g.neighbors(x))
        if (covered.insert(y).second) stack.push_back(y);
    }
  };
  cover_from(root);
  for (NodeId v : g.nodes()) {
    if (covered.count(v)) continue;
    roots.push_back(v);
    cover_from(v);
  }
  return roots;
}

void emit_edges_bfs(const Graph& g, NodeId root, std::vector<bool>& emitted,
                    std::vector<std::size_t>& order) {
  std::map<NodeId, bool> discovered;
  std::vector<NodeId> queue{root};
  discovered[root] = true;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    NodeId x = queue[qi];
    for (std::size_t idx : ordered_incident(g, x)) {
      if (emitted[idx]) continue;
      const Edge& e = g.edges()[idx];
      NodeId y = e.u == x ? e.v : e.u;
      emitted[idx] = true;
      order.push_back(idx);
      if (!discovered[y]) {
        discovered[y] = true;
        queue.push_back(y);
      }
    }
  }
}

void emit_edges_dfs(const Graph& g, NodeId x, std::map<NodeId, bool>& visited,
                    std::vector<bool>& emitted, std::vector<std::size_t>& order) {
  visited[x] = true;
  for (std::size_t idx : ordered_incident(g, x)) {
    if (emitted[idx]) continue;
    const Edge& e = g.edges()[idx];
    NodeId y = e.u == x ? e.v : e.u;
    emitted[idx] = true;
    order.push_back(idx);
    if (!visited[y]) emit_edges_dfs(g, y, visited, emitted, order);
  }
}

void emit_edges_sp(const Graph& g, NodeId root, const std::set<NodeId>& component,
                   std::vector<bool>& emitted, std::vector<std::size_t>& order) {
  std::map<NodeId, int> dist;
  {
    std::vector<NodeId> queue{root};
    dist[root] = 0;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      NodeId x = queue[qi];
      for (NodeId y : g.neighbors(x))
        if (!dist.count(y)) {
          dist[y] = dist[x] + 1;
          queue.push_back(y);
        }
    }
  }
  struct Key {
    int dist;
    NodeId near, far;
    std::size_t idx;
    bool operator<(const Key& o) const {
      return std::tie(dist, near, far, idx) < std::tie(o.dist, o.near, o.far, o.idx);
    }
  };
  std::vector<Key> keys;
  for (std::size_t idx = 0; idx < g.edge_count(); ++idx) {
    if (emitted[idx]) continue;
    const Edge& e = g.edges()[idx];
    if (!component.count(e.u)) continue;
    int du = dist[e.u], dv = dist[e.v];
    NodeId near = e.u, far = e.v;
    if (dv < du || (dv == du && e.v < e.u)) std::swap(near, far);
    keys.push_back(Key{std::min(du, dv), near, far, idx});
  }
  std::sort(keys.begin(), keys.end());
  for (const Key& k : keys) {
    emitted[k.idx] = true;
    order.push_back(k.idx);
  }
}

}  // namespace

DescriptionSequence reorder(const Graph& g, TraversalOrder kind, NodeId root) {
  if (!g.has_node(root)) throw std::invalid_argument("unknown node");
  std::vector<bool> emitted(g.edge_count(), false);
  std::vector<std::size_t> order;
  order.reserve(g.edge_count());
  for (NodeId r : component_roots(g, root)) {
    switch (kind) {
      case TraversalOrder::bfs:
        emit_edges_bfs(g, r, emitted, order);
        break;
      case TraversalOrder::dfs: {
        std::map<NodeId, bool> visited;
        emit_edges_dfs(g, r, visited, emitted, order);
        break;
      }
      case TraversalOrder::shortest_path: {
        std::set<NodeId> component;
        for (const auto& [v, _] : bfs_distances(g, r)) component.insert(v);
        emit_edges_sp(g, r, component, emitted, order);
        break;
      }
    }
  }
  DescriptionSequence seq;
  seq.header = description_preamble(g.directed());
  for (std::size_t idx : order) {
    const Edge& e = g.edges()[idx];
    seq.clauses.push_back(EdgeClause{e.u, e.v, e.weight});
    seq.position_map.push_back(idx);
  }
  return seq;
}

std::string render_structural(const Graph& g, StructuralFormat format) {
  std::ostringstream os;
  if (format == StructuralFormat::adjacency_list) {
    os << adjacency_list_preamble(g.directed());
    for (NodeId v : g.nodes()) {
      os << "\n" << v << ": [";
      // (neighbor, insertion index): parallel edges keep insertion order.
      std::vector<std::tuple<NodeId, std::size_t, int>> entries;
      std::set<std::size_t> seen;
      for (std::size_t idx : g.incident_edges(v)) {
        if (!seen.insert(idx).second) continue;
        const Edge& e = g.edges()[idx];
        entries.emplace_back(e.u == v ? e.v : e.u, idx, e.weight);
      }
      std::sort(entries.begin(), entries.end());
      for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i) os << ", ";
        os << "(" << std::get<0>(entries[i]) << ", " << std::get<2>(entries[i]) << ")";
      }
      os << "]";
    }
    return os.str();
  }

  // Adjacency matrix.
  const auto nodes = g.nodes();
  std::map<NodeId, std::size_t> index;
  for (std::size_t i = 0; i < nodes.size(); ++i) index[nodes[i]] = i;
  std::vector<std::vector<int>> m(nodes.size(), std::vector<int>(nodes.size(), 0));
  for (const Edge& e : g.edges()) {
    std::size_t iu = index[e.u], iv = index[e.v];
    if (m[iu][iv] != 0) throw std::invalid_argument("matrix format requires simple graph");
    m[iu][iv] = e.weight;
    if (!g.directed()) m[iv][iu] = e.weight;
  }
  os << adjacency_matrix_preamble(g.directed());
  os << "\nNodes: [";
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (i) os << ", ";
    os << nodes[i];
  }
  os << "]";
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    os << "\n[";
    for (std::size_t j = 0; j < nodes.size(); ++j) {
      if (j) os << ", ";
      os << m[i][j];
    }
    os << "]";
  }
  return os.str();
}

bool parse_clause(const std::string& line, EdgeClause& out) {
  const char* p = line.data();
  const char* end = p + line.size();
  int u = 0, v = 0, w = 0;
  if (!eat(p, end, kClausePrefix)) return false;
  if (!eat_int(p, end, u)) return false;
  if (!eat(p, end, " to node ")) return false;
  if (!eat_int(p, end, v)) return false;
  if (!eat(p, end, " with weight ")) return false;
  if (!eat_int(p, end, w)) return false;
  if (!eat(p, end, ";")) return false;
  if (p != end || u < 0 || v < 0 || w < 1) return false;
  out = EdgeClause{u, v, w};
  return true;
}

ParsedDescription parse_description(const std::string& text) {
  ParsedDescription parsed;
  std::istringstream in(text);
  std::string line;
  bool saw_preamble = false;
  while (std::getline(in, line)) {
    if (line == description_preamble(false)) {
      saw_preamble = true;
      parsed.directed = false;
      continue;
    }
    if (line == description_preamble(true)) {
      saw_preamble = true;
      parsed.directed = true;
      continue;
    }
    EdgeClause clause;
    if (parse_clause(line, clause)) {
      parsed.clauses.push_back(clause);
    } else if (!line.empty()) {
      throw std::invalid_argument("unparseable description line: " + line);
    }
  }
  if (!saw_preamble) throw std::invalid_argument("missing description preamble");
  return parsed;
}

}  // namespace graphinsight
