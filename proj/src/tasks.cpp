#include "graphinsight/tasks.hpp"

#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "graphinsight/oracles.hpp"

namespace graphinsight {

std::vector<TaskKind> all_task_kinds() {
  return {
      TaskKind::node_count,       TaskKind::is_connected,
      TaskKind::has_cycle,        TaskKind::max_edge_weight,
      TaskKind::top_k_degrees,    TaskKind::direct_connection,
      TaskKind::degree,           TaskKind::is_leaf,
      TaskKind::even_degree,      TaskKind::neighbors,
      TaskKind::common_neighbors, TaskKind::degree_greater,
      TaskKind::edge_weight,      TaskKind::connected_edges,
      TaskKind::complete_subgraph, TaskKind::highest_degree_nn,
      TaskKind::k_order_neighbors, TaskKind::neighbors_connected_to,
      TaskKind::triangles,        TaskKind::neighbor_pairs,
      TaskKind::edge_common_neighbors, TaskKind::common_k_order,
  };
}

std::string to_string(TaskKind k) {
  switch (k) {
    case TaskKind::node_count: return "node_count";
    case TaskKind::is_connected: return "is_connected";
    case TaskKind::has_cycle: return "has_cycle";
    case TaskKind::max_edge_weight: return "max_edge_weight";
    case TaskKind::top_k_degrees: return "top_k_degrees";
    case TaskKind::direct_connection: return "direct_connection";
    case TaskKind::degree: return "degree";
    case TaskKind::is_leaf: return "is_leaf";
    case TaskKind::even_degree: return "even_degree";
    case TaskKind::neighbors: return "neighbors";
    case TaskKind::common_neighbors: return "common_neighbors";
    case TaskKind::degree_greater: return "degree_greater";
    case TaskKind::edge_weight: return "edge_weight";
    case TaskKind::connected_edges: return "connected_edges";
    case TaskKind::complete_subgraph: return "complete_subgraph";
    case TaskKind::highest_degree_nn: return "highest_degree_nn";
    case TaskKind::k_order_neighbors: return "k_order_neighbors";
    case TaskKind::neighbors_connected_to: return "neighbors_connected_to";
    case TaskKind::triangles: return "triangles";
    case TaskKind::neighbor_pairs: return "neighbor_pairs";
    case TaskKind::edge_common_neighbors: return "edge_common_neighbors";
    case TaskKind::common_k_order: return "common_k_order";
  }
  throw std::logic_error("unreachable task kind");
}

TaskKind task_kind_from_string(const std::string& s) {
  for (TaskKind k : all_task_kinds())
    if (to_string(k) == s) return k;
  throw std::invalid_argument("unknown task kind: " + s);
}

TaskLevel level_of(TaskKind k) {
  switch (k) {
    case TaskKind::node_count:
    case TaskKind::is_connected:
    case TaskKind::has_cycle:
    case TaskKind::max_edge_weight:
    case TaskKind::top_k_degrees:
      return TaskLevel::macro;
    default:
      return TaskLevel::micro;
  }
}

bool is_composite(TaskKind k) {
  switch (k) {
    case TaskKind::connected_edges:
    case TaskKind::complete_subgraph:
    case TaskKind::highest_degree_nn:
    case TaskKind::k_order_neighbors:
    case TaskKind::neighbors_connected_to:
    case TaskKind::triangles:
    case TaskKind::neighbor_pairs:
    case TaskKind::edge_common_neighbors:
    case TaskKind::common_k_order:
      return true;
    default:
      return false;
  }
}

AnswerType answer_type_of(TaskKind k) {
  switch (k) {
    case TaskKind::node_count:
    case TaskKind::max_edge_weight:
    case TaskKind::degree:
    case TaskKind::edge_weight:
    case TaskKind::highest_degree_nn:
      return AnswerType::number;
    case TaskKind::is_connected:
    case TaskKind::has_cycle:
    case TaskKind::direct_connection:
    case TaskKind::is_leaf:
    case TaskKind::even_degree:
    case TaskKind::degree_greater:
    case TaskKind::complete_subgraph:
      return AnswerType::boolean;
    case TaskKind::top_k_degrees:
      return AnswerType::scored_pair_list;
    case TaskKind::neighbors:
    case TaskKind::common_neighbors:
    case TaskKind::k_order_neighbors:
    case TaskKind::neighbors_connected_to:
    case TaskKind::edge_common_neighbors:
    case TaskKind::common_k_order:
      return AnswerType::node_set;
    case TaskKind::connected_edges:
    case TaskKind::neighbor_pairs:
      return AnswerType::pair_set;
    case TaskKind::triangles:
      return AnswerType::triple_set;
  }
  throw std::logic_error("unreachable task kind");
}

nlohmann::json TaskParams::to_json() const {
  nlohmann::json j = nlohmann::json::object();
  if (u) j["u"] = *u;
  if (v) j["v"] = *v;
  if (k) j["k"] = *k;
  if (!node_list.empty()) j["nodes"] = node_list;
  return j;
}

TaskParams TaskParams::from_json(const nlohmann::json& j) {
  TaskParams p;
  if (j.contains("u")) p.u = j.at("u").get<NodeId>();
  if (j.contains("v")) p.v = j.at("v").get<NodeId>();
  if (j.contains("k")) p.k = j.at("k").get<int>();
  if (j.contains("nodes")) p.node_list = j.at("nodes").get<std::vector<NodeId>>();
  return p;
}

namespace {

NodeId need_u(const TaskParams& p) {
  if (!p.u) throw std::invalid_argument("task params missing u");
  return *p.u;
}
NodeId need_v(const TaskParams& p) {
  if (!p.v) throw std::invalid_argument("task params missing v");
  return *p.v;
}
int need_k(const TaskParams& p) {
  if (!p.k) throw std::invalid_argument("task params missing k");
  return *p.k;
}

std::string node_list_text(const std::vector<NodeId>& nodes) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (i) os << ", ";
    os << nodes[i];
  }
  os << "]";
  return os.str();
}

}  // namespace

std::string render_question(TaskKind kind, const TaskParams& p) {
  std::ostringstream os;
  switch (kind) {
    case TaskKind::node_count:
      return "How many nodes are in this graph?";
    case TaskKind::is_connected:
      return "Is this graph a connected graph?";
    case TaskKind::has_cycle:
      return "Does this graph contain a cycle?";
    case TaskKind::max_edge_weight:
      return "What is the maximum weight of the edges in this graph?";
    case TaskKind::top_k_degrees:
      os << "What are the nodes with the top " << need_k(p) << " highest degrees in this graph?";
      return os.str();
    case TaskKind::direct_connection:
      os << "Is there a direct connection between node " << need_u(p) << " and node "
         << need_v(p) << "?";
      return os.str();
    case TaskKind::degree:
      os << "What is the degree of node " << need_u(p) << "?";
      return os.str();
    case TaskKind::is_leaf:
      os << "Is node " << need_u(p) << " a leaf node?";
      return os.str();
    case TaskKind::even_degree:
      os << "Does node " << need_u(p) << " have an even degree?";
      return os.str();
    case TaskKind::neighbors:
      os << "Who are the neighbors of node " << need_u(p) << "?";
      return os.str();
    case TaskKind::common_neighbors:
      os << "Do nodes " << need_u(p) << " and " << need_v(p) << " have any common neighbors?";
      return os.str();
    case TaskKind::degree_greater:
      os << "Is the degree of node " << need_u(p) << " greater than the degree of node "
         << need_v(p) << "?";
      return os.str();
    case TaskKind::edge_weight:
      os << "What is the weight of the edge between node " << need_u(p) << " and node "
         << need_v(p) << "?";
      return os.str();
    case TaskKind::connected_edges:
      os << "Given the edge (" << need_u(p) << ", " << need_v(p)
         << "), find all edges connected to it. List the answers in the format of "
            "'[(1, 2), (3, 4), ...]'.";
      return os.str();
    case TaskKind::complete_subgraph:
      os << "Given the nodes " << node_list_text(p.node_list)
         << ", determine if they form a complete subgraph. List the answer directly in the "
            "format of 'Yes' or 'No'.";
      return os.str();
    case TaskKind::highest_degree_nn:
      os << "Given the node " << need_u(p)
         << ", find the neighbor's neighbor with the highest degree. List the answer "
            "directly as the node id.";
      return os.str();
    case TaskKind::k_order_neighbors:
      os << "Given the node " << need_u(p) << ", find all its " << need_k(p)
         << "-order neighbors. Note that the " << need_k(p)
         << "-order neighbors do not include the " << need_k(p) - 1
         << "-order neighbors, and so on. List the answers in the format of '[1, 2, ...]'.";
      return os.str();
    case TaskKind::neighbors_connected_to:
      os << "Given the node " << need_u(p)
         << ", find its neighbors that are directly connected to node " << need_v(p)
         << ". List the answers in the format of '[1, 2, ...]'.";
      return os.str();
    case TaskKind::triangles:
      os << "Given the node " << need_u(p)
         << ", find all triangles (sets of three nodes that are mutually connected) it "
            "forms with its neighbors. List the answers in the format of "
            "'[(1, 2, 3), (4, 5, 6), ...]'.";
      return os.str();
    case TaskKind::neighbor_pairs:
      os << "Given the node " << need_u(p)
         << ", find all connected pairs among its neighbors. List the answers in the "
            "format of '[(1, 2), (3, 4), ...]'.";
      return os.str();
    case TaskKind::edge_common_neighbors:
      os << "Given the edge (" << need_u(p) << ", " << need_v(p)
         << "), find all common neighbors of its two end nodes. List the answers in the "
            "format of '[1, 2, ...]'.";
      return os.str();
    case TaskKind::common_k_order:
      os << "Given nodes " << need_u(p) << " and " << need_v(p) << ", find all common "
         << need_k(p)
         << "-order neighbors. List the answers in the format of '[1, 2, ...]'.";
      return os.str();
  }
  throw std::logic_error("unreachable task kind");
}

std::string format_instruction(TaskKind kind) {
  if (is_composite(kind)) return "";  // embedded in the question template
  switch (answer_type_of(kind)) {
    case AnswerType::boolean:
      return "Answer with 'Yes' or 'No'.";
    case AnswerType::number:
      return "Answer with a single number.";
    case AnswerType::node_set:
      return "List the answers in the format of '[1, 2, ...]'.";
    case AnswerType::pair_set:
      return "List the answers in the format of '[(1, 2), (3, 4), ...]'.";
    case AnswerType::triple_set:
      return "List the answers in the format of '[(1, 2, 3), (4, 5, 6), ...]'.";
    case AnswerType::scored_pair_list:
      return "List the answers in the format of '[(node, degree), ...]'.";
  }
  throw std::logic_error("unreachable answer type");
}

TypedAnswer answer_task(const Graph& g, TaskKind kind, const TaskParams& p) {
  switch (kind) {
    case TaskKind::node_count:
      return TypedAnswer::number(node_count(g));
    case TaskKind::is_connected:
      return TypedAnswer::boolean(is_connected(g));
    case TaskKind::has_cycle:
      return TypedAnswer::boolean(has_cycle(g));
    case TaskKind::max_edge_weight:
      return TypedAnswer::number(max_edge_weight(g));
    case TaskKind::top_k_degrees:
      return TypedAnswer::scored_pairs(top_k_degrees(g, need_k(p)));
    case TaskKind::direct_connection:
      return TypedAnswer::boolean(direct_connection(g, need_u(p), need_v(p)));
    case TaskKind::degree:
      return TypedAnswer::number(g.degree(need_u(p)));
    case TaskKind::is_leaf:
      return TypedAnswer::boolean(is_leaf(g, need_u(p)));
    case TaskKind::even_degree:
      return TypedAnswer::boolean(even_degree(g, need_u(p)));
    case TaskKind::neighbors: {
      auto nbrs = g.neighbors(need_u(p));
      return TypedAnswer::node_set({nbrs.begin(), nbrs.end()});
    }
    case TaskKind::common_neighbors:
      return TypedAnswer::node_set(common_neighbors(g, need_u(p), need_v(p)));
    case TaskKind::degree_greater:
      return TypedAnswer::boolean(degree_greater(g, need_u(p), need_v(p)));
    case TaskKind::edge_weight:
      return TypedAnswer::number(edge_weight(g, need_u(p), need_v(p)));
    case TaskKind::connected_edges:
      return TypedAnswer::pair_set(connected_edges(g, need_u(p), need_v(p)));
    case TaskKind::complete_subgraph:
      return TypedAnswer::boolean(complete_subgraph(g, p.node_list));
    case TaskKind::highest_degree_nn:
      return TypedAnswer::number(highest_degree_nn(g, need_u(p)));
    case TaskKind::k_order_neighbors:
      return TypedAnswer::node_set(k_order_neighbors(g, need_u(p), need_k(p)));
    case TaskKind::neighbors_connected_to:
      return TypedAnswer::node_set(neighbors_connected_to(g, need_u(p), need_v(p)));
    case TaskKind::triangles:
      return TypedAnswer::triple_set(triangles(g, need_u(p)));
    case TaskKind::neighbor_pairs:
      return TypedAnswer::pair_set(neighbor_pairs(g, need_u(p)));
    case TaskKind::edge_common_neighbors:
      return TypedAnswer::node_set(edge_common_neighbors(g, need_u(p), need_v(p)));
    case TaskKind::common_k_order:
      return TypedAnswer::node_set(common_k_order(g, need_u(p), need_v(p), need_k(p)));
  }
  throw std::logic_error("unreachable task kind");
}

Task make_task(int id, int graph_id, const Graph& g, TaskKind kind, const TaskParams& params) {
  Task t;
  t.id = id;
  t.graph_id = graph_id;
  t.kind = kind;
  t.params = params;
  t.question = render_question(kind, params);
  t.truth = answer_task(g, kind, params);
  return t;
}

}  // namespace graphinsight
