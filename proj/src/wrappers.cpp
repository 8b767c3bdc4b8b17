#include "graphinsight/wrappers.hpp"

#include <stdexcept>

#include "graphinsight/description.hpp"

namespace graphinsight {

const char* kCotInstruction = "Let's think step by step, then state the final answer.";
const char* kBagInstruction = "Let's construct a graph with the nodes and edges first.";

std::string to_string(PromptWrapper w) {
  switch (w) {
    case PromptWrapper::none: return "none";
    case PromptWrapper::cot: return "cot";
    case PromptWrapper::few_shot: return "fs";
    case PromptWrapper::bag: return "bag";
  }
  throw std::logic_error("unreachable wrapper");
}

PromptWrapper wrapper_from_string(const std::string& s) {
  if (s == "none") return PromptWrapper::none;
  if (s == "cot") return PromptWrapper::cot;
  if (s == "fs" || s == "few_shot") return PromptWrapper::few_shot;
  if (s == "bag") return PromptWrapper::bag;
  throw std::invalid_argument("unknown prompt wrapper: " + s);
}

const Graph& few_shot_graph() {
  static const Graph g = Graph::from_edges(false, {{0, 1, 2},
                                                   {0, 2, 1},
                                                   {1, 2, 3},
                                                   {2, 3, 4},
                                                   {3, 4, 1}});
  return g;
}

std::string few_shot_block() {
  const std::string desc = render_raw(few_shot_graph()).text();
  std::string block;
  block += "Example 1:\n";
  block += desc;
  block += "\n\nQ: How many nodes are in this graph?\nAnswer with a single number.\nA: 5\n\n";
  block += "Example 2:\n";
  block += desc;
  block += "\n\nQ: What is the degree of node 2?\nAnswer with a single number.\nA: 3\n\n";
  return block;
}

std::string wrap_prompt(const std::string& base_prompt, PromptWrapper wrapper) {
  switch (wrapper) {
    case PromptWrapper::none:
      return base_prompt;
    case PromptWrapper::cot:
      return base_prompt + "\n" + kCotInstruction;
    case PromptWrapper::few_shot:
      return few_shot_block() + base_prompt;
    case PromptWrapper::bag:
      return std::string(kBagInstruction) + "\n\n" + base_prompt;
  }
  throw std::logic_error("unreachable wrapper");
}

}  // namespace graphinsight
