#pragma once

#include <string>

#include "graphinsight/graph.hpp"

namespace graphinsight {

enum class PromptWrapper { none, cot, few_shot, bag };

std::string to_string(PromptWrapper w);
PromptWrapper wrapper_from_string(const std::string& s);

/// Instruction appended by the chain-of-thought wrapper (one line).
extern const char* kCotInstruction;
/// Instruction prepended by the build-a-graph wrapper (one line).
extern const char* kBagInstruction;

/// The fixed 5-node graph whose solved examples seed the few-shot wrapper.
const Graph& few_shot_graph();
/// Two solved examples over few_shot_graph(), rendered verbatim.
std::string few_shot_block();

/// none: identity. cot: appends kCotInstruction. few_shot: prepends
/// few_shot_block(). bag: prepends kBagInstruction.
std::string wrap_prompt(const std::string& base_prompt, PromptWrapper wrapper);

}  // namespace graphinsight
