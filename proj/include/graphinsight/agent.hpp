#pragma once

#include <cstdint>
#include <string>

#include "graphinsight/client.hpp"
#include "graphinsight/graph.hpp"
#include "graphinsight/tasks.hpp"

namespace graphinsight {

struct MethodSpec;  // evaluation.hpp

/// Multi-step pipeline for composite tasks. The task is decomposed into its
/// lookup-step chain (k-order neighborhoods expand one hop per step, set
/// intersections resolve their operand sets first, the remaining kinds end
/// on the original question). Each step retrieves facts for its frontier
/// nodes, embeds all prior step results, and queries the client; a step
/// whose answer fails to parse aborts the chain with a failure response.
std::string run_agent(const Task& task, const Graph& g, const MethodSpec& method,
                      LlmClient& client, std::uint64_t seed);

}  // namespace graphinsight
