#pragma once

#include <chrono>
#include <cstdint>
#include <memory>
#include <string>

#include "graphinsight/bias.hpp"
#include "graphinsight/graph.hpp"
#include "graphinsight/simulator.hpp"

namespace graphinsight {

struct LlmRequest {
  std::string prompt;
  const Graph* graph = nullptr;  // consulted only by the simulator
  std::uint64_t seed = 0;
};

/// Chat-completion backend contract. Implementations must be safe to call
/// from multiple threads.
class LlmClient {
 public:
  virtual ~LlmClient() = default;
  virtual std::string complete(const LlmRequest& request) = 0;
  virtual std::string model_name() const = 0;
};

/// Deterministic in-process responder backed by simulate_llm. Identical
/// (prompt, seed) pairs yield identical responses; never retries.
class SimulatorClient : public LlmClient {
 public:
  explicit SimulatorClient(PositionalBiasModel bias) : bias_(bias) { bias_.validate(); }

  std::string complete(const LlmRequest& request) override;
  std::string model_name() const override { return "simulator"; }
  const PositionalBiasModel& bias() const { return bias_; }

 private:
  PositionalBiasModel bias_;
};

struct RemoteEndpoint {
  std::string url;           // e.g. http://host:port/v1/chat/completions
  std::string model;
  std::string api_key_env = "GRAPHINSIGHT_API_KEY";
  std::chrono::seconds timeout{60};
  int max_retries = 3;
};

/// Chat-completions HTTP client: POSTs {"model", "messages", "temperature": 0}
/// with a bearer token from the configured environment variable and reads the
/// first choice's message content. Transient failures (transport errors,
/// HTTP 429/5xx) are retried with exponential backoff.
class RemoteClient : public LlmClient {
 public:
  explicit RemoteClient(RemoteEndpoint endpoint);

  std::string complete(const LlmRequest& request) override;
  std::string model_name() const override { return endpoint_.model; }

 private:
  RemoteEndpoint endpoint_;
  std::string host_;  // scheme://authority
  std::string path_;
};

}  // namespace graphinsight
