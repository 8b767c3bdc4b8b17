#include "graphinsight/client.hpp"

#include <cstdlib>
#include <stdexcept>
#include <thread>

#include <httplib.h>
#include <nlohmann/json.hpp>

namespace graphinsight {

std::string SimulatorClient::complete(const LlmRequest& request) {
  if (request.graph == nullptr)
    throw std::invalid_argument("simulator requests need a graph context");
  return simulate_llm(request.prompt, *request.graph, bias_, request.seed);
}

RemoteClient::RemoteClient(RemoteEndpoint endpoint) : endpoint_(std::move(endpoint)) {
  const std::string& url = endpoint_.url;
  const auto scheme_end = url.find("://");
  if (scheme_end == std::string::npos)
    throw std::invalid_argument("endpoint url must include a scheme");
  const auto path_start = url.find('/', scheme_end + 3);
  if (path_start == std::string::npos) {
    host_ = url;
    path_ = "/v1/chat/completions";
  } else {
    host_ = url.substr(0, path_start);
    path_ = url.substr(path_start);
  }
}

std::string RemoteClient::complete(const LlmRequest& request) {
  nlohmann::json body = {
      {"model", endpoint_.model},
      {"messages", nlohmann::json::array({{{"role", "user"}, {"content", request.prompt}}})},
      {"temperature", 0},
  };
  const std::string payload = body.dump();

  httplib::Headers headers;
  if (const char* key = std::getenv(endpoint_.api_key_env.c_str()); key && *key)
    headers.emplace("Authorization", std::string("Bearer ") + key);

  std::string last_error;
  for (int attempt = 0; attempt <= endpoint_.max_retries; ++attempt) {
    if (attempt > 0) {
      const auto backoff = std::chrono::milliseconds(200) * (1 << (attempt - 1));
      std::this_thread::sleep_for(backoff);
    }
    httplib::Client cli(host_);
    cli.set_read_timeout(endpoint_.timeout);
    cli.set_connection_timeout(endpoint_.timeout);
    auto res = cli.Post(path_, headers, payload, "application/json");
    if (!res) {
      last_error = "transport error: " + httplib::to_string(res.error());
      continue;
    }
    if (res->status == 429 || res->status >= 500) {
      last_error = "http status " + std::to_string(res->status);
      continue;
    }
    if (res->status != 200)
      throw std::runtime_error("chat endpoint returned status " + std::to_string(res->status));
    try {
      auto parsed = nlohmann::json::parse(res->body);
      return parsed.at("choices").at(0).at("message").at("content").get<std::string>();
    } catch (const nlohmann::json::exception& e) {
      throw std::runtime_error(std::string("malformed chat response: ") + e.what());
    }
  }
  throw std::runtime_error("chat endpoint unreachable after retries: " + last_error);
}

}  // namespace graphinsight
