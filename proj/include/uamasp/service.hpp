#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "uamasp/dialogue.hpp"

namespace uamasp {

struct ApiResponse {
  int status = 200;
  nlohmann::json body;
};

/// Transport-independent request handling for the JSON API. Requests are
/// serialized against the single dialogue session.
class ApiService {
 public:
  ApiResponse handle(const std::string& method, const std::string& path, const std::string& body);

 private:
  ApiResponse network();
  ApiResponse open(const nlohmann::json& request);
  ApiResponse act(const std::string& action, const nlohmann::json& request);

  std::mutex mutex_;
  std::optional<VertiportNetwork> network_;
  std::optional<Session> session_;
};

/// HTTP front for ApiService.
class ApiServer {
 public:
  ApiServer();
  ~ApiServer();
  ApiServer(const ApiServer&) = delete;
  ApiServer& operator=(const ApiServer&) = delete;

  /// Binds to `port`, or to a free port when it is 0. Returns the bound port, -1 on failure.
  int bind(const std::string& host, int port);
  /// Blocks serving requests until stop() is called.
  bool run();
  void stop();
  void wait_until_ready() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

int default_port();

}  // namespace uamasp
