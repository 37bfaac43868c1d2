#include "uamasp/service.hpp"

#include <cstdlib>

#include <httplib.h>

#include "uamasp/error.hpp"
#include "uamasp/json_io.hpp"

namespace uamasp {

using nlohmann::json;

namespace {

ApiResponse ok(json body) {
  body["schema_version"] = kSchemaVersion;
  return {200, std::move(body)};
}

ApiResponse fail(int status, const std::string& message) {
  return {status, {{"schema_version", kSchemaVersion}, {"error", message}}};
}

class BadRequest : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::int64_t integer_field(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer()) {
    throw BadRequest(std::string("field '") + key + "' must be an integer");
  }
  return j[key].get<std::int64_t>();
}

CorridorKey corridor_field(const json& j) {
  if (!j.contains("corridor") || !j["corridor"].is_array() || j["corridor"].size() != 2 ||
      !j["corridor"][0].is_number_integer() || !j["corridor"][1].is_number_integer()) {
    throw BadRequest("field 'corridor' must be a pair of integers");
  }
  return {j["corridor"][0].get<std::int64_t>(), j["corridor"][1].get<std::int64_t>()};
}

}  // namespace

ApiResponse ApiService::handle(const std::string& method, const std::string& path, const std::string& body) {
  std::lock_guard lock(mutex_);
  try {
    json request;
    if (method == "POST") {
      request = json::parse(body, nullptr, false);
      if (request.is_discarded() || !request.is_object()) return fail(400, "request body must be a JSON object");
    }
    if (method == "GET" && path == "/api/network") return network();
    if (method == "GET" && path == "/api/history") {
      return ok({{"turns", session_ ? to_json(session_->history()) : json::array()}});
    }
    if (method == "GET" && path == "/api/agents") {
      if (!session_) return fail(409, "no session");
      return ok({{"scenario", session_->scenario().name}, {"agents", to_json(session_->agents())}});
    }
    if (method == "GET" && path == "/api/models/latest") {
      if (!session_) return fail(409, "no session");
      const auto& m = session_->latest();
      return ok({{"scenario", m.scenario},
                 {"status", status_text(m.status)},
                 {"atoms", atoms_json(m.projected)},
                 {"validation", m.validation ? to_json(*m.validation) : json(nullptr)}});
    }
    if (method == "POST" && path == "/api/session") return open(request);
    if (method == "POST" && path == "/api/actions/report-congestion") return act("report-congestion", request);
    if (method == "POST" && path == "/api/actions/clear-corridor") return act("clear-corridor", request);
    return fail(404, "no route for " + method + " " + path);
  } catch (const BadRequest& e) {
    return fail(400, e.what());
  } catch (const ScenarioError& e) {
    return fail(400, e.what());
  } catch (const std::exception& e) {
    return fail(500, e.what());
  }
}

ApiResponse ApiService::network() {
  if (!network_) network_ = build_network_view(builtin_scenario("query01").environment);
  return ok({{"network", to_json(*network_)}});
}

ApiResponse ApiService::open(const json& request) {
  if (!request.contains("scenario") || !request["scenario"].is_string()) {
    throw BadRequest("field 'scenario' must be a string");
  }
  std::vector<Pin> pins;
  if (request.contains("pins")) {
    if (!request["pins"].is_array()) throw BadRequest("field 'pins' must be an array of strings");
    for (const auto& p : request["pins"]) {
      if (!p.is_string()) throw BadRequest("field 'pins' must be an array of strings");
      pins.push_back(parse_pin(p.get<std::string>()));
    }
  }
  session_.emplace(open_session(request["scenario"].get<std::string>(), pins));
  json pin_text = json::array();
  for (const auto& p : session_->scenario().pins) pin_text.push_back(format_pin(p));
  return ok({{"scenario", session_->scenario().name},
             {"pins", pin_text},
             {"status", status_text(session_->latest().status)},
             {"agents", to_json(session_->agents())}});
}

ApiResponse ApiService::act(const std::string& action, const json& request) {
  if (!session_) return fail(409, "no session");
  auto [from, to] = corridor_field(request);
  std::vector<DialogueTurn> turns;
  if (action == "report-congestion") {
    turns = session_->report_congestion(from, to);
  } else {
    turns = session_->clear_corridor(from, to, integer_field(request, "behind"));
  }
  const DialogueTurn& response = turns.back();
  return ok({{"turns", to_json(turns)},
             {"outcome", response.outcome ? to_json(*response.outcome) : json(nullptr)},
             {"error", response.error ? json(response.utterance) : json(nullptr)}});
}

struct ApiServer::Impl {
  ApiService service;
  httplib::Server server;
};

ApiServer::ApiServer() : impl_(std::make_unique<Impl>()) {
  auto forward = [this](const httplib::Request& req, httplib::Response& res) {
    ApiResponse r = impl_->service.handle(req.method, req.path, req.body);
    res.status = r.status;
    res.set_content(r.body.dump(), "application/json");
  };
  impl_->server.Get(".*", forward);
  impl_->server.Post(".*", forward);
  impl_->server.Put(".*", forward);
  impl_->server.Delete(".*", forward);
}

ApiServer::~ApiServer() { stop(); }

int ApiServer::bind(const std::string& host, int port) {
  if (port == 0) return impl_->server.bind_to_any_port(host);
  return impl_->server.bind_to_port(host, port) ? port : -1;
}

bool ApiServer::run() { return impl_->server.listen_after_bind(); }

void ApiServer::stop() {
  if (impl_ && impl_->server.is_running()) impl_->server.stop();
}

void ApiServer::wait_until_ready() const { impl_->server.wait_until_ready(); }

int default_port() {
  if (const char* env = std::getenv("UAMASP_PORT")) {
    try {
      int port = std::stoi(env);
      if (port > 0 && port < 65536) return port;
    } catch (const std::exception&) {
    }
  }
  return 8080;
}

}  // namespace uamasp
