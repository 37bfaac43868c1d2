#include <doctest/doctest.h>

#include <httplib.h>

#include <fstream>
#include <thread>

#include "uamasp/service.hpp"

using namespace uamasp;
using nlohmann::json;

namespace {

struct LiveServer {
  ApiServer server;
  int port = -1;
  std::thread thread;

  LiveServer() {
    port = server.bind("127.0.0.1", 0);
    REQUIRE(port > 0);
    thread = std::thread([this] { server.run(); });
    server.wait_until_ready();
  }
  ~LiveServer() {
    server.stop();
    thread.join();
  }
};

struct Reply {
  int status = 0;
  json body;
};

Reply get(httplib::Client& c, const std::string& path) {
  auto r = c.Get(path);
  REQUIRE(r);
  return {r->status, json::parse(r->body)};
}

Reply post(httplib::Client& c, const std::string& path, const std::string& body) {
  auto r = c.Post(path, body, "application/json");
  REQUIRE(r);
  return {r->status, json::parse(r->body)};
}

}  // namespace

TEST_SUITE("service") {

TEST_CASE("http session flow") {
  LiveServer live;
  httplib::Client c("127.0.0.1", live.port);

  auto agents = get(c, "/api/agents");
  CHECK(agents.status == 409);
  CHECK(agents.body["schema_version"] == 1);
  CHECK(get(c, "/api/models/latest").status == 409);
  CHECK(post(c, "/api/actions/report-congestion", R"({"corridor":[2,3]})").status == 409);
  auto history = get(c, "/api/history");
  CHECK(history.status == 200);
  CHECK(history.body["turns"].empty());

  auto net = get(c, "/api/network");
  CHECK(net.status == 200);
  CHECK(net.body["schema_version"] == 1);
  CHECK(net.body["network"]["corridors"].size() == 4);
  CHECK(net.body["network"]["corridors"][0]["coverage"][1] ==
        json({{"from_wp", 7}, {"to_wp", 15}, {"uatms", {1, 2}}}));

  auto open = post(c, "/api/session",
                   R"({"scenario":"query04","pins":["1=1-2:6","2=1-2:9","3=1-2:1","4=1-2:18","5=1-2:5","6=1-2:19"]})");
  REQUIRE(open.status == 200);
  CHECK(open.body["scenario"] == "query04");
  CHECK(open.body["pins"].size() == 6);
  CHECK(open.body["agents"].size() == 6);

  auto act = post(c, "/api/actions/report-congestion", R"({"corridor":[2,3]})");
  REQUIRE(act.status == 200);
  CHECK(act.body["schema_version"] == 1);
  CHECK(act.body["turns"].size() == 2);
  CHECK(act.body["error"].is_null());
  CHECK(act.body["outcome"]["route_changes"].size() == 6);
  CHECK(act.body["turns"][1]["relayed"] == json({4, 6}));

  auto latest = get(c, "/api/models/latest");
  CHECK(latest.status == 200);
  CHECK(latest.body["status"] == "SATISFIABLE");
  CHECK(latest.body["validation"]["passed"] == true);

  auto refused = post(c, "/api/actions/report-congestion", R"({"corridor":[9,9]})");
  CHECK(refused.status == 200);
  CHECK(refused.body["error"] == "error: corridor vp9 -> vp9 is not in the network");
  CHECK(refused.body["outcome"].is_null());

  auto clear = post(c, "/api/actions/clear-corridor", R"({"corridor":[2,3],"behind":7})");
  CHECK(clear.status == 200);
  CHECK(get(c, "/api/history").body["turns"].size() == 6);
}

TEST_CASE("http request errors") {
  LiveServer live;
  httplib::Client c("127.0.0.1", live.port);
  auto missing = get(c, "/api/nothing");
  CHECK(missing.status == 404);
  CHECK(missing.body["schema_version"] == 1);
  CHECK(missing.body.contains("error"));
  CHECK(post(c, "/api/session", "{not json").status == 400);
  CHECK(post(c, "/api/session", "[1,2]").status == 400);
  CHECK(post(c, "/api/session", R"({"scenario":"query42"})").status == 400);
  CHECK(post(c, "/api/session", R"({"scenario":"query04","pins":["bad"]})").status == 400);
  CHECK(post(c, "/api/session", R"({"scenario":"query04","pins":[1]})").status == 400);
  REQUIRE(post(c, "/api/session", R"({"scenario":"query05"})").status == 200);
  CHECK(post(c, "/api/actions/clear-corridor", R"({"corridor":[2,3]})").status == 400);
  CHECK(post(c, "/api/actions/clear-corridor", R"({"corridor":"2-3","behind":7})").status == 400);
}

TEST_CASE("report congestion response matches the console fixture") {
  ApiService s;
  REQUIRE(s.handle("POST", "/api/session",
                   R"({"scenario":"query04","pins":["1=1-2:6","2=1-2:9","3=1-2:1","4=1-2:18","5=1-2:5","6=1-2:19"]})")
              .status == 200);
  auto r = s.handle("POST", "/api/actions/report-congestion", R"({"corridor":[2,3]})");
  std::ifstream in(std::string(UAMASP_FIXTURE_DIR) + "/report_congestion_query04.json");
  REQUIRE(in);
  CHECK(r.body == json::parse(in));
}

TEST_CASE("service without transport") {
  ApiService s;
  CHECK(s.handle("GET", "/api/agents", "").status == 409);
  CHECK(s.handle("DELETE", "/api/session", "").status == 404);
  auto open = s.handle("POST", "/api/session", R"({"scenario":"query05"})");
  REQUIRE(open.status == 200);
  auto act = s.handle("POST", "/api/actions/clear-corridor", R"({"corridor":[2,3],"behind":7})");
  CHECK(act.body["outcome"]["covered_by_uatm2"] == json({8}));
  CHECK(act.body["outcome"]["covered_by_other"] == json({9, 10, 11, 12}));
}

}
