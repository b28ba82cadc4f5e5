#include "thuelab/server.hpp"

#include <httplib.h>

#include <iostream>

namespace thuelab {

using nlohmann::json;

namespace {

void send(httplib::Response& res, const ApiResponse& api) {
  res.status = api.status;
  res.set_content(api.body.dump(), "application/json");
}

json parse_body(const httplib::Request& req, httplib::Response& res, bool& ok) {
  ok = true;
  if (req.body.empty()) return json::object();
  try {
    return json::parse(req.body);
  } catch (const json::parse_error& e) {
    ok = false;
    send(res, {400, json{{"error", std::string("invalid JSON: ") + e.what()}}});
    return nullptr;
  }
}

}  // namespace

SessionServer::SessionServer(SessionManager& sessions)
    : sessions_(sessions), server_(std::make_unique<httplib::Server>()) {
  auto& s = *server_;
  // The browser client is served from another origin.
  s.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                         {"Access-Control-Allow-Methods", "GET, POST, DELETE, OPTIONS"},
                         {"Access-Control-Allow-Headers", "Content-Type"}});
  s.Options(R"(.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });

  s.Post("/session", [this](const httplib::Request& req, httplib::Response& res) {
    bool ok = false;
    const json body = parse_body(req, res, ok);
    if (ok) send(res, sessions_.create(body));
  });
  s.Post(R"(/session/([^/]+)/move)", [this](const httplib::Request& req, httplib::Response& res) {
    bool ok = false;
    const json body = parse_body(req, res, ok);
    if (ok) send(res, sessions_.move(req.matches[1], body));
  });
  s.Get(R"(/session/([^/]+)/trace)", [this](const httplib::Request& req, httplib::Response& res) {
    send(res, sessions_.trace(req.matches[1]));
  });
  s.Get(R"(/session/([^/]+))", [this](const httplib::Request& req, httplib::Response& res) {
    send(res, sessions_.state(req.matches[1]));
  });
  s.Delete(R"(/session/([^/]+))", [this](const httplib::Request& req, httplib::Response& res) {
    send(res, sessions_.remove(req.matches[1]));
  });
}

SessionServer::~SessionServer() { stop(); }

int SessionServer::bind(const std::string& host, int port) {
  if (port == 0) return server_->bind_to_any_port(host);
  return server_->bind_to_port(host, port) ? port : -1;
}

bool SessionServer::listen() { return server_->listen_after_bind(); }

void SessionServer::stop() {
  if (server_->is_running()) server_->stop();
}

void SessionServer::wait_until_ready() const { server_->wait_until_ready(); }

int run_server(int port, std::uint64_t default_seed) {
  SessionManager sessions(default_seed);
  SessionServer server(sessions);
  const int bound = server.bind("127.0.0.1", port);
  if (bound < 0) {
    std::cerr << "cannot bind 127.0.0.1:" << port << '\n';
    return 1;
  }
  std::cerr << "serving on http://127.0.0.1:" << bound << '\n';
  return server.listen() ? 0 : 1;
}

}  // namespace thuelab
