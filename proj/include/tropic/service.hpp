#pragma once

// Stateless HTTP front end for scene evaluation.  The handlers are plain
// functions so they can be exercised without a socket.

#include "tropic/scene.hpp"

#include <httplib.h>

#include <cstdlib>
#include <iostream>
#include <string>

namespace tropic {

struct HttpReply {
  int status = 200;
  std::string body;
};

enum class LogLevel { quiet, info, debug };

/// TROPIC_LOG_LEVEL = quiet | info | debug (default info).
inline LogLevel log_level_from_env() {
  const char* v = std::getenv("TROPIC_LOG_LEVEL");
  if (!v) return LogLevel::info;
  const std::string s(v);
  if (s == "quiet") return LogLevel::quiet;
  if (s == "debug") return LogLevel::debug;
  return LogLevel::info;
}

inline json::json error_body(const std::string& message) { return {{"error", message}}; }

inline HttpReply handle_evaluate(const std::string& body) {
  json::json request;
  try {
    request = json::json::parse(body);
  } catch (const json::json::parse_error& e) {
    return {400, error_body(std::string("malformed JSON: ") + e.what()).dump()};
  }
  Scene scene;
  try {
    scene = parse_scene(request);
  } catch (const PreconditionError& e) {
    return {400, error_body(e.what()).dump()};
  } catch (const json::json::exception& e) {
    return {400, error_body(std::string("schema violation: ") + e.what()).dump()};
  }
  return {200, encode(evaluate_scene(scene)).dump()};
}

inline HttpReply handle_health() { return {200, json::json{{"status", "ok"}}.dump()}; }

inline void install_routes(httplib::Server& server, LogLevel level = log_level_from_env()) {
  server.Post("/api/evaluate", [level](const httplib::Request& req, httplib::Response& res) {
    const auto reply = handle_evaluate(req.body);
    if (level == LogLevel::debug) std::cerr << "POST /api/evaluate " << req.body.size() << " bytes -> " << reply.status << "\n";
    res.status = reply.status;
    res.set_content(reply.body, "application/json");
  });
  server.Get("/api/health", [](const httplib::Request&, httplib::Response& res) {
    const auto reply = handle_health();
    res.status = reply.status;
    res.set_content(reply.body, "application/json");
  });
  // The studio is served from another origin during development.
  server.set_default_headers({{"Access-Control-Allow-Origin", "*"}});
  server.Options(R"(/api/.*)", [](const httplib::Request&, httplib::Response& res) {
    res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
    res.set_header("Access-Control-Allow-Headers", "Content-Type");
    res.status = 204;
  });
}

}  // namespace tropic
