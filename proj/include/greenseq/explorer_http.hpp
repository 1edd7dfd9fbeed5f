#pragma once

#include <string>

#include "httplib.h"

#include "greenseq/explorer.hpp"

namespace greenseq::explorer {

namespace detail {

inline bool is_local_origin(const std::string& origin) {
  for (const char* prefix : {"http://localhost", "http://127.0.0.1", "https://localhost", "https://127.0.0.1"}) {
    const std::string p(prefix);
    if (origin.compare(0, p.size(), p) == 0 && (origin.size() == p.size() || origin[p.size()] == ':')) return true;
  }
  return false;
}

inline void send_json(httplib::Response& res, int status, const json& body) {
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

inline void send_error(httplib::Response& res, int status, const std::string& message) {
  send_json(res, status, {{"error", message}});
}

// Maps library errors onto HTTP statuses.
template <class F>
void guarded(httplib::Response& res, F&& f) {
  try {
    f();
  } catch (const session_not_found& e) {
    send_error(res, 404, e.what());
  } catch (const history_empty& e) {
    send_error(res, 409, e.what());
  } catch (const error& e) {
    send_error(res, 400, e.what());
  } catch (const json::exception& e) {
    send_error(res, 400, std::string("malformed request: ") + e.what());
  } catch (const std::exception& e) {
    send_error(res, 500, e.what());
  }
}

}  // namespace detail

/// Registers the session endpoints on `server`:
///   POST   /sessions               {"quiver": ...}  -> 201 {"id", "view"}
///   GET    /sessions/:id                            -> view
///   POST   /sessions/:id/mutate    {"vertex": k}    -> view
///   POST   /sessions/:id/undo                       -> view (409 when empty)
///   GET    /sessions/:id/export                     -> {"quiver", "sequence"}
///   DELETE /sessions/:id                            -> 204
inline void register_routes(httplib::Server& server, SessionStore& store) {
  using httplib::Request;
  using httplib::Response;

  server.set_post_routing_handler([](const Request& req, Response& res) {
    const auto origin = req.get_header_value("Origin");
    if (detail::is_local_origin(origin)) {
      res.set_header("Access-Control-Allow-Origin", origin);
      res.set_header("Vary", "Origin");
    }
  });
  server.Options(R"(/sessions.*)", [](const Request& req, Response& res) {
    if (detail::is_local_origin(req.get_header_value("Origin"))) {
      res.set_header("Access-Control-Allow-Methods", "GET, POST, DELETE, OPTIONS");
      res.set_header("Access-Control-Allow-Headers", "Content-Type");
    }
    res.status = 204;
  });

  server.Post("/sessions", [&store](const Request& req, Response& res) {
    detail::guarded(res, [&] {
      json body;
      try {
        body = json::parse(req.body);
      } catch (const json::exception& e) {
        throw invalid_quiver(std::string("request body is not JSON: ") + e.what());
      }
      const auto created = store.create(quiver_from_json(body));
      detail::send_json(res, 201, {{"id", created.id}, {"view", created.view}});
    });
  });

  server.Get("/sessions/:id", [&store](const Request& req, Response& res) {
    detail::guarded(res, [&] { detail::send_json(res, 200, store.get(req.path_params.at("id"))); });
  });

  server.Post("/sessions/:id/mutate", [&store](const Request& req, Response& res) {
    detail::guarded(res, [&] {
      const auto body = json::parse(req.body);
      const auto& v = body.at("vertex");
      if (!v.is_number_integer()) throw invalid_vertex("\"vertex\" must be an integer");
      detail::send_json(res, 200, store.mutate(req.path_params.at("id"), v.get<Vertex>()));
    });
  });

  server.Post("/sessions/:id/undo", [&store](const Request& req, Response& res) {
    detail::guarded(res, [&] { detail::send_json(res, 200, store.undo(req.path_params.at("id"))); });
  });

  server.Get("/sessions/:id/export", [&store](const Request& req, Response& res) {
    detail::guarded(res, [&] { detail::send_json(res, 200, store.export_session(req.path_params.at("id"))); });
  });

  server.Delete("/sessions/:id", [&store](const Request& req, Response& res) {
    detail::guarded(res, [&] {
      store.remove(req.path_params.at("id"));
      res.status = 204;
    });
  });
}

}  // namespace greenseq::explorer
