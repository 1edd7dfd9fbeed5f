#pragma once

#include <cstdio>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <shared_mutex>
#include <string>
#include <vector>

#include "greenseq/io.hpp"
#include "greenseq/search.hpp"

namespace greenseq::explorer {

class session_not_found : public error {
 public:
  using error::error;
};

class history_empty : public error {
 public:
  using error::error;
};

/// JSON view of a framed state as shown to the interactive explorer.
inline json view_of(const FramedState& s) {
  json vertices = json::array();
  for (Vertex i = 1; static_cast<std::size_t>(i) <= s.size(); ++i) {
    const auto c = s.c_vector(i);
    vertices.push_back({{"id", i}, {"green", c.green()}, {"c_vector", c.entries}});
  }
  json history = json::array();
  json history_green = json::array();
  bool all_green = true;
  for (const auto& st : s.history()) {
    history.push_back(st.vertex);
    history_green.push_back(st.green);
    all_green = all_green && st.green;
  }
  const bool all_red = s.is_all_red();
  const auto sigma = all_red ? try_extract_permutation(s) : std::nullopt;
  json v = {
      {"principal", matrix_to_json(s.principal().matrix())},
      {"cmat", matrix_to_json(s.cmat())},
      {"vertices", std::move(vertices)},
      {"history", std::move(history)},
      {"history_green", std::move(history_green)},
      {"all_red", all_red},
      {"mgs_complete", all_red && all_green && !s.history().empty()},
      {"permutation", sigma ? json(sigma->image) : json(nullptr)},
      {"last_move_green", s.history().empty() ? json(nullptr) : json(s.history().back().green)},
  };
  return v;
}

/// In-memory sessions. The map is guarded by a shared mutex; each session
/// has its own mutex so that moves on one session are serialized while
/// distinct sessions proceed in parallel.
class SessionStore {
 public:
  struct Created {
    std::string id;
    json view;
  };

  Created create(const Quiver& q) {
    auto session = std::make_shared<Session>();
    session->state = frame(q);
    std::string id;
    {
      std::unique_lock lock(map_mutex_);
      do id = fresh_id(); while (sessions_.count(id));
      sessions_.emplace(id, session);
    }
    std::lock_guard guard(session->mutex);
    return {id, view_of(session->state)};
  }

  json get(const std::string& id) const {
    auto s = find(id);
    std::lock_guard guard(s->mutex);
    return view_of(s->state);
  }

  /// Red vertices may be mutated too; the view records whether the move was green.
  json mutate(const std::string& id, Vertex k) {
    auto s = find(id);
    std::lock_guard guard(s->mutex);
    auto next = s->state.mutated(k);  // throws invalid_vertex before touching the session
    s->undo.push_back(std::move(s->state));
    s->state = std::move(next);
    json v = view_of(s->state);
    v["green"] = s->state.history().back().green;
    return v;
  }

  json undo(const std::string& id) {
    auto s = find(id);
    std::lock_guard guard(s->mutex);
    if (s->undo.empty()) throw history_empty("nothing to undo");
    s->state = std::move(s->undo.back());
    s->undo.pop_back();
    return view_of(s->state);
  }

  /// {"quiver": ..., "sequence": "1,2"}, accepted as-is by `greenseq verify`.
  json export_session(const std::string& id) const {
    auto s = find(id);
    std::lock_guard guard(s->mutex);
    return {{"quiver", quiver_to_json(s->state.origin())}, {"sequence", format_sequence(s->state.sequence())}};
  }

  void remove(const std::string& id) {
    std::unique_lock lock(map_mutex_);
    if (!sessions_.erase(id)) throw session_not_found("unknown session '" + id + "'");
  }

  std::size_t size() const {
    std::shared_lock lock(map_mutex_);
    return sessions_.size();
  }

 private:
  struct Session {
    mutable std::mutex mutex;
    FramedState state;
    std::vector<FramedState> undo;
  };

  std::shared_ptr<Session> find(const std::string& id) const {
    std::shared_lock lock(map_mutex_);
    auto it = sessions_.find(id);
    if (it == sessions_.end()) throw session_not_found("unknown session '" + id + "'");
    return it->second;
  }

  std::string fresh_id() {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(rng_()));
    return buf;
  }

  mutable std::shared_mutex map_mutex_;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
  std::mt19937_64 rng_{std::random_device{}()};
};

}  // namespace greenseq::explorer
