#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <future>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "greenseq/framed.hpp"

namespace greenseq {

enum class Mode { green, maximal_green, reddening };
enum class Strategy { dfs_all, bfs_shortest, count_only };

inline std::string to_string(Mode m) {
  switch (m) {
    case Mode::green: return "green";
    case Mode::maximal_green: return "maximal-green";
    case Mode::reddening: return "reddening";
  }
  return "?";
}

/// Accepts "green", "maximal-green"/"maximal_green"/"mgs", "reddening".
inline Mode parse_mode(std::string s) {
  std::replace(s.begin(), s.end(), '_', '-');
  if (s == "green") return Mode::green;
  if (s == "maximal-green" || s == "mgs") return Mode::maximal_green;
  if (s == "reddening") return Mode::reddening;
  throw error("unknown mode '" + s + "'");
}

struct SearchConfig {
  std::size_t max_len = 10;
  Mode mode = Mode::maximal_green;
  Strategy strategy = Strategy::dfs_all;
  bool dedup = false;
  // Reddening search only; green search can never re-mutate the vertex it
  // just turned red.
  bool allow_immediate_repeat = false;
  unsigned threads = 1;
};

struct SearchReport {
  std::vector<MutationSequence> sequences;  // sorted lexicographically
  std::uint64_t count = 0;
  std::uint64_t states_visited = 0;
  bool truncated = false;
};

template <MatrixInteger Int>
struct VerifyReport {
  Mode mode = Mode::maximal_green;
  bool valid = false;
  std::vector<Step<Int>> steps;
  std::optional<std::size_t> first_red_step;  // 1-based index of the first non-green mutation
  bool all_red = false;
  std::optional<Permutation> permutation;
  std::string message;
  BasicFramedState<Int> final_state;
};

/// Replays `seq` on the framed quiver and checks it in the requested mode.
/// Failures are reported, not thrown; only out-of-range vertices throw.
template <MatrixInteger Int>
VerifyReport<Int> verify_sequence(const BasicQuiver<Int>& q, const MutationSequence& seq, Mode mode) {
  for (Vertex v : seq) q.check_vertex(v);
  VerifyReport<Int> r;
  r.mode = mode;
  auto s = frame(q);
  for (Vertex k : seq) {
    s = s.mutated(k);
    if (!s.history().back().green && !r.first_red_step) r.first_red_step = s.history().size();
  }
  r.steps = s.history();
  r.all_red = s.is_all_red();
  const bool all_green = !r.first_red_step.has_value();
  switch (mode) {
    case Mode::green:
      r.valid = all_green;
      break;
    case Mode::maximal_green:
      r.valid = all_green && r.all_red;
      break;
    case Mode::reddening:
      r.valid = r.all_red;
      break;
  }
  if (!r.valid) {
    if (mode != Mode::reddening && !all_green)
      r.message = "step " + std::to_string(*r.first_red_step) + " mutates red vertex " +
                  std::to_string(seq[*r.first_red_step - 1]);
    else
      r.message = "not all vertices are red at the end";
  }
  if (r.all_red && (r.valid || mode == Mode::green)) {
    if (mode == Mode::green)
      r.permutation = try_extract_permutation(s);
    else
      r.permutation = extract_permutation(s);
  }
  r.final_state = std::move(s);
  return r;
}

namespace detail {

template <MatrixInteger Int>
class TreeSearch {
 public:
  TreeSearch(const SearchConfig& cfg) : cfg_(cfg) {}

  struct Result {
    std::uint64_t count = 0;
    bool truncated = false;
    std::vector<MutationSequence> suffixes;
  };

  Result explore(const BasicFramedState<Int>& s, std::size_t remaining, Vertex last) {
    if (!cfg_.dedup) return expand(s, remaining, last);
    Key key{s.principal().matrix(), s.cmat(), remaining, cfg_.mode == Mode::reddening ? last : 0};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Result r = expand(s, remaining, last);
    memo_.emplace(std::move(key), r);
    return r;
  }

  std::vector<Vertex> moves(const BasicFramedState<Int>& s, Vertex last) const {
    if (cfg_.mode != Mode::reddening) return s.green_vertices();
    std::vector<Vertex> out;
    for (Vertex v = 1; static_cast<std::size_t>(v) <= s.size(); ++v)
      if (cfg_.allow_immediate_repeat || v != last) out.push_back(v);
    return out;
  }

  std::uint64_t states_visited() const noexcept { return visited_; }

 private:
  using Key = std::tuple<SquareMatrix<Int>, SquareMatrix<Int>, std::size_t, Vertex>;

  bool storing() const { return cfg_.strategy != Strategy::count_only; }

  Result expand(const BasicFramedState<Int>& s, std::size_t remaining, Vertex last) {
    ++visited_;
    Result r;
    const bool red = s.is_all_red();
    if (red) {
      r.count = 1;
      if (storing()) r.suffixes.emplace_back();
      if (cfg_.mode != Mode::reddening) return r;
    }
    const auto next = moves(s, last);
    if (next.empty()) return r;
    if (remaining == 0) {
      r.truncated = true;
      return r;
    }
    for (Vertex k : next) {
      Result sub = explore(s.mutated(k), remaining - 1, k);
      r.count += sub.count;
      r.truncated = r.truncated || sub.truncated;
      for (auto& suf : sub.suffixes) {
        suf.insert(suf.begin(), k);
        r.suffixes.push_back(std::move(suf));
      }
    }
    return r;
  }

  SearchConfig cfg_;
  std::map<Key, Result> memo_;
  std::uint64_t visited_ = 0;
};

}  // namespace detail

/// Depth-first search over green (or, in reddening mode, arbitrary)
/// mutations from the framed quiver, up to cfg.max_len steps. Vertices are
/// tried in increasing order; with `threads > 1` the first-level subtrees are
/// searched concurrently and merged in the same order.
template <MatrixInteger Int>
SearchReport enumerate_mgs(const BasicQuiver<Int>& q, SearchConfig cfg) {
  if (cfg.max_len < 1) throw error("max_len must be at least 1");
  if (cfg.mode == Mode::green) throw error("enumeration needs mode maximal_green or reddening");
  if (cfg.strategy == Strategy::bfs_shortest) throw error("use shortest_mgs for breadth-first search");

  SearchReport report;
  const auto root = frame(q);
  using Search = detail::TreeSearch<Int>;
  typename Search::Result total;

  if (cfg.threads <= 1) {
    Search search(cfg);
    total = search.explore(root, cfg.max_len, 0);
    report.states_visited = search.states_visited();
  } else {
    Search probe(cfg);
    const auto first = probe.moves(root, 0);
    struct Part {
      typename Search::Result result;
      std::uint64_t visited = 0;
    };
    std::vector<std::future<std::vector<std::pair<Vertex, Part>>>> workers;
    const unsigned nworkers = std::min<unsigned>(cfg.threads, static_cast<unsigned>(first.size()));
    for (unsigned w = 0; w < nworkers; ++w) {
      workers.push_back(std::async(std::launch::async, [&, w] {
        std::vector<std::pair<Vertex, Part>> out;
        for (std::size_t idx = w; idx < first.size(); idx += nworkers) {
          Search search(cfg);
          Part p;
          p.result = search.explore(root.mutated(first[idx]), cfg.max_len - 1, first[idx]);
          p.visited = search.states_visited();
          out.emplace_back(first[idx], std::move(p));
        }
        return out;
      }));
    }
    std::map<Vertex, Part> parts;
    for (auto& f : workers)
      for (auto& [k, p] : f.get()) parts.emplace(k, std::move(p));
    report.states_visited = 1;
    for (auto& [k, p] : parts) {
      total.count += p.result.count;
      total.truncated = total.truncated || p.result.truncated;
      report.states_visited += p.visited;
      for (auto& suf : p.result.suffixes) {
        suf.insert(suf.begin(), k);
        total.suffixes.push_back(std::move(suf));
      }
    }
  }

  report.count = total.count;
  report.truncated = total.truncated;
  report.sequences = std::move(total.suffixes);
  std::sort(report.sequences.begin(), report.sequences.end());
  return report;
}

/// Breadth-first search over green mutations with exact-state dedup. The
/// report holds at most one sequence, of minimal length.
template <MatrixInteger Int>
SearchReport search_shortest(const BasicQuiver<Int>& q, std::size_t max_len) {
  SearchReport report;
  std::set<std::pair<SquareMatrix<Int>, SquareMatrix<Int>>> seen;
  std::deque<BasicFramedState<Int>> frontier;
  auto root = frame(q);
  seen.emplace(root.principal().matrix(), root.cmat());
  frontier.push_back(std::move(root));
  while (!frontier.empty()) {
    auto s = std::move(frontier.front());
    frontier.pop_front();
    ++report.states_visited;
    if (s.is_all_red()) {
      report.sequences.push_back(s.sequence());
      report.count = 1;
      return report;
    }
    if (s.history().size() >= max_len) {
      report.truncated = true;
      continue;
    }
    for (Vertex k : s.green_vertices()) {
      auto t = s.mutated(k);
      if (seen.emplace(t.principal().matrix(), t.cmat()).second) frontier.push_back(std::move(t));
    }
  }
  return report;
}

template <MatrixInteger Int>
std::optional<MutationSequence> shortest_mgs(const BasicQuiver<Int>& q, std::size_t max_len) {
  auto r = search_shortest(q, max_len);
  if (r.sequences.empty()) return std::nullopt;
  return r.sequences.front();
}

/// Number of maximal green sequences of length <= max_len, and whether the
/// depth bound cut off any branch.
template <MatrixInteger Int>
std::pair<std::uint64_t, bool> count_mgs(const BasicQuiver<Int>& q, std::size_t max_len) {
  SearchConfig cfg;
  cfg.max_len = max_len;
  cfg.strategy = Strategy::count_only;
  cfg.dedup = true;
  auto r = enumerate_mgs(q, cfg);
  return {r.count, r.truncated};
}

/// A source sequence: a topological order (sources first), ties broken by
/// smallest index.
template <MatrixInteger Int>
MutationSequence source_sequence(const BasicQuiver<Int>& q) {
  const auto n = static_cast<Vertex>(q.size());
  std::vector<int> indegree(q.size(), 0);
  for (Vertex i = 1; i <= n; ++i)
    for (Vertex j = 1; j <= n; ++j)
      if (q.arrows(i, j) > Int(0)) ++indegree[static_cast<std::size_t>(j - 1)];
  std::set<Vertex> ready;
  for (Vertex v = 1; v <= n; ++v)
    if (indegree[static_cast<std::size_t>(v - 1)] == 0) ready.insert(v);
  MutationSequence order;
  while (!ready.empty()) {
    const Vertex v = *ready.begin();
    ready.erase(ready.begin());
    order.push_back(v);
    for (Vertex j = 1; j <= n; ++j)
      if (q.arrows(v, j) > Int(0) && --indegree[static_cast<std::size_t>(j - 1)] == 0) ready.insert(j);
  }
  if (order.size() != q.size()) throw cyclic_quiver("quiver has an oriented cycle; no source sequence exists");
  if (!verify_sequence(q, order, Mode::maximal_green).valid)
    throw std::logic_error("source sequence failed to verify as maximal green");
  return order;
}

/// Every source sequence (all topological orders) of an acyclic quiver.
template <MatrixInteger Int>
std::vector<MutationSequence> source_sequences(const BasicQuiver<Int>& q) {
  source_sequence(q);  // throws on cycles
  const auto n = static_cast<Vertex>(q.size());
  std::vector<MutationSequence> out;
  MutationSequence cur;
  std::vector<bool> used(q.size(), false);
  auto rec = [&](auto& self) -> void {
    if (cur.size() == q.size()) {
      out.push_back(cur);
      return;
    }
    for (Vertex v = 1; v <= n; ++v) {
      if (used[static_cast<std::size_t>(v - 1)]) continue;
      bool is_source = true;
      for (Vertex u = 1; u <= n && is_source; ++u)
        if (!used[static_cast<std::size_t>(u - 1)] && q.arrows(u, v) > Int(0)) is_source = false;
      if (!is_source) continue;
      used[static_cast<std::size_t>(v - 1)] = true;
      cur.push_back(v);
      self(self);
      cur.pop_back();
      used[static_cast<std::size_t>(v - 1)] = false;
    }
  };
  rec(rec);
  return out;
}

}  // namespace greenseq
