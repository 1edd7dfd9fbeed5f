#pragma once

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "greenseq/bricks.hpp"
#include "greenseq/io.hpp"
#include "greenseq/qseries.hpp"
#include "greenseq/search.hpp"
#include "greenseq/transforms.hpp"

namespace greenseq::cli {

enum ExitCode : int { ok = 0, negative = 1, usage = 2 };

/// Runs the explorer HTTP service; installed by the executable so that the
/// library header stays free of the HTTP dependency.
using ServeHook = std::function<int(const std::string& host, int port, std::ostream& out)>;

namespace detail {

inline std::string read_input(const std::string& path) {
  if (path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw error("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct QuiverInput {
  Quiver quiver;
  json document;  // whole file, for an embedded "sequence"
};

inline QuiverInput load_quiver(const std::string& path) {
  QuiverInput in;
  const auto text = read_input(path);
  try {
    in.document = json::parse(text);
  } catch (const json::exception& e) {
    throw invalid_quiver("'" + path + "' is not valid JSON: " + e.what());
  }
  in.quiver = quiver_from_json(in.document);
  return in;
}

inline std::vector<Vertex> parse_vertex_list(const std::string& s) { return parse_sequence(s); }

inline std::string show_vector(const std::vector<std::int64_t>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + ")";
}

inline std::string show_quiver(const Quiver& q) {
  std::string out = std::to_string(q.size()) + " vertices;";
  bool any = false;
  for (Vertex i = 1; static_cast<std::size_t>(i) <= q.size(); ++i)
    for (Vertex j = 1; static_cast<std::size_t>(j) <= q.size(); ++j)
      if (q.arrows(i, j) > 0) {
        out += " " + std::to_string(i) + "->" + std::to_string(j);
        if (q.arrows(i, j) > 1) out += " x" + std::to_string(q.arrows(i, j));
        any = true;
      }
  if (!any) out += " no arrows";
  return out;
}

inline json report_to_json(const SearchReport& r) {
  json seqs = json::array();
  for (const auto& s : r.sequences) seqs.push_back(format_sequence(s));
  return {{"sequences", seqs}, {"count", r.count}, {"truncated", r.truncated}, {"states_visited", r.states_visited}};
}

inline unsigned default_threads() {
  if (const char* env = std::getenv("GREENSEQ_THREADS")) {
    try {
      const int t = std::stoi(env);
      if (t >= 1) return static_cast<unsigned>(t);
    } catch (const std::exception&) {
    }
  }
  return 1;
}

}  // namespace detail

/// Entry point for the `greenseq` executable. Exit status: 0 success/true,
/// 1 verification false or nothing found, 2 usage or input error.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
               const ServeHook& serve = {}) {
  CLI::App app{"Quiver mutation, maximal green sequences and quantum dilogarithm identities", "greenseq"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  unsigned threads = detail::default_threads();
  app.add_flag("--json", as_json, "Machine-readable JSON output");
  app.add_option("--threads", threads, "Worker threads for search (default $GREENSEQ_THREADS or 1)")
      ->check(CLI::PositiveNumber);

  std::string quiver_path, seq_text, seq1_text, seq2_text, keep_text, mode_text = "maximal-green", host = "127.0.0.1";
  Vertex at = 0;
  std::size_t max_len = 10;
  int degree = 6, n = 0, port = 8080;
  bool shortest = false, count_only = false, reddening = false, dedup = false, cross = false;

  std::function<int()> action;

  auto* mutate_cmd = app.add_subcommand("mutate", "Mutate a quiver at a vertex");
  mutate_cmd->add_option("--quiver", quiver_path, "Quiver JSON file ('-' for stdin)")->required();
  mutate_cmd->add_option("--at", at, "Vertex (1-based)")->required();
  mutate_cmd->callback([&] {
    action = [&] {
      const auto q = mutate(detail::load_quiver(quiver_path).quiver, at);
      if (as_json)
        out << quiver_to_json(q).dump() << '\n';
      else
        out << detail::show_quiver(q) << '\n';
      return ok;
    };
  });

  auto* search_cmd = app.add_subcommand("search", "Search for maximal green (or reddening) sequences");
  search_cmd->add_option("--quiver", quiver_path, "Quiver JSON file")->required();
  search_cmd->add_option("--max-len", max_len, "Depth bound")->check(CLI::PositiveNumber);
  auto* shortest_flag = search_cmd->add_flag("--shortest", shortest, "Breadth-first search for one shortest sequence");
  search_cmd->add_flag("--count", count_only, "Count only")->excludes(shortest_flag);
  search_cmd->add_flag("--reddening", reddening, "Search reddening sequences (experimental; branches on every vertex)")
      ->excludes(shortest_flag);
  search_cmd->add_flag("--dedup", dedup, "Memoize visited framed states");
  search_cmd->callback([&] {
    action = [&] {
      const auto q = detail::load_quiver(quiver_path).quiver;
      SearchReport r;
      if (shortest) {
        r = search_shortest(q, max_len);
      } else {
        SearchConfig cfg;
        cfg.max_len = max_len;
        cfg.mode = reddening ? Mode::reddening : Mode::maximal_green;
        cfg.strategy = count_only ? Strategy::count_only : Strategy::dfs_all;
        cfg.dedup = dedup || count_only;
        cfg.threads = threads;
        r = enumerate_mgs(q, cfg);
      }
      if (as_json) {
        out << detail::report_to_json(r).dump() << '\n';
      } else {
        for (const auto& s : r.sequences) out << format_sequence(s) << '\n';
        out << "count: " << r.count << "  truncated: " << (r.truncated ? "yes" : "no")
            << "  states visited: " << r.states_visited << '\n';
      }
      return r.count > 0 ? ok : negative;
    };
  });

  auto* verify_cmd = app.add_subcommand("verify", "Check a mutation sequence");
  verify_cmd->add_option("--quiver", quiver_path, "Quiver JSON file (may embed \"sequence\")")->required();
  verify_cmd->add_option("--seq", seq_text, "Comma-separated vertices, e.g. 2,1,2");
  verify_cmd->add_option("--mode", mode_text, "green | maximal-green | reddening");
  verify_cmd->callback([&] {
    action = [&] {
      const auto in = detail::load_quiver(quiver_path);
      const Mode mode = parse_mode(mode_text);
      std::string text = seq_text;
      if (verify_cmd->count("--seq") == 0) {
        if (in.document.contains("sequence"))
          text = in.document.at("sequence").get<std::string>();
        else if (in.document.contains("seq"))
          text = in.document.at("seq").get<std::string>();
        else
          throw error("no --seq given and the input file has no \"sequence\"");
      }
      const auto seq = parse_sequence(text);
      check_sequence(in.quiver, seq);
      const auto r = verify_sequence(in.quiver, seq, mode);
      if (as_json) {
        json steps = json::array();
        for (const auto& st : r.steps) steps.push_back({{"vertex", st.vertex}, {"green", st.green}, {"c_vector", st.c.entries}});
        out << json{{"valid", r.valid},
                    {"mode", to_string(mode)},
                    {"all_red", r.all_red},
                    {"steps", steps},
                    {"permutation", r.permutation ? json(r.permutation->image) : json(nullptr)},
                    {"message", r.message}}
                   .dump()
            << '\n';
      } else {
        for (std::size_t t = 0; t < r.steps.size(); ++t)
          out << "step " << t + 1 << ": mutate " << r.steps[t].vertex << (r.steps[t].green ? " (green)" : " (red)")
              << " c = " << detail::show_vector(r.steps[t].c.entries) << '\n';
        out << (r.valid ? "valid " : "not ") << to_string(mode) << " sequence";
        if (!r.valid) out << ": " << r.message;
        out << '\n';
        if (r.permutation) out << "permutation: " << *r.permutation << '\n';
      }
      return r.valid ? ok : negative;
    };
  });

  auto* dt_cmd = app.add_subcommand("dt", "Ordered quantum dilogarithm product along a sequence");
  dt_cmd->add_option("--quiver", quiver_path, "Quiver JSON file")->required();
  dt_cmd->add_option("--seq", seq_text, "Comma-separated vertices")->required();
  dt_cmd->add_option("--degree", degree, "Truncation order (total y-degree)")->check(CLI::NonNegativeNumber);
  dt_cmd->callback([&] {
    action = [&] {
      const auto q = detail::load_quiver(quiver_path).quiver;
      const auto s = dt_product(q, parse_sequence(seq_text), degree);
      if (as_json) {
        out << series_to_json(s).dump() << '\n';
      } else {
        for (const auto& [alpha, c] : s.terms()) {
          out << "y^(";
          for (std::size_t i = 0; i < alpha.size(); ++i) out << (i ? "," : "") << alpha[i];
          out << "): " << c << '\n';
        }
      }
      return ok;
    };
  });

  auto* id_cmd = app.add_subcommand("identity", "Compare the products of two sequences exactly");
  id_cmd->add_option("--quiver", quiver_path, "Quiver JSON file")->required();
  id_cmd->add_option("--seq1", seq1_text, "First sequence")->required();
  id_cmd->add_option("--seq2", seq2_text, "Second sequence")->required();
  id_cmd->add_option("--degree", degree, "Truncation order")->check(CLI::NonNegativeNumber);
  id_cmd->callback([&] {
    action = [&] {
      const auto q = detail::load_quiver(quiver_path).quiver;
      const auto a = dt_product(q, parse_sequence(seq1_text), degree);
      const auto b = dt_product(q, parse_sequence(seq2_text), degree);
      const bool equal = identity_check(a, b);
      if (as_json)
        out << json{{"equal", equal}, {"degree", degree}, {"terms", a.terms().size()}}.dump() << '\n';
      else
        out << (equal ? "identity holds" : "identity fails") << " up to total degree " << degree << '\n';
      return equal ? ok : negative;
    };
  });

  auto* restrict_cmd = app.add_subcommand("restrict", "Restrict a maximal green sequence to a full subquiver");
  restrict_cmd->add_option("--quiver", quiver_path, "Quiver JSON file")->required();
  restrict_cmd->add_option("--seq", seq_text, "Maximal green sequence")->required();
  restrict_cmd->add_option("--keep", keep_text, "Vertices to keep, e.g. 1,3")->required();
  restrict_cmd->callback([&] {
    action = [&] {
      const auto q = detail::load_quiver(quiver_path).quiver;
      const auto seq = parse_sequence(seq_text);
      check_sequence(q, seq);
      const auto r = restrict_mgs(q, seq, detail::parse_vertex_list(keep_text));
      if (as_json) {
        out << json{{"quiver", quiver_to_json(r.sub.quiver)},
                    {"sequence", format_sequence(r.sequence)},
                    {"original", r.sub.original}}
                   .dump()
            << '\n';
      } else {
        out << "subquiver: " << detail::show_quiver(r.sub.quiver) << '\n';
        out << "vertices (original labels):";
        for (Vertex v : r.sub.original) out << ' ' << v;
        out << "\nsequence: " << format_sequence(r.sequence) << '\n';
      }
      return ok;
    };
  });

  auto* rotate_cmd = app.add_subcommand("rotate", "Rotate a maximal green or reddening sequence");
  rotate_cmd->add_option("--quiver", quiver_path, "Quiver JSON file")->required();
  rotate_cmd->add_option("--seq", seq_text, "Sequence to rotate")->required();
  rotate_cmd->callback([&] {
    action = [&] {
      const auto q = detail::load_quiver(quiver_path).quiver;
      const auto seq = parse_sequence(seq_text);
      check_sequence(q, seq);
      const auto r = rotate(q, seq);
      if (as_json)
        out << json{{"quiver", quiver_to_json(r.quiver)}, {"sequence", format_sequence(r.sequence)}}.dump() << '\n';
      else
        out << "quiver: " << detail::show_quiver(r.quiver) << "\nsequence: " << format_sequence(r.sequence) << '\n';
      return ok;
    };
  });

  auto* bricks_cmd = app.add_subcommand("bricks", "Maximal forward Hom-orthogonal brick sequences for linear A_n");
  bricks_cmd->add_option("--n", n, "Rank")->required()->check(CLI::Range(1, 6));
  bricks_cmd->add_flag("--cross-validate", cross, "Compare with the c-vectors of all maximal green sequences (n <= 5)");
  bricks_cmd->callback([&] {
    action = [&] {
      if (cross) {
        const auto r = bricks::cross_validation_report(n);
        if (as_json)
          out << json{{"n", n}, {"equal", r.equal}, {"mgs", r.from_mgs.size()}, {"chains", r.from_bricks.size()}}.dump()
              << '\n';
        else
          out << "linear A" << n << ": " << r.from_mgs.size() << " maximal green sequences, " << r.from_bricks.size()
              << " maximal brick sequences, " << (r.equal ? "c-vectors match" : "MISMATCH") << '\n';
        return r.equal ? ok : negative;
      }
      const auto chains = bricks::enumerate_maximal_chains(n);
      if (as_json) {
        json all = json::array();
        for (const auto& c : chains) {
          json seq = json::array();
          for (const auto& x : c) seq.push_back({x.a, x.b});
          all.push_back(std::move(seq));
        }
        out << all.dump() << '\n';
      } else {
        for (const auto& c : chains) {
          for (std::size_t i = 0; i < c.size(); ++i) out << (i ? " " : "") << '[' << c[i].a << ',' << c[i].b << ']';
          out << '\n';
        }
        out << chains.size() << " maximal sequences\n";
      }
      return ok;
    };
  });

  auto* serve_cmd = app.add_subcommand("serve", "Run the explorer HTTP service");
  serve_cmd->add_option("--port", port, "TCP port")->check(CLI::Range(1, 65535));
  serve_cmd->add_option("--host", host, "Bind address");
  serve_cmd->callback([&] {
    action = [&] {
      if (!serve) throw error("this build has no HTTP service");
      return serve(host, port, out);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return ok;
    }
    err << "error: " << e.what() << '\n';
    return usage;
  }

  try {
    return action();
  } catch (const error& e) {
    err << "error: " << e.what() << '\n';
    return usage;
  } catch (const json::exception& e) {
    err << "error: malformed input: " << e.what() << '\n';
    return usage;
  }
}

}  // namespace greenseq::cli
