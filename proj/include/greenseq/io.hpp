#pragma once

#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "greenseq/framed.hpp"

namespace greenseq {

using json = nlohmann::json;

/// "2,1,2" -> {2,1,2}. Whitespace around entries is ignored; "" is the empty sequence.
inline MutationSequence parse_sequence(std::string_view text) {
  MutationSequence out;
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  if (trim(text).empty()) return out;
  while (true) {
    const auto comma = text.find(',');
    const auto item = trim(text.substr(0, comma));
    Vertex v = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size())
      throw invalid_sequence("malformed mutation sequence entry '" + std::string(item) + "'");
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

inline std::string format_sequence(const MutationSequence& seq) {
  std::string out;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(seq[i]);
  }
  return out;
}

inline void check_sequence(const Quiver& q, const MutationSequence& seq) {
  for (Vertex v : seq)
    if (!q.contains(v))
      throw invalid_vertex("sequence vertex " + std::to_string(v) + " out of range 1.." + std::to_string(q.size()));
}

/// Accepts {"vertices": n, "arrows": [[i, j, m], ...]}, {"b_matrix": [[...]]},
/// or either one wrapped as {"quiver": {...}}.
inline Quiver quiver_from_json(const json& j) {
  if (!j.is_object()) throw invalid_quiver("quiver JSON must be an object");
  if (j.contains("quiver")) return quiver_from_json(j.at("quiver"));
  try {
    if (j.contains("b_matrix")) {
      const auto& rows = j.at("b_matrix");
      if (!rows.is_array() || rows.empty()) throw invalid_quiver("b_matrix must be a nonempty array of rows");
      std::vector<std::vector<std::int64_t>> b;
      for (const auto& r : rows) {
        if (!r.is_array()) throw invalid_quiver("b_matrix rows must be arrays");
        std::vector<std::int64_t> row;
        for (const auto& x : r) {
          if (!x.is_number_integer()) throw invalid_quiver("b_matrix entries must be integers");
          row.push_back(x.get<std::int64_t>());
        }
        b.push_back(std::move(row));
      }
      return Quiver::from_rows(b);
    }
    if (!j.contains("vertices")) throw invalid_quiver("quiver JSON needs \"vertices\" or \"b_matrix\"");
    const auto& nv = j.at("vertices");
    if (!nv.is_number_integer() || nv.get<std::int64_t>() < 1)
      throw invalid_quiver("\"vertices\" must be a positive integer");
    Quiver q(static_cast<std::size_t>(nv.get<std::int64_t>()));
    if (j.contains("arrows")) {
      const auto& arrows = j.at("arrows");
      if (!arrows.is_array()) throw invalid_quiver("\"arrows\" must be an array");
      for (const auto& a : arrows) {
        if (!a.is_array() || a.size() < 2 || a.size() > 3) throw invalid_quiver("arrow entries are [i, j, m]");
        for (const auto& x : a)
          if (!x.is_number_integer()) throw invalid_quiver("arrow entries must be integers");
        const auto i = a[0].get<std::int64_t>();
        const auto t = a[1].get<std::int64_t>();
        const std::int64_t m = a.size() == 3 ? a[2].get<std::int64_t>() : 1;
        if (m <= 0) throw invalid_quiver("arrow multiplicity must be positive");
        if (i < 1 || t < 1 || static_cast<std::size_t>(i) > q.size() || static_cast<std::size_t>(t) > q.size())
          throw invalid_quiver("arrow endpoint out of range");
        q.add_arrows(static_cast<Vertex>(i), static_cast<Vertex>(t), m);
      }
    }
    return q;
  } catch (const json::exception& e) {
    throw invalid_quiver(std::string("malformed quiver JSON: ") + e.what());
  } catch (const invalid_vertex& e) {
    throw invalid_quiver(e.what());
  }
}

inline Quiver parse_quiver(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw invalid_quiver(std::string("quiver is not valid JSON: ") + e.what());
  }
  return quiver_from_json(j);
}

/// Canonical form: arrows listed by (source, target) in lexicographic order,
/// one entry per ordered pair carrying the net multiplicity.
template <MatrixInteger Int>
json quiver_to_json(const BasicQuiver<Int>& q) {
  json arrows = json::array();
  for (Vertex i = 1; static_cast<std::size_t>(i) <= q.size(); ++i)
    for (Vertex j = 1; static_cast<std::size_t>(j) <= q.size(); ++j)
      if (q.arrows(i, j) > Int(0)) arrows.push_back({i, j, q.arrows(i, j)});
  return {{"vertices", q.size()}, {"arrows", std::move(arrows)}};
}

template <MatrixInteger Int>
json matrix_to_json(const SquareMatrix<Int>& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.size(); ++i) rows.push_back(m.row(i));
  return rows;
}

inline json permutation_to_json(const Permutation& p) { return p.image; }

}  // namespace greenseq
