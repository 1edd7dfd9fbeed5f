#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "greenseq/io.hpp"
#include "greenseq/search.hpp"

namespace greenseq {

template <MatrixInteger Int>
struct Rotation {
  BasicQuiver<Int> quiver;
  MutationSequence sequence;
};

/// Rotation lemma: if (i1, ..., iN) is maximal green (or reddening) for q,
/// then (i2, ..., iN, k) is maximal green (or reddening) for mu_{i1}(q), where
/// k is the target of the arrow leaving i1' at the end of the sequence.
template <MatrixInteger Int>
Rotation<Int> rotate(const BasicQuiver<Int>& q, const MutationSequence& seq) {
  if (seq.empty()) throw invalid_sequence("cannot rotate an empty sequence");
  auto mode = Mode::maximal_green;
  auto check = verify_sequence(q, seq, mode);
  if (!check.valid) {
    mode = Mode::reddening;
    check = verify_sequence(q, seq, mode);
  }
  if (!check.valid) throw invalid_sequence("rotate needs a maximal green or reddening sequence: " + check.message);

  const auto col = static_cast<std::size_t>(seq.front() - 1);
  const auto& cmat = check.final_state.cmat();
  Vertex k = 0;
  for (std::size_t i = 0; i < cmat.size(); ++i) {
    if (cmat(i, col) < Int(0)) {
      if (k != 0) throw std::logic_error("more than one arrow leaves the rotated frozen vertex");
      k = static_cast<Vertex>(i + 1);
    }
  }
  if (k == 0) throw std::logic_error("no arrow leaves the rotated frozen vertex");

  Rotation<Int> out{mutate(q, seq.front()), MutationSequence(seq.begin() + 1, seq.end())};
  out.sequence.push_back(k);
  if (!verify_sequence(out.quiver, out.sequence, mode).valid)
    throw std::logic_error("rotated sequence " + format_sequence(out.sequence) + " does not verify");
  return out;
}

template <MatrixInteger Int>
struct Restriction {
  Subquiver<Int> sub;
  MutationSequence sequence;
  std::vector<std::vector<Int>> c_vectors;  // the filtered, restricted c-vectors
};

/// Restricts a maximal green sequence of q to the full subquiver on `keep`:
/// keep the c-vectors supported on `keep` (in order), restrict them, and
/// realize them on the subquiver by mutating, at each step, the unique green
/// vertex carrying the next c-vector.
template <MatrixInteger Int>
Restriction<Int> restrict_mgs(const BasicQuiver<Int>& q, const MutationSequence& seq, const std::vector<Vertex>& keep) {
  const auto check = verify_sequence(q, seq, Mode::maximal_green);
  if (!check.valid) throw invalid_sequence("restrict_mgs needs a maximal green sequence: " + check.message);

  Restriction<Int> out{full_subquiver(q, keep), {}, {}};
  const auto& kept = out.sub.original;
  for (const auto& st : check.steps) {
    if (!st.c.supported_on(kept)) continue;
    std::vector<Int> r;
    r.reserve(kept.size());
    for (Vertex v : kept) r.push_back(st.c.entries[static_cast<std::size_t>(v - 1)]);
    out.c_vectors.push_back(std::move(r));
  }

  auto s = frame(out.sub.quiver);
  for (const auto& target : out.c_vectors) {
    Vertex match = 0;
    for (Vertex v : s.green_vertices()) {
      if (s.c_vector(v).entries != target) continue;
      if (match != 0)
        throw realization_failure("two green vertices carry the same c-vector while restricting " +
                                  format_sequence(seq));
      match = v;
    }
    if (match == 0)
      throw realization_failure("no green vertex carries the next c-vector while restricting " + format_sequence(seq));
    s = s.mutated(match);
  }
  out.sequence = s.sequence();
  if (!verify_sequence(out.sub.quiver, out.sequence, Mode::maximal_green).valid)
    throw realization_failure("restricted sequence " + format_sequence(out.sequence) + " is not maximal green");
  return out;
}

template <MatrixInteger Int>
struct TriangularExtensionReport {
  BasicQuiver<Int> extension;
  std::optional<MutationSequence> first_part;   // MGS found for q1
  std::optional<MutationSequence> second_part;  // MGS found for q2
  std::optional<MutationSequence> found;        // MGS found for the extension
  // Restrictions of `found` to the two vertex blocks, when found.
  std::optional<MutationSequence> restricted_first;
  std::optional<MutationSequence> restricted_second;
  bool search_truncated = false;
};

/// Empirical check of "the extension has a maximal green sequence iff both
/// parts do", within a depth bound.
template <MatrixInteger Int>
TriangularExtensionReport<Int> check_triangular_extension(const BasicQuiver<Int>& q1, const BasicQuiver<Int>& q2,
                                                          const std::vector<Arrow<Int>>& cross, std::size_t max_len) {
  TriangularExtensionReport<Int> r;
  r.extension = triangular_extension(q1, q2, cross);
  r.first_part = shortest_mgs(q1, max_len);
  r.second_part = shortest_mgs(q2, max_len);
  const auto found = search_shortest(r.extension, max_len);
  r.search_truncated = found.truncated && found.sequences.empty();
  if (!found.sequences.empty()) {
    r.found = found.sequences.front();
    const auto n1 = static_cast<Vertex>(q1.size());
    std::vector<Vertex> block1, block2;
    for (Vertex v = 1; static_cast<std::size_t>(v) <= r.extension.size(); ++v) (v <= n1 ? block1 : block2).push_back(v);
    r.restricted_first = restrict_mgs(r.extension, *r.found, block1).sequence;
    r.restricted_second = restrict_mgs(r.extension, *r.found, block2).sequence;
  }
  return r;
}

}  // namespace greenseq
