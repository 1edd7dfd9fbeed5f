#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "greenseq/search.hpp"

namespace greenseq::bricks {

/// Interval module [a, b] over the path algebra of 1 -> 2 -> ... -> n, taken
/// as a right module (a representation of n -> ... -> 1). Every such module
/// is a brick; its dimension vector is e_a + ... + e_b.
struct Interval {
  int a = 1;
  int b = 1;

  bool valid(int n) const noexcept { return 1 <= a && a <= b && b <= n; }

  std::vector<int> dimension_vector(int n) const {
    std::vector<int> d(static_cast<std::size_t>(n), 0);
    for (int v = a; v <= b; ++v) d[static_cast<std::size_t>(v - 1)] = 1;
    return d;
  }

  friend auto operator<=>(const Interval&, const Interval&) = default;
};

using BrickSequence = std::vector<Interval>;

/// Hom(src, tgt) != 0. Submodules of [a, b] are the [a, c] and quotients the
/// [c, b]; a nonzero map identifies a quotient of src with a submodule of tgt.
inline bool hom_nonzero(const Interval& src, const Interval& tgt) {
  return src.a <= tgt.a && tgt.a <= src.b && src.b <= tgt.b;
}

/// All n(n+1)/2 intervals of rank n, ordered by (a, b).
inline std::vector<Interval> all_intervals(int n) {
  std::vector<Interval> out;
  for (int a = 1; a <= n; ++a)
    for (int b = a; b <= n; ++b) out.push_back({a, b});
  return out;
}

/// Hom(seq[i], seq[j]) = 0 for all i < j.
inline bool is_forward_orthogonal(const BrickSequence& seq) {
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size(); ++j)
      if (hom_nonzero(seq[i], seq[j])) return false;
  return true;
}

/// Position at which `x` can be inserted into `seq` keeping forward
/// orthogonality, or -1 if there is none (including when x is already in seq).
inline int insertion_position(const BrickSequence& seq, const Interval& x) {
  for (std::size_t p = 0; p <= seq.size(); ++p) {
    bool ok = true;
    for (std::size_t i = 0; i < seq.size() && ok; ++i)
      ok = i < p ? !hom_nonzero(seq[i], x) : !hom_nonzero(x, seq[i]);
    if (ok) return static_cast<int>(p);
  }
  return -1;
}

/// Forward Hom-orthogonal and not refinable by inserting any further interval.
inline bool is_maximal_forward_orthogonal(const BrickSequence& seq, int n) {
  for (const auto& x : seq)
    if (!x.valid(n)) throw error("interval [" + std::to_string(x.a) + "," + std::to_string(x.b) + "] out of range");
  if (!is_forward_orthogonal(seq)) return false;
  for (const auto& x : all_intervals(n))
    if (insertion_position(seq, x) >= 0) return false;
  return true;
}

/// Every maximal forward Hom-orthogonal sequence of intervals, sorted.
///
/// Depth-first over appends. An interval x that can no longer be appended
/// (some earlier brick maps to it) but still fits somewhere in the prefix
/// must later be blocked by an appended y with Hom(x, y) != 0; branches where
/// no appendable y can do that are cut. At a leaf nothing is appendable and
/// nothing fits, so every leaf is maximal.
inline std::vector<BrickSequence> enumerate_maximal_chains(int n) {
  if (n < 1 || n > 6) throw error("enumerate_maximal_chains supports 1 <= n <= 6");
  const auto intervals = all_intervals(n);
  const std::size_t m = intervals.size();  // <= 21
  using Mask = std::uint32_t;
  std::vector<Mask> out_mask(m, 0), in_mask(m, 0);  // y with Hom(x, y) != 0, resp. Hom(y, x) != 0
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y)
      if (x != y && hom_nonzero(intervals[x], intervals[y])) {
        out_mask[x] |= Mask{1} << y;
        in_mask[y] |= Mask{1} << x;
      }

  std::vector<BrickSequence> result;
  std::vector<std::size_t> cur;
  Mask used = 0;
  auto fits_in_prefix = [&](std::size_t x) {
    // Insertable at p iff no prefix brick before p maps to x and none at or after p receives from x.
    std::size_t first_in = cur.size();
    for (std::size_t i = 0; i < cur.size(); ++i)
      if (in_mask[x] >> cur[i] & 1) {
        first_in = i;
        break;
      }
    for (std::size_t i = cur.size(); i-- > first_in;)
      if (out_mask[x] >> cur[i] & 1) return false;
    return true;
  };
  auto rec = [&](auto& self) -> void {
    Mask blocked = 0;
    for (std::size_t i : cur) blocked |= out_mask[i];
    const Mask live = ~used & ~blocked & ((Mask{1} << m) - 1);
    for (std::size_t x = 0; x < m; ++x) {
      const Mask bit = Mask{1} << x;
      if ((used & bit) || !(blocked & bit)) continue;
      if ((out_mask[x] & live) == 0 && fits_in_prefix(x)) return;
    }
    if (live == 0) {
      BrickSequence seq;
      for (std::size_t i : cur) seq.push_back(intervals[i]);
      result.push_back(std::move(seq));
      return;
    }
    for (std::size_t x = 0; x < m; ++x) {
      if (!(live >> x & 1)) continue;
      used |= Mask{1} << x;
      cur.push_back(x);
      self(self);
      cur.pop_back();
      used &= ~(Mask{1} << x);
    }
  };
  rec(rec);
  std::sort(result.begin(), result.end());
  return result;
}

using VectorSequence = std::vector<std::vector<int>>;

struct CrossValidation {
  std::vector<VectorSequence> from_mgs;     // c-vector sequences, sorted
  std::vector<VectorSequence> from_bricks;  // dimension-vector sequences, sorted
  bool equal = false;
};

/// Compares the c-vector sequences of all maximal green sequences of linear
/// A_n with the dimension-vector sequences of all maximal forward
/// Hom-orthogonal brick sequences.
inline CrossValidation cross_validation_report(int n) {
  if (n < 1 || n > 5) throw error("cross_validate supports 1 <= n <= 5");
  CrossValidation r;

  SearchConfig cfg;
  cfg.max_len = static_cast<std::size_t>(n * (n + 1) / 2 + 1);
  const auto q = quivers::linear_a(static_cast<std::size_t>(n));
  const auto found = enumerate_mgs(q, cfg);
  if (found.truncated) throw search_truncated("MGS search for linear A" + std::to_string(n) + " was truncated");
  for (const auto& seq : found.sequences) {
    const auto rep = verify_sequence(q, seq, Mode::maximal_green);
    VectorSequence vs;
    for (const auto& st : rep.steps) vs.emplace_back(st.c.entries.begin(), st.c.entries.end());
    r.from_mgs.push_back(std::move(vs));
  }

  for (const auto& chain : enumerate_maximal_chains(n)) {
    VectorSequence vs;
    for (const auto& x : chain) vs.push_back(x.dimension_vector(n));
    r.from_bricks.push_back(std::move(vs));
  }

  std::sort(r.from_mgs.begin(), r.from_mgs.end());
  std::sort(r.from_bricks.begin(), r.from_bricks.end());
  r.equal = r.from_mgs == r.from_bricks;
  return r;
}

inline bool cross_validate(int n) { return cross_validation_report(n).equal; }

}  // namespace greenseq::bricks
