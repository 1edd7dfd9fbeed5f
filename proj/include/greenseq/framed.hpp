#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "greenseq/quiver.hpp"

namespace greenseq {

/// Mutable vertices named in mutation order, 1-based.
using MutationSequence = std::vector<Vertex>;

/// c-vector of a mutable vertex: net arrows from the vertex to each frozen
/// vertex j'. Sign-coherent, so `sign` is +1 (green) or -1 (red).
template <MatrixInteger Int>
struct CVector {
  std::vector<Int> entries;
  int sign = 1;

  bool green() const noexcept { return sign > 0; }
  bool red() const noexcept { return sign < 0; }

  /// True if every nonzero entry sits at a 1-based index listed in `support`.
  bool supported_on(const std::vector<Vertex>& support) const {
    for (std::size_t j = 0; j < entries.size(); ++j) {
      if (entries[j] == Int(0)) continue;
      if (std::find(support.begin(), support.end(), static_cast<Vertex>(j + 1)) == support.end()) return false;
    }
    return true;
  }

  friend bool operator==(const CVector&, const CVector&) = default;
};

/// One replayed mutation: the vertex, whether it was green when mutated, and
/// its c-vector just before the mutation.
template <MatrixInteger Int>
struct Step {
  Vertex vertex = 0;
  bool green = true;
  CVector<Int> c;
};

namespace detail {

template <MatrixInteger Int>
int row_sign(const SquareMatrix<Int>& m, std::size_t i) {
  bool pos = false, neg = false;
  for (std::size_t j = 0; j < m.size(); ++j) {
    if (m(i, j) > Int(0)) pos = true;
    if (m(i, j) < Int(0)) neg = true;
  }
  if (pos && !neg) return 1;
  if (neg && !pos) return -1;
  return 0;
}

}  // namespace detail

/// The framed quiver after a sequence of mutations at non-frozen vertices.
///
/// `principal()` is the exchange matrix among mutable vertices and
/// `cmat()(i, j)` counts net arrows i -> j' (0-based storage), so row i is the
/// c-vector of vertex i+1. Frozen-to-frozen arrows are never tracked.
template <MatrixInteger Int>
class BasicFramedState {
 public:
  BasicFramedState() = default;

  explicit BasicFramedState(BasicQuiver<Int> origin)
      : origin_(std::move(origin)),
        principal_(origin_),
        cmat_(SquareMatrix<Int>::identity(origin_.size())) {}

  std::size_t size() const noexcept { return origin_.size(); }
  const BasicQuiver<Int>& origin() const noexcept { return origin_; }
  const BasicQuiver<Int>& principal() const noexcept { return principal_; }
  const SquareMatrix<Int>& cmat() const noexcept { return cmat_; }
  const std::vector<Step<Int>>& history() const noexcept { return history_; }

  MutationSequence sequence() const {
    MutationSequence s;
    s.reserve(history_.size());
    for (const auto& st : history_) s.push_back(st.vertex);
    return s;
  }

  CVector<Int> c_vector(Vertex i) const {
    principal_.check_vertex(i);
    const auto r = static_cast<std::size_t>(i - 1);
    const int s = detail::row_sign(cmat_, r);
    if (s == 0) throw sign_coherence_violation("c-vector of vertex " + std::to_string(i) + " is not sign-coherent");
    return {cmat_.row(r), s};
  }

  bool is_green(Vertex i) const { return c_vector(i).green(); }
  bool is_red(Vertex i) const { return c_vector(i).red(); }

  bool is_all_red() const {
    for (Vertex i = 1; static_cast<std::size_t>(i) <= size(); ++i)
      if (!is_red(i)) return false;
    return true;
  }

  std::vector<Vertex> green_vertices() const {
    std::vector<Vertex> out;
    for (Vertex i = 1; static_cast<std::size_t>(i) <= size(); ++i)
      if (is_green(i)) out.push_back(i);
    return out;
  }

  /// Mutation at a mutable vertex k of the framed quiver.
  BasicFramedState mutated(Vertex k) const {
    principal_.check_vertex(k);
    const std::size_t n = size();
    const auto kk = static_cast<std::size_t>(k - 1);
    const auto& b = principal_.matrix();

    BasicFramedState next;
    next.origin_ = origin_;
    next.history_ = history_;
    next.history_.push_back({k, false, c_vector(k)});
    next.history_.back().green = next.history_.back().c.green();
    next.principal_ = mutate(principal_, k);
    next.cmat_ = SquareMatrix<Int>(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i == kk)
          next.cmat_(i, j) = checked_neg(cmat_(i, j));
        else
          next.cmat_(i, j) = mutated_entry(cmat_(i, j), b(i, kk), cmat_(kk, j));
      }
    }
    next.assert_sign_coherent();
    return next;
  }

  /// Equal matrices; history is ignored.
  bool same_position(const BasicFramedState& o) const {
    return principal_ == o.principal_ && cmat_ == o.cmat_;
  }

 private:
  void assert_sign_coherent() const {
    for (std::size_t i = 0; i < size(); ++i)
      if (detail::row_sign(cmat_, i) == 0) {
        std::string seq;
        for (const auto& st : history_) seq += (seq.empty() ? "" : ",") + std::to_string(st.vertex);
        throw sign_coherence_violation("row " + std::to_string(i + 1) + " of the c-matrix lost sign coherence after " + seq);
      }
  }

  BasicQuiver<Int> origin_;
  BasicQuiver<Int> principal_;
  SquareMatrix<Int> cmat_;
  std::vector<Step<Int>> history_;
};

using FramedState = BasicFramedState<std::int64_t>;

template <MatrixInteger Int>
BasicFramedState<Int> frame(const BasicQuiver<Int>& q) {
  return BasicFramedState<Int>(q);
}

template <MatrixInteger Int>
BasicFramedState<Int> mutate_framed(const BasicFramedState<Int>& s, Vertex k) {
  return s.mutated(k);
}

template <MatrixInteger Int>
BasicFramedState<Int> mutate_framed(BasicFramedState<Int> s, const MutationSequence& seq) {
  for (Vertex k : seq) s = s.mutated(k);
  return s;
}

template <MatrixInteger Int>
CVector<Int> c_vector(const BasicFramedState<Int>& s, Vertex i) {
  return s.c_vector(i);
}

template <MatrixInteger Int>
bool is_green(const BasicFramedState<Int>& s, Vertex i) {
  return s.is_green(i);
}

template <MatrixInteger Int>
bool is_red(const BasicFramedState<Int>& s, Vertex i) {
  return s.is_red(i);
}

template <MatrixInteger Int>
bool is_all_red(const BasicFramedState<Int>& s) {
  return s.is_all_red();
}

/// The permutation sigma of a frozen isomorphism from `s` to the coframed
/// quiver: c-matrix equal to -P_sigma and principal(i, j) = b(sigma i, sigma j).
template <MatrixInteger Int>
std::optional<Permutation> try_extract_permutation(const BasicFramedState<Int>& s) {
  const std::size_t n = s.size();
  Permutation sigma;
  sigma.image.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Int& c = s.cmat()(i, j);
      if (c == Int(0)) continue;
      if (!(c == Int(-1)) || sigma.image[i] != 0) return std::nullopt;
      sigma.image[i] = static_cast<Vertex>(j + 1);
    }
    if (sigma.image[i] == 0) return std::nullopt;
  }
  if (!sigma.is_valid()) return std::nullopt;
  for (Vertex i = 1; static_cast<std::size_t>(i) <= n; ++i)
    for (Vertex j = 1; static_cast<std::size_t>(j) <= n; ++j)
      if (!(s.principal().arrows(i, j) == s.origin().arrows(sigma(i), sigma(j)))) return std::nullopt;
  return sigma;
}

template <MatrixInteger Int>
Permutation extract_permutation(const BasicFramedState<Int>& s) {
  if (auto p = try_extract_permutation(s)) return *p;
  throw not_coframed("framed state is not frozen-isomorphic to the coframed quiver");
}

}  // namespace greenseq
