#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>
#include <vector>

#include "greenseq/error.hpp"
#include "greenseq/integer.hpp"

namespace greenseq {

/// Vertices are numbered 1..n in every public interface.
using Vertex = int;

/// Dense row-major square matrix, 0-based. Used for exchange and c-matrices.
template <MatrixInteger Int>
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t n) : n_(n), data_(n * n, Int(0)) {}

  static SquareMatrix identity(std::size_t n) {
    SquareMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Int(1);
    return m;
  }

  std::size_t size() const noexcept { return n_; }

  Int& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  std::vector<Int> row(std::size_t i) const {
    return std::vector<Int>(data_.begin() + static_cast<std::ptrdiff_t>(i * n_),
                            data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * n_));
  }

  std::vector<std::vector<Int>> rows() const {
    std::vector<std::vector<Int>> out;
    out.reserve(n_);
    for (std::size_t i = 0; i < n_; ++i) out.push_back(row(i));
    return out;
  }

  bool is_skew_symmetric() const {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i; j < n_; ++j)
        if (!((*this)(i, j) == -(*this)(j, i))) return false;
    return true;
  }

  friend bool operator==(const SquareMatrix& a, const SquareMatrix& b) {
    return a.n_ == b.n_ && a.data_ == b.data_;
  }
  friend bool operator<(const SquareMatrix& a, const SquareMatrix& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    return a.data_ < b.data_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Int> data_;
};

/// A quiver without loops or 2-cycles on vertices 1..n, stored as its
/// skew-symmetric exchange matrix: b(i, j) = #arrows i->j minus #arrows j->i.
template <MatrixInteger Int>
class BasicQuiver {
 public:
  using value_type = Int;

  BasicQuiver() = default;

  /// n isolated vertices.
  explicit BasicQuiver(std::size_t n) : b_(n) {
    if (n == 0) throw invalid_quiver("a quiver needs at least one vertex");
  }

  explicit BasicQuiver(SquareMatrix<Int> b) : b_(std::move(b)) {
    if (b_.size() == 0) throw invalid_quiver("a quiver needs at least one vertex");
    if (!b_.is_skew_symmetric())
      throw invalid_quiver("exchange matrix is not skew-symmetric (valued quivers are not supported)");
  }

  static BasicQuiver from_rows(const std::vector<std::vector<Int>>& rows) {
    SquareMatrix<Int> b(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != rows.size()) throw invalid_quiver("exchange matrix is not square");
      for (std::size_t j = 0; j < rows.size(); ++j) b(i, j) = rows[i][j];
    }
    return BasicQuiver(std::move(b));
  }

  std::size_t size() const noexcept { return b_.size(); }

  /// Net number of arrows i -> j (1-based).
  const Int& arrows(Vertex i, Vertex j) const {
    check_vertex(i);
    check_vertex(j);
    return b_(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1));
  }

  /// Adds m arrows i -> j; opposite arrows cancel against existing ones.
  BasicQuiver& add_arrows(Vertex i, Vertex j, const Int& m = Int(1)) {
    check_vertex(i);
    check_vertex(j);
    if (i == j) throw invalid_quiver("loops are not allowed");
    auto& fwd = b_(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1));
    fwd = checked_add(fwd, m);
    b_(static_cast<std::size_t>(j - 1), static_cast<std::size_t>(i - 1)) = checked_neg(fwd);
    return *this;
  }

  const SquareMatrix<Int>& matrix() const noexcept { return b_; }

  bool contains(Vertex v) const noexcept { return v >= 1 && static_cast<std::size_t>(v) <= size(); }

  void check_vertex(Vertex v) const {
    if (!contains(v))
      throw invalid_vertex("vertex " + std::to_string(v) + " out of range 1.." + std::to_string(size()));
  }

  friend bool operator==(const BasicQuiver& a, const BasicQuiver& b) { return a.b_ == b.b_; }

 private:
  SquareMatrix<Int> b_;
};

using Quiver = BasicQuiver<std::int64_t>;

/// Entry (i, j) after mutating at k, for i, j != k. Also applied to the
/// frozen block of a framed state.
template <MatrixInteger Int>
Int mutated_entry(const Int& b_ij, const Int& b_ik, const Int& b_kj) {
  Int prod = checked_mul(b_ik, b_kj);
  if (!(prod > Int(0))) return b_ij;
  return b_ik > Int(0) ? checked_add(b_ij, prod) : checked_add(b_ij, checked_neg(prod));
}

template <MatrixInteger Int>
BasicQuiver<Int> mutate(const BasicQuiver<Int>& q, Vertex k) {
  q.check_vertex(k);
  const auto& b = q.matrix();
  const std::size_t n = q.size();
  const std::size_t kk = static_cast<std::size_t>(k - 1);
  SquareMatrix<Int> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == kk || j == kk)
        out(i, j) = checked_neg(b(i, j));
      else
        out(i, j) = mutated_entry(b(i, j), b(i, kk), b(kk, j));
    }
  }
  return BasicQuiver<Int>(std::move(out));
}

template <MatrixInteger Int>
BasicQuiver<Int> mutate(const BasicQuiver<Int>& q, const std::vector<Vertex>& seq) {
  BasicQuiver<Int> r = q;
  for (Vertex k : seq) r = mutate(r, k);
  return r;
}

/// A full subquiver together with the original label of each new vertex
/// (`original[i-1]` is the old name of new vertex i).
template <MatrixInteger Int>
struct Subquiver {
  BasicQuiver<Int> quiver;
  std::vector<Vertex> original;
};

template <MatrixInteger Int>
Subquiver<Int> full_subquiver(const BasicQuiver<Int>& q, std::vector<Vertex> keep) {
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  if (keep.empty()) throw invalid_vertex("full_subquiver: vertex set is empty");
  for (Vertex v : keep) q.check_vertex(v);
  SquareMatrix<Int> b(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = 0; j < keep.size(); ++j) b(i, j) = q.arrows(keep[i], keep[j]);
  return {BasicQuiver<Int>(std::move(b)), keep};
}

template <MatrixInteger Int>
struct Arrow {
  Vertex source;
  Vertex target;
  Int multiplicity = Int(1);
};

/// Glues q1 (vertices 1..n1) and q2 (vertices n1+1..n1+n2). Cross arrows use
/// these global labels and must all point from q1 into q2.
template <MatrixInteger Int>
BasicQuiver<Int> triangular_extension(const BasicQuiver<Int>& q1, const BasicQuiver<Int>& q2,
                                      const std::vector<Arrow<Int>>& cross) {
  const auto n1 = static_cast<Vertex>(q1.size());
  const auto n2 = static_cast<Vertex>(q2.size());
  BasicQuiver<Int> out(static_cast<std::size_t>(n1 + n2));
  for (Vertex i = 1; i <= n1; ++i)
    for (Vertex j = i + 1; j <= n1; ++j) out.add_arrows(i, j, q1.arrows(i, j));
  for (Vertex i = 1; i <= n2; ++i)
    for (Vertex j = i + 1; j <= n2; ++j) out.add_arrows(n1 + i, n1 + j, q2.arrows(i, j));
  for (const auto& a : cross) {
    if (!(a.source >= 1 && a.source <= n1 && a.target > n1 && a.target <= n1 + n2))
      throw invalid_quiver("cross arrow " + std::to_string(a.source) + "->" + std::to_string(a.target) +
                           " does not point from the first quiver into the second");
    if (!(a.multiplicity > Int(0))) throw invalid_quiver("cross arrow multiplicity must be positive");
    out.add_arrows(a.source, a.target, a.multiplicity);
  }
  return out;
}

/// A bijection on {1..n}; image[i-1] = sigma(i).
struct Permutation {
  std::vector<Vertex> image;

  static Permutation identity(std::size_t n) {
    Permutation p;
    p.image.resize(n);
    std::iota(p.image.begin(), p.image.end(), 1);
    return p;
  }

  std::size_t size() const noexcept { return image.size(); }
  Vertex operator()(Vertex i) const { return image.at(static_cast<std::size_t>(i - 1)); }

  bool is_valid() const {
    std::vector<bool> seen(image.size(), false);
    for (Vertex v : image) {
      if (v < 1 || static_cast<std::size_t>(v) > image.size() || seen[static_cast<std::size_t>(v - 1)])
        return false;
      seen[static_cast<std::size_t>(v - 1)] = true;
    }
    return true;
  }

  bool is_identity() const { return *this == identity(image.size()); }

  Permutation inverse() const {
    Permutation p;
    p.image.resize(image.size());
    for (std::size_t i = 0; i < image.size(); ++i) p.image[static_cast<std::size_t>(image[i] - 1)] = static_cast<Vertex>(i + 1);
    return p;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const Permutation& p) {
  os << '[';
  for (std::size_t i = 0; i < p.image.size(); ++i) os << (i ? "," : "") << p.image[i];
  return os << ']';
}

// Standard families.
namespace quivers {

/// Linearly oriented A_n: 1 -> 2 -> ... -> n.
inline Quiver linear_a(std::size_t n) {
  Quiver q(n);
  for (Vertex i = 1; static_cast<std::size_t>(i) < n; ++i) q.add_arrows(i, i + 1);
  return q;
}

/// Q_{a,b,c}: a arrows 1->2, b arrows 2->3, c arrows 3->1.
inline Quiver cyclic_triangle(std::int64_t a, std::int64_t b, std::int64_t c) {
  Quiver q(3);
  q.add_arrows(1, 2, a).add_arrows(2, 3, b).add_arrows(3, 1, c);
  return q;
}

}  // namespace quivers

}  // namespace greenseq
