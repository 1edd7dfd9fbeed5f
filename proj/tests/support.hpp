#pragma once

// Generators and independent oracles shared by the unit tests and the
// acceptance binary. Nothing here calls into the library's mutation code.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "greenseq/greenseq.hpp"

namespace gs_test {

using greenseq::Quiver;
using greenseq::Vertex;
using Matrix = std::vector<std::vector<std::int64_t>>;

inline Quiver random_quiver(std::mt19937_64& rng, std::size_t n, int bound) {
  std::uniform_int_distribution<int> entry(-bound, bound);
  Quiver q(n);
  for (Vertex i = 1; static_cast<std::size_t>(i) <= n; ++i)
    for (Vertex j = i + 1; static_cast<std::size_t>(j) <= n; ++j) q.add_arrows(i, j, entry(rng));
  return q;
}

/// Acyclic: arrows only go forward in a random vertex order.
inline Quiver random_acyclic_quiver(std::mt19937_64& rng, std::size_t n, int bound) {
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 1);
  std::shuffle(order.begin(), order.end(), rng);
  std::uniform_int_distribution<int> entry(0, bound);
  Quiver q(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (int m = entry(rng)) q.add_arrows(order[a], order[b], m);
  return q;
}

inline std::size_t random_size(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline Matrix to_rows(const Quiver& q) {
  Matrix m(q.size(), std::vector<std::int64_t>(q.size()));
  for (std::size_t i = 0; i < q.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j) m[i][j] = q.matrix()(i, j);
  return m;
}

template <class T>
T oracle_abs(const T& x) {
  return x < T(0) ? T(-x) : x;
}

/// Oracle: mutation of an arbitrary skew-symmetric matrix at k (0-based) in
/// the symmetric form b_ij + (|b_ik| b_kj + b_ik |b_kj|) / 2. Entries are
/// unchecked, so use an arbitrary-precision T where they may grow.
template <class T>
std::vector<std::vector<T>> oracle_mutate(const std::vector<std::vector<T>>& b, std::size_t k) {
  auto out = b;
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (i == k || j == k)
        out[i][j] = -b[i][j];
      else
        out[i][j] = b[i][j] + (oracle_abs(b[i][k]) * b[k][j] + b[i][k] * oracle_abs(b[k][j])) / 2;
    }
  return out;
}

/// Oracle framed quiver as one 2n x 2n matrix: vertices 0..n-1 mutable,
/// n..2n-1 frozen, with one arrow i -> i'.
template <class T>
struct BasicBigFrame {
  std::size_t n;
  std::vector<std::vector<T>> b;

  template <class Int>
  explicit BasicBigFrame(const greenseq::BasicQuiver<Int>& q) : n(q.size()), b(2 * q.size(), std::vector<T>(2 * q.size(), T(0))) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) b[i][j] = T(q.matrix()(i, j));
      b[i][n + i] = T(1);
      b[n + i][i] = T(-1);
    }
  }
  void mutate(Vertex k) { b = oracle_mutate(b, static_cast<std::size_t>(k - 1)); }
  // Net arrows from mutable i to frozen j'.
  std::vector<T> c(Vertex i) const {
    const auto& row = b[static_cast<std::size_t>(i - 1)];
    return {row.begin() + static_cast<std::ptrdiff_t>(n), row.end()};
  }
  // "Not the target of any arrow from a frozen vertex".
  bool green(Vertex i) const {
    for (const auto& x : c(i))
      if (x < T(0)) return false;
    return true;
  }
  bool all_red() const {
    for (Vertex i = 1; static_cast<std::size_t>(i) <= n; ++i)
      for (const auto& x : c(i))
        if (x > T(0)) return false;
    return true;
  }
  // Is this framed quiver the coframed quiver with mutable i relabelled sigma(i)?
  template <class Int>
  bool coframed_under(const greenseq::BasicQuiver<Int>& origin, const std::vector<Vertex>& sigma) const {
    for (std::size_t i = 0; i < n; ++i) {
      const auto si = static_cast<std::size_t>(sigma[i] - 1);
      for (std::size_t j = 0; j < n; ++j) {
        const auto sj = static_cast<std::size_t>(sigma[j] - 1);
        if (b[i][j] != T(origin.matrix()(si, sj))) return false;
        // Coframed: one arrow sigma(i)' -> sigma(i), seen from i.
        if (b[i][n + j] != T(j == si ? -1 : 0)) return false;
      }
    }
    return true;
  }
};

using BigFrame = BasicBigFrame<std::int64_t>;

/// Oracle enumeration of all maximal green sequences of length <= max_len
/// by plain recursion on BigFrame; `nodes` counts framed states visited.
inline void oracle_mgs(const BigFrame& f, std::vector<Vertex>& cur, std::size_t max_len,
                       std::vector<std::vector<Vertex>>& out, bool& truncated, std::uint64_t& nodes) {
  ++nodes;
  if (f.all_red()) {
    out.push_back(cur);
    return;
  }
  for (Vertex k = 1; static_cast<std::size_t>(k) <= f.n; ++k) {
    if (!f.green(k)) continue;
    if (cur.size() == max_len) {
      truncated = true;
      return;
    }
    BigFrame g = f;
    g.mutate(k);
    cur.push_back(k);
    oracle_mgs(g, cur, max_len, out, truncated, nodes);
    cur.pop_back();
  }
}

inline std::vector<std::vector<Vertex>> oracle_all_mgs(const Quiver& q, std::size_t max_len, bool* truncated = nullptr) {
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> cur;
  bool trunc = false;
  std::uint64_t nodes = 0;
  oracle_mgs(BigFrame(q), cur, max_len, out, trunc, nodes);
  std::sort(out.begin(), out.end());
  if (truncated) *truncated = trunc;
  return out;
}

/// Brute-force dim Hom(M, N) for representations of the quiver n -> n-1 -> ... -> 1
/// (right modules over the path algebra of 1 -> ... -> n). An interval [a, b]
/// has k at vertices a..b and identity maps between consecutive ones. The
/// morphism equations N_alpha f_s = f_t M_alpha are solved as a linear system.
inline int oracle_hom_dim(int n, int ma, int mb, int na, int nb) {
  auto dim = [](int a, int b, int v) { return a <= v && v <= b ? 1 : 0; };
  // Unknowns: f_v is a dN(v) x dM(v) matrix.
  std::vector<int> offset(static_cast<std::size_t>(n) + 2, 0);
  int unknowns = 0;
  for (int v = 1; v <= n; ++v) {
    offset[static_cast<std::size_t>(v)] = unknowns;
    unknowns += dim(na, nb, v) * dim(ma, mb, v);
  }
  if (unknowns == 0) return 0;
  std::vector<std::vector<double>> rows;
  for (int s = 2; s <= n; ++s) {
    const int t = s - 1;  // arrow s -> t
    const int dMs = dim(ma, mb, s), dMt = dim(ma, mb, t), dNs = dim(na, nb, s), dNt = dim(na, nb, t);
    // Structure maps are identities when both ends are nonzero (1x1 here).
    const double m_alpha = (dMs && dMt) ? 1.0 : 0.0;
    const double n_alpha = (dNs && dNt) ? 1.0 : 0.0;
    // One scalar equation per entry of the dN(t) x dM(s) matrix.
    for (int r = 0; r < dNt; ++r)
      for (int c = 0; c < dMs; ++c) {
        std::vector<double> eq(static_cast<std::size_t>(unknowns), 0.0);
        if (dNs && dMs) eq[static_cast<std::size_t>(offset[static_cast<std::size_t>(s)])] += n_alpha;
        if (dNt && dMt) eq[static_cast<std::size_t>(offset[static_cast<std::size_t>(t)])] -= m_alpha;
        rows.push_back(std::move(eq));
      }
  }
  if (rows.empty()) return unknowns;
  Eigen::MatrixXd a(static_cast<Eigen::Index>(rows.size()), unknowns);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (int j = 0; j < unknowns; ++j) a(static_cast<Eigen::Index>(i), j) = rows[i][static_cast<std::size_t>(j)];
  Eigen::FullPivLU<Eigen::MatrixXd> lu(a);
  return unknowns - static_cast<int>(lu.rank());
}

}  // namespace gs_test
