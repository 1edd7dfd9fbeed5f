#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "greenseq/framed.hpp"
#include "greenseq/io.hpp"
#include "greenseq/laurent.hpp"

namespace greenseq {

/// Exponent vector alpha in N^n of a monomial y^alpha.
using Exponent = std::vector<int>;

inline int total_degree(const Exponent& a) { return std::accumulate(a.begin(), a.end(), 0); }

/// lambda(alpha, beta) = alpha^T B beta for the exchange matrix B of a quiver.
class SkewForm {
 public:
  SkewForm() = default;
  explicit SkewForm(const Quiver& q) : n_(q.size()), b_(q.size() * q.size()) {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) b_[i * n_ + j] = q.matrix()(i, j);
  }

  std::size_t rank() const noexcept { return n_; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return b_[i * n_ + j]; }

  std::int64_t operator()(const Exponent& a, const Exponent& b) const {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < n_; ++j) s += a[i] * b_[i * n_ + j] * b[j];
    }
    return s;
  }

  friend bool operator==(const SkewForm&, const SkewForm&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::int64_t> b_;
};

/// The ambient truncated algebra: the skew form and the maximal total
/// y-degree D kept. Two series can only be combined inside the same space.
struct SeriesSpace {
  SkewForm form;
  int order = 0;

  SeriesSpace() = default;
  SeriesSpace(const Quiver& q, int d) : form(q), order(d) {
    if (d < 0) throw series_mismatch("truncation order must be nonnegative");
  }

  std::size_t rank() const noexcept { return form.rank(); }
  friend bool operator==(const SeriesSpace&, const SeriesSpace&) = default;
};

/// Truncated element of the complete quantum affine space: a finite sum of
/// c_alpha y^alpha with |alpha| <= D, multiplied by
/// y^alpha y^beta = t^{lambda(alpha, beta)} y^{alpha + beta}.
class QuantumSeries {
 public:
  QuantumSeries() = default;
  explicit QuantumSeries(SeriesSpace space) : space_(std::move(space)) {}

  static QuantumSeries zero(const SeriesSpace& space) { return QuantumSeries(space); }

  static QuantumSeries one(const SeriesSpace& space) {
    QuantumSeries s(space);
    s.terms_.emplace(Exponent(space.rank(), 0), RationalFunction(1));
    return s;
  }

  static QuantumSeries monomial(const SeriesSpace& space, Exponent alpha, RationalFunction c = RationalFunction(1)) {
    QuantumSeries s(space);
    s.add_term(std::move(alpha), std::move(c));
    return s;
  }

  const SeriesSpace& space() const noexcept { return space_; }
  std::size_t rank() const noexcept { return space_.rank(); }
  int order() const noexcept { return space_.order; }
  const std::map<Exponent, RationalFunction>& terms() const noexcept { return terms_; }

  RationalFunction coefficient(const Exponent& alpha) const {
    auto it = terms_.find(alpha);
    return it == terms_.end() ? RationalFunction() : it->second;
  }

  /// Adds c * y^alpha; terms beyond the truncation order are dropped.
  void add_term(Exponent alpha, const RationalFunction& c) {
    if (alpha.size() != rank()) throw series_mismatch("exponent vector has wrong length");
    for (int a : alpha)
      if (a < 0) throw series_mismatch("exponent vectors must be nonnegative");
    if (total_degree(alpha) > order() || c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(std::move(alpha), c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  friend QuantumSeries operator+(const QuantumSeries& a, const QuantumSeries& b) {
    a.require_same(b);
    QuantumSeries r = a;
    for (const auto& [alpha, c] : b.terms_) r.add_term(alpha, c);
    return r;
  }

  friend QuantumSeries operator*(const QuantumSeries& a, const QuantumSeries& b) { return mul(a, b); }

  friend QuantumSeries mul(const QuantumSeries& a, const QuantumSeries& b) {
    a.require_same(b);
    const int d = a.order();
    // Collect the contributions per output exponent and sum each bucket once.
    std::map<Exponent, std::vector<RationalFunction>> buckets;
    for (const auto& [alpha, ca] : a.terms_) {
      const int da = total_degree(alpha);
      for (const auto& [beta, cb] : b.terms_) {
        if (da + total_degree(beta) > d) continue;
        Exponent gamma(alpha.size());
        for (std::size_t i = 0; i < gamma.size(); ++i) gamma[i] = alpha[i] + beta[i];
        const auto twist = a.space_.form(alpha, beta);
        buckets[std::move(gamma)].push_back((ca * cb).times_t_power(static_cast<int>(twist)));
      }
    }
    QuantumSeries r(a.space_);
    for (auto& [gamma, parts] : buckets) {
      RationalFunction sum = sum_fractions(parts);
      if (!sum.is_zero()) r.terms_.emplace(gamma, std::move(sum));
    }
    return r;
  }

  friend bool operator==(const QuantumSeries& a, const QuantumSeries& b) {
    return a.space_ == b.space_ && a.terms_ == b.terms_;
  }

 private:
  void require_same(const QuantumSeries& o) const {
    if (!(space_ == o.space_)) throw series_mismatch("series live in different truncated spaces");
  }

  // Pairwise tree summation keeps intermediate denominators balanced.
  static RationalFunction sum_fractions(std::vector<RationalFunction>& parts) {
    while (parts.size() > 1) {
      std::vector<RationalFunction> next;
      next.reserve((parts.size() + 1) / 2);
      for (std::size_t i = 0; i + 1 < parts.size(); i += 2) next.push_back(parts[i] + parts[i + 1]);
      if (parts.size() % 2) next.push_back(std::move(parts.back()));
      parts = std::move(next);
    }
    return parts.empty() ? RationalFunction() : parts.front();
  }

  SeriesSpace space_;
  std::map<Exponent, RationalFunction> terms_;
};

/// Coefficient of y^{m alpha} in E(y^alpha): t^{m^2} / prod_{k<m} (q^m - q^k).
inline RationalFunction dilog_coefficient(int m) {
  LaurentPoly den(1);
  for (int k = 0; k < m; ++k) den *= LaurentPoly::monomial(1, 2 * m) - LaurentPoly::monomial(1, 2 * k);
  return {LaurentPoly::monomial(1, m * m), den};
}

/// The quantum dilogarithm E(y^alpha) truncated at the space's order. Since
/// lambda(alpha, alpha) = 0, (y^alpha)^m = y^{m alpha}.
inline QuantumSeries q_exp(const Exponent& alpha, const SeriesSpace& space) {
  const int d = total_degree(alpha);
  if (alpha.size() != space.rank()) throw series_mismatch("exponent vector has wrong length");
  for (int a : alpha)
    if (a < 0) throw series_mismatch("exponent vectors must be nonnegative");
  if (d == 0) throw series_mismatch("q_exp needs a nonzero exponent vector");
  QuantumSeries s = QuantumSeries::one(space);
  for (int m = 1; m * d <= space.order; ++m) {
    Exponent e(alpha.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = m * alpha[i];
    s.add_term(std::move(e), dilog_coefficient(m));
  }
  return s;
}

/// Two-sided inverse, solved degree by degree from the constant term.
inline QuantumSeries inv(const QuantumSeries& a) {
  const Exponent zero(a.rank(), 0);
  const RationalFunction c0 = a.coefficient(zero);
  if (c0.is_zero()) throw not_invertible("series with zero constant term is not invertible");
  const RationalFunction c0_inv = c0.inverse();

  // All exponents of total degree <= D, grouped by degree.
  std::vector<std::vector<Exponent>> by_degree(static_cast<std::size_t>(a.order()) + 1);
  Exponent cur(a.rank(), 0);
  auto gen = [&](auto& self, std::size_t pos, int left) -> void {
    if (pos == cur.size()) {
      by_degree[static_cast<std::size_t>(a.order() - left)].push_back(cur);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      cur[pos] = v;
      self(self, pos + 1, left - v);
    }
    cur[pos] = 0;
  };
  gen(gen, 0, a.order());

  QuantumSeries b(a.space());
  b.add_term(zero, c0_inv);
  for (std::size_t deg = 1; deg < by_degree.size(); ++deg) {
    for (const auto& gamma : by_degree[deg]) {
      RationalFunction acc;
      for (const auto& [alpha, ca] : a.terms()) {
        if (alpha == zero) continue;
        Exponent beta(gamma.size());
        bool ok = true;
        for (std::size_t i = 0; i < gamma.size() && ok; ++i) {
          beta[i] = gamma[i] - alpha[i];
          ok = beta[i] >= 0;
        }
        if (!ok) continue;
        const RationalFunction cb = b.coefficient(beta);
        if (cb.is_zero()) continue;
        acc += (ca * cb).times_t_power(static_cast<int>(a.space().form(alpha, beta)));
      }
      if (!acc.is_zero()) b.add_term(gamma, -(c0_inv * acc));
    }
  }
  return b;
}

/// The ordered product E(y^{e_1 beta_1})^{e_1} ... E(y^{e_N beta_N})^{e_N}
/// over the c-vectors beta_t (with signs e_t) met while replaying `seq` on
/// the framed quiver, truncated at total degree `order`.
inline QuantumSeries dt_product(const Quiver& q, const MutationSequence& seq, int order) {
  check_sequence(q, seq);
  const SeriesSpace space(q, order);
  QuantumSeries result = QuantumSeries::one(space);
  auto s = frame(q);
  for (Vertex k : seq) {
    const auto c = s.c_vector(k);
    Exponent alpha(c.entries.size());
    for (std::size_t i = 0; i < alpha.size(); ++i) {
      const std::int64_t v = c.sign * c.entries[i];
      if (v > std::numeric_limits<int>::max()) throw arithmetic_overflow("c-vector entry too large for an exponent");
      alpha[i] = static_cast<int>(v);
    }
    const QuantumSeries factor = c.green() ? q_exp(alpha, space) : inv(q_exp(alpha, space));
    result = mul(result, factor);
    s = s.mutated(k);
  }
  return result;
}

/// Exact coefficientwise equality of two series in the same space.
inline bool identity_check(const QuantumSeries& a, const QuantumSeries& b) {
  if (!(a.space() == b.space())) throw series_mismatch("series live in different truncated spaces");
  return a.terms() == b.terms();
}

namespace detail {

inline json bigint_to_json(const BigInt& c) {
  if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(c);
  return c.str();
}

inline BigInt bigint_from_json(const json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) return BigInt(j.get<std::string>());
  throw series_mismatch("coefficient must be an integer or a decimal string");
}

inline json poly_to_json(const LaurentPoly& p) {
  json out = json::array();
  for (const auto& [e, c] : p.terms()) out.push_back({e, bigint_to_json(c)});
  return out;
}

inline LaurentPoly poly_from_json(const json& j) {
  std::map<int, BigInt> terms;
  for (const auto& t : j) terms[t.at(0).get<int>()] += bigint_from_json(t.at(1));
  return LaurentPoly::from_terms(terms);
}

}  // namespace detail

/// {"D": d, "terms": [{"y": [...], "num": [[e, c], ...], "den": [[e, c], ...]}]},
/// terms in lexicographic exponent order. Coefficients beyond 64 bits are
/// written as decimal strings.
inline json series_to_json(const QuantumSeries& s) {
  json terms = json::array();
  for (const auto& [alpha, c] : s.terms())
    terms.push_back({{"y", alpha}, {"num", detail::poly_to_json(c.num())}, {"den", detail::poly_to_json(c.den())}});
  return {{"D", s.order()}, {"terms", std::move(terms)}};
}

/// Reads the coefficients back into the given space (the form is not serialized).
inline QuantumSeries series_from_json(const json& j, const SeriesSpace& space) {
  if (j.at("D").get<int>() != space.order) throw series_mismatch("truncation order does not match the space");
  QuantumSeries s(space);
  for (const auto& t : j.at("terms"))
    s.add_term(t.at("y").get<Exponent>(),
               RationalFunction(detail::poly_from_json(t.at("num")), detail::poly_from_json(t.at("den"))));
  return s;
}

}  // namespace greenseq
