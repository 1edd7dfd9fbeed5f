#pragma once

#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "greenseq/error.hpp"

namespace greenseq {

using BigInt = boost::multiprecision::cpp_int;

/// Integer Laurent polynomial in t (t stands for q^{1/2}).
///
/// Stored densely as coefficients of t^low, t^{low+1}, ...; the first and last
/// stored coefficients are nonzero, and the zero polynomial has no coefficients.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(BigInt c) {  // NOLINT(google-explicit-constructor)
    if (c != 0) coeffs_.push_back(std::move(c));
  }
  LaurentPoly(int c) : LaurentPoly(BigInt(c)) {}  // NOLINT(google-explicit-constructor)

  static LaurentPoly monomial(BigInt c, int exponent) {
    LaurentPoly p(std::move(c));
    if (!p.is_zero()) p.low_ = exponent;
    return p;
  }

  static LaurentPoly from_terms(const std::map<int, BigInt>& terms) {
    LaurentPoly p;
    if (terms.empty()) return p;
    p.low_ = terms.begin()->first;
    p.coeffs_.assign(static_cast<std::size_t>(terms.rbegin()->first - p.low_ + 1), BigInt(0));
    for (const auto& [e, c] : terms) p.coeffs_[static_cast<std::size_t>(e - p.low_)] += c;
    p.trim();
    return p;
  }

  /// Dense coefficients starting at t^low.
  static LaurentPoly from_dense(int low, std::vector<BigInt> coeffs) {
    LaurentPoly p;
    p.low_ = low;
    p.coeffs_ = std::move(coeffs);
    p.trim();
    return p;
  }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  int low_exponent() const noexcept { return low_; }
  int high_exponent() const noexcept { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<BigInt>& dense() const noexcept { return coeffs_; }
  const BigInt& leading() const { return coeffs_.back(); }

  BigInt coefficient(int e) const {
    if (is_zero() || e < low_ || e > high_exponent()) return 0;
    return coeffs_[static_cast<std::size_t>(e - low_)];
  }

  std::map<int, BigInt> terms() const {
    std::map<int, BigInt> out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (coeffs_[i] != 0) out.emplace(low_ + static_cast<int>(i), coeffs_[i]);
    return out;
  }

  LaurentPoly shifted(int by) const {
    LaurentPoly p = *this;
    if (!p.is_zero()) p.low_ += by;
    return p;
  }

  /// gcd of the coefficients, positive (0 for the zero polynomial).
  BigInt content() const {
    BigInt g = 0;
    for (const auto& c : coeffs_) {
      g = boost::multiprecision::gcd(g, c);
      if (g == 1) break;
    }
    return g;
  }

  LaurentPoly divided_by(const BigInt& d) const {
    LaurentPoly p = *this;
    for (auto& c : p.coeffs_) c /= d;
    return p;
  }

  LaurentPoly operator-() const {
    LaurentPoly p = *this;
    for (auto& c : p.coeffs_) c = -c;
    return p;
  }

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const int low = std::min(a.low_, b.low_);
    const int high = std::max(a.high_exponent(), b.high_exponent());
    std::vector<BigInt> c(static_cast<std::size_t>(high - low + 1), BigInt(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[static_cast<std::size_t>(a.low_ - low) + i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[static_cast<std::size_t>(b.low_ - low) + i] += b.coeffs_[i];
    return from_dense(low, std::move(c));
  }

  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return from_dense(a.low_ + b.low_, std::move(c));
  }

  LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    return a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = static_cast<int>(coeffs_.size()) - 1; i >= 0; --i) {
      const BigInt& c = coeffs_[static_cast<std::size_t>(i)];
      if (c == 0) continue;
      const int e = low_ + i;
      std::string mag = (c < 0 ? BigInt(-c) : c).str();
      if (out.empty())
        out += c < 0 ? "-" : "";
      else
        out += c < 0 ? " - " : " + ";
      if (e == 0) {
        out += mag;
      } else {
        if (mag != "1") out += mag + "*";
        out += e == 1 ? "t" : "t^" + std::to_string(e);
      }
    }
    return out;
  }

 private:
  void trim() {
    std::size_t front = 0;
    while (front < coeffs_.size() && coeffs_[front] == 0) ++front;
    if (front == coeffs_.size()) {
      coeffs_.clear();
      low_ = 0;
      return;
    }
    while (coeffs_.back() == 0) coeffs_.pop_back();
    if (front) {
      coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(front));
      low_ += static_cast<int>(front);
    }
  }

  int low_ = 0;
  std::vector<BigInt> coeffs_;
};

inline std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

namespace poly {

// Helpers on ordinary polynomials: LaurentPolys with low exponent 0.

inline LaurentPoly primitive_part(const LaurentPoly& p) {
  if (p.is_zero()) return p;
  BigInt c = p.content();
  if (p.leading() < 0) c = -c;
  return p.divided_by(c);
}

/// Pseudo-remainder of a by b (b nonzero), both with low exponent 0.
inline LaurentPoly pseudo_remainder(LaurentPoly a, const LaurentPoly& b) {
  const int db = b.high_exponent();
  const BigInt& lb = b.leading();
  while (!a.is_zero() && a.high_exponent() >= db) {
    const BigInt la = a.leading();
    const int shift = a.high_exponent() - db;
    a = a * LaurentPoly(lb) - b * LaurentPoly::monomial(la, shift);
    if (!a.is_zero()) a = primitive_part(a);  // content is irrelevant to the gcd
  }
  return a;
}

inline int degree(const LaurentPoly& p) { return p.is_zero() ? -1 : p.high_exponent(); }

/// Strips the t-power so the result has low exponent 0.
inline LaurentPoly as_polynomial(const LaurentPoly& p) { return p.shifted(-p.low_exponent()); }

/// gcd in Z[t] of two polynomials (low exponent 0), positive leading coefficient.
inline LaurentPoly gcd(LaurentPoly a, LaurentPoly b) {
  auto positive = [](const LaurentPoly& p) { return !p.is_zero() && p.leading() < 0 ? -p : p; };
  if (a.is_zero()) return positive(b);
  if (b.is_zero()) return positive(a);
  const BigInt c = boost::multiprecision::gcd(a.content(), b.content());
  a = primitive_part(a);
  b = primitive_part(b);
  if (degree(a) < degree(b)) std::swap(a, b);
  while (!b.is_zero()) {
    if (degree(b) == 0) return LaurentPoly(c);
    LaurentPoly r = pseudo_remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return primitive_part(a) * LaurentPoly(c);
}

/// Exact quotient a / b of Laurent polynomials; b must divide a.
inline LaurentPoly exact_divide(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw not_invertible("polynomial division by zero");
  if (a.is_zero()) return a;
  std::vector<BigInt> rem = a.dense();
  const auto& bd = b.dense();
  const std::size_t db = bd.size() - 1;
  if (rem.size() < bd.size()) throw std::logic_error("exact_divide: divisor has larger degree");
  std::vector<BigInt> q(rem.size() - db, BigInt(0));
  for (std::size_t i = q.size(); i-- > 0;) {
    BigInt& top = rem[i + db];
    if (top == 0) continue;
    BigInt qq;
    BigInt qr;
    boost::multiprecision::divide_qr(top, bd[db], qq, qr);
    if (qr != 0) throw std::logic_error("exact_divide: remainder is not zero");
    for (std::size_t j = 0; j <= db; ++j) rem[i + j] -= qq * bd[j];
    q[i] = std::move(qq);
  }
  for (const auto& r : rem)
    if (r != 0) throw std::logic_error("exact_divide: remainder is not zero");
  return LaurentPoly::from_dense(a.low_exponent() - b.low_exponent(), std::move(q));
}

}  // namespace poly

/// Element of Q(t) kept in canonical form: num/den coprime in Z[t], den has
/// low exponent 0 and positive leading coefficient, zero is 0/1.
class RationalFunction {
 public:
  RationalFunction() : den_(1) {}
  RationalFunction(LaurentPoly num) : num_(std::move(num)), den_(1) {}  // NOLINT(google-explicit-constructor)
  RationalFunction(int c) : RationalFunction(LaurentPoly(c)) {}       // NOLINT(google-explicit-constructor)
  RationalFunction(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw not_invertible("rational function with zero denominator");
    normalize();
  }

  const LaurentPoly& num() const noexcept { return num_; }
  const LaurentPoly& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }

  RationalFunction inverse() const {
    if (is_zero()) throw not_invertible("inverse of zero");
    return {den_, num_};
  }

  RationalFunction operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
  }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
    const LaurentPoly g = poly::gcd(a.den_, b.den_);
    const LaurentPoly ad = poly::exact_divide(a.den_, g);
    const LaurentPoly bd = poly::exact_divide(b.den_, g);
    return {a.num_ * bd + b.num_ * ad, a.den_ * bd};
  }

  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero() || b.is_zero()) return {};
    // Cross-cancel first so the products stay small.
    const LaurentPoly an = poly::as_polynomial(a.num_);
    const LaurentPoly bn = poly::as_polynomial(b.num_);
    const LaurentPoly g1 = poly::gcd(an, b.den_);
    const LaurentPoly g2 = poly::gcd(bn, a.den_);
    RationalFunction r;
    r.num_ = (poly::exact_divide(an, g1) * poly::exact_divide(bn, g2))
                 .shifted(a.num_.low_exponent() + b.num_.low_exponent());
    r.den_ = poly::exact_divide(a.den_, g2) * poly::exact_divide(b.den_, g1);
    r.fix_sign();
    return r;
  }

  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) { return a * b.inverse(); }

  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }

  /// Multiplication by t^e.
  RationalFunction times_t_power(int e) const {
    RationalFunction r = *this;
    r.num_ = r.num_.shifted(e);
    return r;
  }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string to_string() const {
    if (den_ == LaurentPoly(1)) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
  }

 private:
  void fix_sign() {
    if (den_.leading() < 0) {
      num_ = -num_;
      den_ = -den_;
    }
  }

  void normalize() {
    if (num_.is_zero()) {
      den_ = LaurentPoly(1);
      return;
    }
    num_ = num_.shifted(-den_.low_exponent());
    den_ = poly::as_polynomial(den_);
    const int t_power = num_.low_exponent();
    const LaurentPoly n = poly::as_polynomial(num_);
    const LaurentPoly g = poly::gcd(n, den_);
    if (!(g == LaurentPoly(1))) {
      num_ = poly::exact_divide(n, g).shifted(t_power);
      den_ = poly::exact_divide(den_, g);
    }
    fix_sign();
  }

  LaurentPoly num_;
  LaurentPoly den_;
};

inline std::ostream& operator<<(std::ostream& os, const RationalFunction& r) { return os << r.to_string(); }

}  // namespace greenseq
