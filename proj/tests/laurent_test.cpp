#include <gtest/gtest.h>

#include <random>

#include <boost/multiprecision/cpp_int.hpp>

#include "greenseq/laurent.hpp"

using namespace greenseq;
using boost::multiprecision::cpp_rational;

namespace {

LaurentPoly t_pow(int e) { return LaurentPoly::monomial(1, e); }

cpp_rational eval(const LaurentPoly& p, const cpp_rational& t) {
  cpp_rational sum = 0;
  for (const auto& [e, c] : p.terms()) {
    cpp_rational pw = 1;
    for (int i = 0; i < std::abs(e); ++i) pw *= t;
    sum += cpp_rational(c) * (e >= 0 ? pw : 1 / pw);
  }
  return sum;
}

cpp_rational eval(const RationalFunction& r, const cpp_rational& t) { return eval(r.num(), t) / eval(r.den(), t); }

const std::vector<cpp_rational> probes{cpp_rational(2), cpp_rational(3), cpp_rational(-5), cpp_rational(7, 3)};

LaurentPoly random_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coef(-3, 3), low(-3, 3), len(0, 4);
  std::map<int, BigInt> terms;
  const int lo = low(rng), l = len(rng);
  for (int i = 0; i < l; ++i) terms[lo + i] = coef(rng);
  return LaurentPoly::from_terms(terms);
}

RationalFunction random_fraction(std::mt19937_64& rng) {
  LaurentPoly den;
  while (den.is_zero()) den = random_poly(rng);
  // Keep denominators away from the probe points.
  for (const auto& t : probes)
    if (eval(den, t) == 0) return RationalFunction(random_poly(rng));
  return RationalFunction(random_poly(rng), den);
}

}  // namespace

TEST(LaurentPoly, Basics) {
  const LaurentPoly p = LaurentPoly::from_terms({{-1, 2}, {0, 0}, {3, -1}});
  EXPECT_EQ(p.low_exponent(), -1);
  EXPECT_EQ(p.high_exponent(), 3);
  EXPECT_EQ(p.coefficient(-1), 2);
  EXPECT_EQ(p.coefficient(1), 0);
  EXPECT_EQ(p.coefficient(10), 0);
  EXPECT_EQ(p.terms().size(), 2u);  // zero coefficients are not stored as terms
  EXPECT_TRUE(LaurentPoly().is_zero());
  EXPECT_TRUE(LaurentPoly::from_terms({{4, 0}}).is_zero());
  EXPECT_EQ(p - p, LaurentPoly());
  EXPECT_EQ(p.shifted(2).low_exponent(), 1);
}

TEST(LaurentPoly, Products) {
  const auto a = t_pow(1) - LaurentPoly(1);  // t - 1
  const auto b = t_pow(1) + LaurentPoly(1);  // t + 1
  EXPECT_EQ(a * b, t_pow(2) - LaurentPoly(1));
  EXPECT_EQ(t_pow(-2) * t_pow(5), t_pow(3));
  EXPECT_EQ((a * LaurentPoly()).is_zero(), true);
}

TEST(LaurentPoly, ToString) {
  EXPECT_EQ((t_pow(2) - LaurentPoly(1)).to_string(), "t^2 - 1");
  EXPECT_EQ(LaurentPoly().to_string(), "0");
  EXPECT_EQ(LaurentPoly::monomial(-3, -1).to_string(), "-3*t^-1");
}

TEST(Poly, GcdAndDivision) {
  const auto q_minus_1 = t_pow(2) - LaurentPoly(1);
  const auto t_minus_1 = t_pow(1) - LaurentPoly(1);
  EXPECT_EQ(poly::gcd(q_minus_1, t_minus_1 * t_minus_1), t_minus_1);
  EXPECT_EQ(poly::gcd(LaurentPoly(6) * q_minus_1, LaurentPoly(4) * t_minus_1), LaurentPoly(2) * t_minus_1);
  EXPECT_EQ(poly::gcd(LaurentPoly(), t_minus_1), t_minus_1);
  EXPECT_EQ(poly::gcd(-t_minus_1, LaurentPoly()), t_minus_1);
  EXPECT_EQ(poly::exact_divide(q_minus_1, t_minus_1), t_pow(1) + LaurentPoly(1));
  EXPECT_THROW(poly::exact_divide(q_minus_1, t_pow(1) + LaurentPoly(2)), std::logic_error);
}

TEST(RationalFunction, CanonicalForm) {
  // (t^3 - t) / (2t^2 - 2t) = (t + 1) / 2
  const RationalFunction r(t_pow(3) - t_pow(1), LaurentPoly(2) * (t_pow(2) - t_pow(1)));
  EXPECT_EQ(r.num(), t_pow(1) + LaurentPoly(1));
  EXPECT_EQ(r.den(), LaurentPoly(2));

  // t / (q - 1): already canonical.
  const RationalFunction e1(t_pow(1), t_pow(2) - LaurentPoly(1));
  EXPECT_EQ(e1.num(), t_pow(1));
  EXPECT_EQ(e1.den(), t_pow(2) - LaurentPoly(1));

  // Sign and t-power normalization of the denominator.
  const RationalFunction s(LaurentPoly(1), -t_pow(3) + t_pow(5));
  EXPECT_EQ(s.den().low_exponent(), 0);
  EXPECT_GT(s.den().leading(), 0);
  EXPECT_EQ(s.num(), t_pow(-3));

  EXPECT_THROW(RationalFunction(LaurentPoly(1), LaurentPoly()), not_invertible);
  EXPECT_EQ(RationalFunction(LaurentPoly(), t_pow(2) + LaurentPoly(3)).den(), LaurentPoly(1));
}

TEST(RationalFunction, Arithmetic) {
  const RationalFunction x(t_pow(1), t_pow(2) - LaurentPoly(1));
  EXPECT_EQ(x - x, RationalFunction());
  EXPECT_EQ(x / x, RationalFunction(1));
  EXPECT_EQ(x * x.inverse(), RationalFunction(1));
  EXPECT_EQ(x.times_t_power(2), x * RationalFunction(t_pow(2)));
  EXPECT_THROW(RationalFunction().inverse(), not_invertible);
  EXPECT_EQ(x.to_string(), "(t)/(t^2 - 1)");
}

TEST(RationalFunctionProperty, FieldAxiomsAgainstEvaluation) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 400; ++trial) {
    const auto a = random_fraction(rng), b = random_fraction(rng), c = random_fraction(rng);
    ASSERT_EQ(a + b, b + a);
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    for (const auto& t : probes) {
      ASSERT_EQ(eval(a + b, t), eval(a, t) + eval(b, t));
      ASSERT_EQ(eval(a * b, t), eval(a, t) * eval(b, t));
    }
    if (!a.is_zero()) {
      ASSERT_EQ(a / a, RationalFunction(1));
    }
  }
}

TEST(RationalFunctionProperty, NormalizationIsIdempotent) {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 400; ++trial) {
    const auto a = random_fraction(rng);
    const RationalFunction again(a.num(), a.den());
    ASSERT_EQ(again.num(), a.num());
    ASSERT_EQ(again.den(), a.den());
    ASSERT_EQ(a.den().low_exponent(), 0);
    ASSERT_GT(a.den().leading(), 0);
    // Reduced: scaling numerator and denominator by a common factor changes nothing.
    const auto f = t_pow(1) + LaurentPoly(3);
    const RationalFunction scaled(a.num() * f, a.den() * f * LaurentPoly(5));
    ASSERT_EQ(scaled * RationalFunction(5), a);
  }
}
