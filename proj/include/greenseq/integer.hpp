#pragma once

#include <concepts>
#include <cstdint>
#include <limits>
#include <type_traits>

#include "greenseq/error.hpp"

namespace greenseq {

// Matrix entries may be builtin integers (overflow-checked) or an
// arbitrary-precision type such as boost::multiprecision::cpp_int.
template <class Int>
concept MatrixInteger = requires(Int a, Int b) {
  { a + b };
  { a * b };
  { -a };
  { a < b } -> std::convertible_to<bool>;
  { a == b } -> std::convertible_to<bool>;
  Int(0);
};

template <class Int>
Int checked_add(const Int& a, const Int& b) {
  if constexpr (std::is_integral_v<Int>) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw arithmetic_overflow("integer overflow in addition");
    return r;
  } else {
    return Int(a + b);
  }
}

template <class Int>
Int checked_mul(const Int& a, const Int& b) {
  if constexpr (std::is_integral_v<Int>) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw arithmetic_overflow("integer overflow in multiplication");
    return r;
  } else {
    return Int(a * b);
  }
}

template <class Int>
Int checked_neg(const Int& a) {
  if constexpr (std::is_integral_v<Int>) {
    if (a == std::numeric_limits<Int>::min()) throw arithmetic_overflow("integer overflow in negation");
  }
  return Int(-a);
}

template <class Int>
int sign_of(const Int& a) {
  if (a > Int(0)) return 1;
  if (a < Int(0)) return -1;
  return 0;
}

}  // namespace greenseq
