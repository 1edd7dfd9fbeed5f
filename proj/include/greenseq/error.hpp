#pragma once

#include <stdexcept>
#include <string>

namespace greenseq {

/// Base class for recoverable, user-facing failures (bad input, bad vertex,
/// a state that is not what the caller claimed it was).
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class invalid_vertex : public error {
 public:
  using error::error;
};

class invalid_quiver : public error {
 public:
  using error::error;
};

class invalid_sequence : public error {
 public:
  using error::error;
};

class not_coframed : public error {
 public:
  using error::error;
};

class cyclic_quiver : public error {
 public:
  using error::error;
};

class series_mismatch : public error {
 public:
  using error::error;
};

class not_invertible : public error {
 public:
  using error::error;
};

class search_truncated : public error {
 public:
  using error::error;
};

class arithmetic_overflow : public error {
 public:
  using error::error;
};

/// Internal invariant failures. Hitting one of these means the bookkeeping
/// disagrees with a theorem the library relies on, not that the input was bad.
class sign_coherence_violation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class realization_failure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace greenseq
