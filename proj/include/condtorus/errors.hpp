#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace condtorus {

/// Input that violates a documented precondition (bad spec, h out of range, ...).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An intermediate count does not fit the 64-bit integer range.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// A bound-check input does not meet the bound's hypothesis (e.g. min degree < h).
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Instance exceeds what an exhaustive oracle mode can enumerate.
class InfeasibleError : public std::length_error {
 public:
  using std::length_error::length_error;
};

namespace checked {

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw OverflowError("integer overflow in " + std::to_string(a) + " * " + std::to_string(b));
  }
  return out;
}

inline std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw OverflowError("integer overflow in " + std::to_string(a) + " + " + std::to_string(b));
  }
  return out;
}

inline std::int64_t pow2(int e) {
  if (e < 0 || e > 62) throw OverflowError("2^" + std::to_string(e) + " out of range");
  return std::int64_t{1} << e;
}

}  // namespace checked
}  // namespace condtorus
