#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "condtorus/errors.hpp"
#include "condtorus/torus_spec.hpp"

namespace condtorus {

/**
 * Number of vertices of the smallest subgraph of the torus with minimum
 * degree at least h:
 *
 *   2^h                          if 0 <= h <= r
 *   2^(r-i) * k_1 * ... * k_i    if h = r + i, 1 <= i <= r
 *
 * with k_1 <= ... <= k_r the canonical cycle lengths.
 */
inline std::int64_t a_h_r(int h, const TorusSpec& spec) {
  spec.require_theorem_range();
  const int r = spec.rank();
  if (h < 0 || h > 2 * r) {
    throw ValidationError("h = " + std::to_string(h) + " outside [0, 2r] = [0, " +
                          std::to_string(2 * r) + "]");
  }
  if (h <= r) return checked::pow2(h);
  const int i = h - r;
  std::int64_t value = checked::pow2(r - i);
  for (int j = 0; j < i; ++j) value = checked::mul(value, spec.k(static_cast<std::size_t>(j)));
  return value;
}

/// Conditional h-vertex and h-edge connectivity, a_h^r * (2r - h), for 0 <= h <= 2r - 2.
inline std::int64_t theorem_value(int h, const TorusSpec& spec) {
  const int r = spec.rank();
  if (h < 0 || h > 2 * r - 2) {
    throw ValidationError("connectivity closed form covers 0 <= h <= 2r-2 = " +
                          std::to_string(2 * r - 2) + ", got h = " + std::to_string(h));
  }
  return checked::mul(a_h_r(h, spec), 2 * r - h);
}

struct RecurrenceReport {
  int identities_checked = 0;
  std::vector<std::string> violations;
  bool ok() const noexcept { return violations.empty(); }
};

/**
 * Checks, for every legal h, the three relations between a_h^r and the
 * values for the torus on the r-1 shortest cycles:
 *   (1) a_h^r = 2 a_{h-1}^{r-1}          for 1 <= h <= 2r-1
 *   (2) k_r a_{h-2}^{r-1} >= a_h^r        for 2 <= h <= 2r
 *   (3) a_h^{r-1} >= a_h^r                for 0 <= h <= 2r-2
 */
inline RecurrenceReport check_recurrences(const TorusSpec& spec) {
  spec.require_theorem_range();
  const int r = spec.rank();
  if (r < 2) throw ValidationError("recurrences need r >= 2");
  const TorusSpec lower = spec.prefix(r - 1);
  const std::int64_t k_r = spec.k(static_cast<std::size_t>(r - 1));

  RecurrenceReport rep;
  auto fail = [&](int which, int h, std::int64_t lhs, std::int64_t rhs) {
    rep.violations.push_back("identity (" + std::to_string(which) + ") fails at h=" +
                             std::to_string(h) + ": " + std::to_string(lhs) + " vs " +
                             std::to_string(rhs));
  };
  for (int h = 1; h <= 2 * r - 1; ++h, ++rep.identities_checked) {
    const auto lhs = a_h_r(h, spec);
    const auto rhs = checked::mul(2, a_h_r(h - 1, lower));
    if (lhs != rhs) fail(1, h, lhs, rhs);
  }
  for (int h = 2; h <= 2 * r; ++h, ++rep.identities_checked) {
    const auto lhs = checked::mul(k_r, a_h_r(h - 2, lower));
    const auto rhs = a_h_r(h, spec);
    if (lhs < rhs) fail(2, h, lhs, rhs);
  }
  for (int h = 0; h <= 2 * r - 2; ++h, ++rep.identities_checked) {
    const auto lhs = a_h_r(h, lower);
    const auto rhs = a_h_r(h, spec);
    if (lhs < rhs) fail(3, h, lhs, rhs);
  }
  return rep;
}

struct SpanningInequality {
  std::int64_t lhs = 0;  // (2r - h + 1) a_h^r
  std::int64_t rhs = 0;  // k_1 ... k_r
  bool strict = false;   // lhs < rhs
  bool holds = false;    // lhs <= rhs, and strict whenever h < 2r - 1
};

/// Compares |N[V(W_h^r)]| = (2r-h+1) a_h^r against |V(G)|.
inline SpanningInequality spanning_inequality(int h, const TorusSpec& spec) {
  const int r = spec.rank();
  if (h < 0 || h > 2 * r - 1) {
    throw ValidationError("spanning inequality covers 0 <= h <= 2r-1, got h = " + std::to_string(h));
  }
  SpanningInequality out;
  out.lhs = checked::mul(2 * r - h + 1, a_h_r(h, spec));
  out.rhs = spec.vertex_count();
  out.strict = out.lhs < out.rhs;
  out.holds = out.lhs <= out.rhs && (h == 2 * r - 1 || out.strict);
  return out;
}

}  // namespace condtorus
