#pragma once

#include <cmath>
#include <numbers>
#include <optional>

#include "chebyperm/integers.hpp"
#include "chebyperm/omega.hpp"
#include "chebyperm/permanent.hpp"

namespace chebyperm {

// ln of sqrt(2 pi n) / 2^(2d) ((2d+1)/e)^n, a floor on ln ball_volume(d, n).
inline double log_lower_bound_pow2(long long d, long long n) {
  if (d < 1) throw std::domain_error("bound: d must be positive");
  if (n < 1) throw std::domain_error("bound: n must be positive");
  const double dd = static_cast<double>(d);
  const double nn = static_cast<double>(n);
  return 0.5 * std::log(2.0 * std::numbers::pi * nn) - 2.0 * dd * std::numbers::ln2 +
         nn * (std::log(2.0 * dd + 1.0) - 1.0);
}

// ln of sqrt(2 pi (n + 2d)) / omega^2 ((2d+1)/e)^n, the sharper floor.  The
// two floors differ only by the constant 2^(2d)/omega^2 and the sqrt
// argument.
inline double log_lower_bound_omega(long long d, long long n) {
  if (d < 1) throw std::domain_error("bound: d must be positive");
  if (n < 1) throw std::domain_error("bound: n must be positive");
  const double dd = static_cast<double>(d);
  const double nn = static_cast<double>(n);
  return 0.5 * std::log(2.0 * std::numbers::pi * (nn + 2.0 * dd)) - 2.0 * log_omega_factor(d) +
         nn * (std::log(2.0 * dd + 1.0) - 1.0);
}

struct BoundReport {
  long long d = 0;
  long long n = 0;
  double ln_old = 0.0;
  double ln_new = 0.0;
  double ln_omega_d = 0.0;
  std::optional<double> ln_exact;

  friend bool operator==(const BoundReport&, const BoundReport&) = default;
};

inline BoundReport make_bound_report(long long d, long long n, bool with_exact = false,
                                     const EngineLimits& limits = {}) {
  BoundReport r{d, n, log_lower_bound_pow2(d, n), log_lower_bound_omega(d, n),
                log_omega_factor(d), std::nullopt};
  if (with_exact) r.ln_exact = ln_big(ball_volume(d, n, limits));
  return r;
}

// Smallest n <= n_max where the omega floor exceeds the pow2 floor.  Their
// gap, 0.5 ln((n+2d)/n) + 2d ln 2 - 2 ln omega, is strictly decreasing in
// n, so n = 1 decides the whole range.
inline std::optional<long long> bound_crossover(long long d, long long n_max) {
  if (d < 1) throw std::domain_error("crossover: d must be positive");
  if (n_max < 1) throw std::domain_error("crossover: n_max must be positive");
  const double gap1 = 0.5 * std::log(1.0 + 2.0 * static_cast<double>(d)) +
                      2.0 * static_cast<double>(d) * std::numbers::ln2 -
                      2.0 * log_omega_factor(d);
  if (gap1 > 0.0) return 1;
  return std::nullopt;
}

// ceil(n! / ball_volume(dist - 1, n)): a maximal code with pairwise distance
// >= dist is at least this large.
inline BigInt gv_lower_bound(long long n, long long dist, const EngineLimits& limits = {}) {
  if (n < 1) throw std::domain_error("gv bound: n must be positive");
  if (dist < 1 || dist > n) throw std::domain_error("gv bound: requires 1 <= dist <= n");
  const BigInt vol = ball_volume(dist - 1, n, limits);
  return (factorial(n) + vol - 1) / vol;
}

// floor(n! / ball_volume((dist - 1) / 2, n)): no code with pairwise distance
// >= dist can be larger, since balls of radius floor((dist-1)/2) around
// codewords are disjoint.
inline BigInt sphere_packing_upper_bound(long long n, long long dist,
                                         const EngineLimits& limits = {}) {
  if (n < 1) throw std::domain_error("packing bound: n must be positive");
  if (dist < 1 || dist > n) throw std::domain_error("packing bound: requires 1 <= dist <= n");
  const BigInt vol = ball_volume((dist - 1) / 2, n, limits);
  return factorial(n) / vol;
}

struct CodeBoundsReport {
  long long n = 0;
  long long dist = 0;
  BigInt gv_floor;
  BigInt packing_ceiling;

  friend bool operator==(const CodeBoundsReport&, const CodeBoundsReport&) = default;
};

inline CodeBoundsReport make_code_bounds(long long n, long long dist,
                                         const EngineLimits& limits = {}) {
  return {n, dist, gv_lower_bound(n, dist, limits), sphere_packing_upper_bound(n, dist, limits)};
}

struct CrossoverReport {
  long long d = 0;
  long long n_max = 0;
  std::optional<long long> crossover;

  friend bool operator==(const CrossoverReport&, const CrossoverReport&) = default;
};

}  // namespace chebyperm
