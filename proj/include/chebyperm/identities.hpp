#pragma once

#include <map>
#include <string>
#include <vector>

#include "chebyperm/integers.hpp"
#include "chebyperm/omega.hpp"
#include "chebyperm/permanent.hpp"

namespace chebyperm {

// Two independently computed sides of one identity instance.  Equality is
// exact; both sides are kept so a failure is diagnosable.
struct IdentityReport {
  std::string name;
  std::map<std::string, long long> params;
  BigInt lhs;
  BigInt rhs;

  bool holds() const { return lhs == rhs; }
  friend bool operator==(const IdentityReport&, const IdentityReport&) = default;
};

inline bool all_hold(const std::vector<IdentityReport>& reports) {
  for (const auto& r : reports)
    if (!r.holds()) return false;
  return true;
}

// Sum over weakly increasing chains 1 <= k_1 <= ... <= k_m <= n of
//   prod over i = 0..m of k_i (n + m - i)^(k_{i+1} - k_i)
// with k_0 = 1 and k_{m+1} = n.  The DFS carries the partial product, so
// extending a chain costs one multiply.  The chain count C(n+m-1, m) is
// checked against the budget before enumerating.
inline BigInt chain_sum(long long m, long long n,
                        long long budget = EngineLimits{}.enumeration_budget) {
  if (m < 0) throw std::domain_error("chain sum: m must be non-negative");
  if (n < 1) throw std::domain_error("chain sum: n must be positive");
  if (binomial(n + m - 1, m) > budget)
    throw CapacityError("chain sum: chain count exceeds budget");
  BigInt total = 0;
  // Choosing k_t fixes the factor k_{t-1} (n + m - t + 1)^(k_t - k_{t-1}).
  const auto dfs = [&](auto&& self, long long t, long long prev, const BigInt& prod) -> void {
    if (t == m + 1) {
      total += prod * prev * ipow(n, n - prev);
      return;
    }
    for (long long k = prev; k <= n; ++k)
      self(self, t + 1, k, prod * prev * ipow(n + m - t + 1, k - prev));
  };
  dfs(dfs, 1, 1, BigInt(1));
  return total;
}

inline BigInt chain_sum_closed_form(long long m, long long n) {
  if (m < 0) throw std::domain_error("chain sum: m must be non-negative");
  if (n < 1) throw std::domain_error("chain sum: n must be positive");
  return binomial(n + m - 1, m) * ipow(n, n + m - 1);
}

inline IdentityReport check_chain_sum(long long m, long long n,
                                      long long budget = EngineLimits{}.enumeration_budget) {
  return {"chain_sum", {{"m", m}, {"n", n}}, chain_sum(m, n, budget),
          chain_sum_closed_form(m, n)};
}

// One telescoping step of the chain sum: for i >= 0 and 1 <= c <= n,
//   sum over k = c..n of k C(n-k+i, i) (n+i+1)^(k-c) n^(n-k+i)
// collapses to C(n-c+i+1, i+1) n^(n-c+i+1).
inline BigInt telescoping_lhs(long long i, long long n, long long c) {
  if (i < 0) throw std::domain_error("telescoping: i must be non-negative");
  if (c < 1 || c > n) throw std::domain_error("telescoping: requires 1 <= c <= n");
  BigInt s = 0;
  for (long long k = c; k <= n; ++k)
    s += k * binomial(n - k + i, i) * ipow(n + i + 1, k - c) * ipow(n, n - k + i);
  return s;
}

inline BigInt telescoping_rhs(long long i, long long n, long long c) {
  if (i < 0) throw std::domain_error("telescoping: i must be non-negative");
  if (c < 1 || c > n) throw std::domain_error("telescoping: requires 1 <= c <= n");
  return binomial(n - c + i + 1, i + 1) * ipow(n, n - c + i + 1);
}

inline IdentityReport check_telescoping_step(long long i, long long n, long long c) {
  return {"telescoping_step", {{"c", c}, {"i", i}, {"n", n}}, telescoping_lhs(i, n, c),
          telescoping_rhs(i, n, c)};
}

// Combinatorial weight of the selection patterns with exactly m doubled
// picks: sum over 1 <= i_1 < ... < i_m <= d of
//   prod over s of (i_s - s + 1), times
//   (d+1)^(i_1 - 1) d^(i_2 - i_1 - 1) ... (d - m + 1)^(d - i_m).
// Equals the coefficient of x^m in omega_shifted_form(d); the m = 0 sum is
// the single empty pattern of weight (d + 1)^d.
inline BigInt shifted_coeff_count(long long d, long long m) {
  if (d < 1) throw std::domain_error("shifted coeff count: d must be positive");
  if (m < 0 || m > d) throw std::domain_error("shifted coeff count: requires 0 <= m <= d");
  BigInt total = 0;
  // Gaps before index i_s contribute powers of d + 2 - s.
  const auto dfs = [&](auto&& self, long long s, long long prev, const BigInt& prod) -> void {
    if (s == m + 1) {
      total += prod * ipow(d - m + 1, d - prev);
      return;
    }
    for (long long i = prev + 1; i <= d - (m - s); ++i)
      self(self, s + 1, i, prod * (i - s + 1) * ipow(d + 2 - s, i - prev - 1));
  };
  dfs(dfs, 1, 0, BigInt(1));
  return total;
}

// Coefficientwise cross-checks of three routes to the corner weight
// polynomial: the closed form, direct enumeration of the permanent, and the
// pattern counts behind the shifted form.
inline std::vector<IdentityReport> verify_omega_closed_form(long long d,
                                                            const EngineLimits& limits = {}) {
  const IntPolynomial closed = omega_closed_form(d);
  const IntPolynomial oracle = permanent_enumerate(build_omega_matrix(d), limits);
  const IntPolynomial shifted = omega_shifted_form(d);
  const IntPolynomial closed_shifted = closed.shifted(1);
  std::vector<IdentityReport> out;
  for (long long k = 0; k <= d; ++k)
    out.push_back({"omega_coeff", {{"d", d}, {"k", k}}, closed.coefficient(k),
                   oracle.coefficient(k)});
  for (long long m = 0; m <= d; ++m)
    out.push_back({"omega_shift_coeff", {{"d", d}, {"m", m}}, closed_shifted.coefficient(m),
                   shifted.coefficient(m)});
  for (long long m = 0; m <= d; ++m)
    out.push_back({"omega_shift_count", {{"d", d}, {"m", m}}, shifted.coefficient(m),
                   shifted_coeff_count(d, m)});
  return out;
}

}  // namespace chebyperm
