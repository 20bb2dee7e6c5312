// End-to-end acceptance gate.  Each criterion prints exactly one PASS or
// FAIL line with its wall-clock time; the exit status is the number of
// failures.  Every check pits at least two independent routes against each
// other, so a pass means the routes agree, not that one route is self-
// consistent.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "chebyperm/bounds.hpp"
#include "chebyperm/cli.hpp"
#include "chebyperm/codes.hpp"
#include "chebyperm/identities.hpp"
#include "chebyperm/omega.hpp"
#include "chebyperm/permanent.hpp"
#include "oracles.hpp"

using namespace chebyperm;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

Outcome fail(std::string detail) { return {false, std::move(detail)}; }

// 1: the command line yields the nine exact values of Omega_d at x = 2.
Outcome cli_values() {
  const char* expected[] = {"3",        "18",        "170",
                            "2200",     "36232",     "725200",
                            "17095248", "463936896", "14246942336"};
  for (int d = 1; d <= 9; ++d) {
    std::ostringstream out, err;
    const int rc = run_cli({"omega", "--d", std::to_string(d), "--x", "2"}, out, err);
    const std::string want = std::string(expected[d - 1]) + "\n";
    if (rc != 0 || out.str() != want)
      return fail("d=" + std::to_string(d) + ": rc=" + std::to_string(rc) + " out=" +
                  out.str());
  }
  return {};
}

// 2: closed form against the enumerated permanent of the d x 2d matrix,
// coefficient by coefficient.
Outcome closed_form_vs_permanent() {
  EngineLimits limits;
  limits.enumeration_budget = 1'000'000'000;
  for (long long d = 1; d <= 8; ++d) {
    const IntPolynomial closed = omega_closed_form(d);
    const IntPolynomial enumerated = permanent_enumerate(build_omega_matrix(d), limits);
    for (long long k = 0; k <= d; ++k)
      if (closed.coefficient(k) != enumerated.coefficient(k))
        return fail("d=" + std::to_string(d) + " k=" + std::to_string(k) + ": closed " +
                    closed.coefficient(k).str() + " != enumerated " +
                    enumerated.coefficient(k).str());
  }
  return {};
}

// 3: chain sums collapse to binomial times power.
Outcome chain_sums() {
  for (long long m = 1; m <= 5; ++m)
    for (long long n = 1; n <= 8; ++n) {
      const IdentityReport r = check_chain_sum(m, n);
      if (!r.holds())
        return fail("m=" + std::to_string(m) + " n=" + std::to_string(n) + ": " +
                    r.lhs.str() + " != " + r.rhs.str());
    }
  return {};
}

// 4: every telescoping step of the chain sum.
Outcome telescoping_steps() {
  for (long long i = 0; i <= 4; ++i)
    for (long long n = 1; n <= 8; ++n)
      for (long long c = 1; c <= n; ++c) {
        const IdentityReport r = check_telescoping_step(i, n, c);
        if (!r.holds())
          return fail("i=" + std::to_string(i) + " n=" + std::to_string(n) + " c=" +
                      std::to_string(c) + ": " + r.lhs.str() + " != " + r.rhs.str());
      }
  return {};
}

// 5: the shifted-coefficient pattern count equals both the binomial form
// and the matching chain sum.
Outcome pattern_counts() {
  for (long long d = 1; d <= 10; ++d)
    for (long long m = 0; m <= d; ++m) {
      const BigInt counted = shifted_coeff_count(d, m);
      const BigInt closed = binomial(d, m) * ipow(BigInt(d - m + 1), d);
      const BigInt chained = chain_sum(m, d - m + 1);
      if (counted != closed || counted != chained)
        return fail("d=" + std::to_string(d) + " m=" + std::to_string(m) + ": count " +
                    counted.str() + ", closed " + closed.str() + ", chain " + chained.str());
    }
  return {};
}

// 6: the sweep, inclusion-exclusion, and enumeration engines agree on the
// ball volume, and displacement one counts Fibonacci numbers.
Outcome engines_agree() {
  for (long long d = 1; d <= 4; ++d)
    for (long long n = 1; n <= 10; ++n) {
      const IntMatrix a = build_band_matrix(d, n);
      const BigInt sweep = permanent_band_dp(d, n);
      const BigInt ryser = permanent_ryser(a, 4);
      const BigInt enumerated = permanent_enumerate(a);
      if (sweep != ryser || sweep != enumerated)
        return fail("d=" + std::to_string(d) + " n=" + std::to_string(n) + ": sweep " +
                    sweep.str() + ", inclusion-exclusion " + ryser.str() + ", enumeration " +
                    enumerated.str());
    }
  for (int n = 1; n <= 20; ++n)
    if (permanent_band_dp(1, n) != oracles::fibonacci(n + 1))
      return fail("n=" + std::to_string(n) + ": sweep differs from Fibonacci");
  return {};
}

// 7: both analytic floors sit strictly below the exact volume, and their
// gap matches its closed expression to 1e-12.
Outcome floors_below_exact() {
  for (long long d = 1; d <= 3; ++d)
    for (long long n = d + 1; n <= 14; ++n) {
      const double exact = ln_big(ball_volume(d, n));
      const double old_floor = log_lower_bound_pow2(d, n);
      const double new_floor = log_lower_bound_omega(d, n);
      if (exact <= old_floor || exact <= new_floor)
        return fail("d=" + std::to_string(d) + " n=" + std::to_string(n) +
                    ": a floor is not below the exact value");
      const double gap = new_floor - old_floor;
      const double expect = 0.5 * std::log((n + 2.0 * d) / n) +
                            2.0 * d * std::numbers::ln2 - 2.0 * log_omega_factor(d);
      if (std::abs(gap - expect) > 1e-12)
        return fail("d=" + std::to_string(d) + " n=" + std::to_string(n) +
                    ": gap off by " + std::to_string(gap - expect));
    }
  return {};
}

// 8: every row and column of the doubled-corner matrix sums to 2d + 1.
Outcome doubled_corner_sums() {
  for (long long d = 1; d <= 5; ++d)
    for (long long n = 2 * d + 1; n <= 40; ++n) {
      const IntMatrix b = build_klove_matrix(d, n);
      for (const long long s : row_sums(b))
        if (s != 2 * d + 1)
          return fail("d=" + std::to_string(d) + " n=" + std::to_string(n) + ": row sum " +
                      std::to_string(s));
      for (const long long s : col_sums(b))
        if (s != 2 * d + 1)
          return fail("d=" + std::to_string(d) + " n=" + std::to_string(n) + ": col sum " +
                      std::to_string(s));
    }
  return {};
}

// 9: ln omega_d - d ln 2 is positive up to d = 5 and negative from 6 to 20,
// the crossover verdict agrees with comparing the floors directly at n = 1,
// and omega_1 is e to 1e-12.
Outcome omega_sign_pattern() {
  for (long long d = 1; d <= 20; ++d) {
    const double sign = log_omega_factor(d) - d * std::numbers::ln2;
    if (d <= 5 && sign <= 0)
      return fail("d=" + std::to_string(d) + ": expected omega above 2^d");
    if (d >= 6 && sign >= 0)
      return fail("d=" + std::to_string(d) + ": expected omega below 2^d");

    const bool route_a = bound_crossover(d, 1000000).has_value();
    const bool route_b = log_lower_bound_omega(d, 1) > log_lower_bound_pow2(d, 1);
    if (route_a != route_b)
      return fail("d=" + std::to_string(d) + ": crossover routes disagree");
  }
  if (std::abs(std::exp(log_omega_factor(1)) - std::numbers::e) > 1e-12)
    return fail("omega_1 differs from e");
  return {};
}

// 10: searched codes sit between the Gilbert-Varshamov floor and the
// sphere-packing ceiling, and enumerated balls have the computed volume.
Outcome codes_within_bounds() {
  for (int n = 1; n <= 5; ++n)
    for (int dist = 1; dist <= n; ++dist) {
      const BigInt gv = gv_lower_bound(n, dist);
      const BigInt packing = sphere_packing_upper_bound(n, dist);
      const BigInt lex = BigInt(greedy_code(n, dist, ScanOrder::lex).words.size());
      const BigInt rev = BigInt(greedy_code(n, dist, ScanOrder::revlex).words.size());
      const BigInt exact = BigInt(exact_max_code(n, dist).words.size());
      const std::string at = "n=" + std::to_string(n) + " dist=" + std::to_string(dist);
      if (lex < gv || rev < gv)
        return fail(at + ": a maximal greedy code fell below the Gilbert-Varshamov floor");
      if (exact > packing) return fail(at + ": exact code exceeds the packing ceiling");
      if (lex > exact || rev > exact) return fail(at + ": greedy exceeds the exact maximum");
    }
  for (int n = 2; n <= 8; ++n) {
    Permutation center(n);
    for (int i = 0; i < n; ++i) center[i] = n - i;  // the reversal
    for (int d = 0; d < n; ++d)
      if (BigInt(ball_members(d, n, center).size()) != ball_volume(d, n))
        return fail("n=" + std::to_string(n) + " d=" + std::to_string(d) +
                    ": enumerated ball size differs from the volume");
  }
  return {};
}

}  // namespace

int main() {
  struct Entry {
    const char* name;
    double ceiling_s;
    Outcome (*fn)();
  };
  const std::vector<Entry> entries{
      {"command line evaluates Omega_d(2) exactly for d = 1..9", 1.0, cli_values},
      {"closed form matches the enumerated permanent for d = 1..8", 300.0,
       closed_form_vs_permanent},
      {"chain sums collapse to their closed form for m <= 5, n <= 8", 30.0, chain_sums},
      {"telescoping steps hold for i <= 4, n <= 8, all cutoffs", 30.0, telescoping_steps},
      {"pattern counts match binomial form and chain sums for d <= 10", 60.0, pattern_counts},
      {"all three volume engines agree; displacement one is Fibonacci", 60.0, engines_agree},
      {"exact volumes dominate both floors; gap identity to 1e-12", 60.0, floors_below_exact},
      {"doubled-corner rows and columns sum to 2d + 1 up to n = 40", 5.0, doubled_corner_sums},
      {"omega sign pattern and crossover agree across routes", 10.0, omega_sign_pattern},
      {"code searches respect the Gilbert-Varshamov and packing bounds", 120.0,
       codes_within_bounds},
  };

  int failures = 0;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = entries[i].fn();
    } catch (const std::exception& e) {
      o = fail(std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (o.ok && secs > entries[i].ceiling_s)
      o = fail("took " + std::to_string(secs) + "s, ceiling " +
               std::to_string(entries[i].ceiling_s) + "s");
    std::printf("%s  %2zu/%zu  %s  (%.2fs)\n", o.ok ? "PASS" : "FAIL", i + 1, entries.size(),
                entries[i].name, secs);
    if (!o.ok) {
      std::printf("      %s\n", o.detail.c_str());
      ++failures;
    }
  }
  std::printf("%d of %zu criteria failed\n", failures, entries.size());
  return failures;
}
