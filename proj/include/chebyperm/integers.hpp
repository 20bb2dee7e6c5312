#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace chebyperm {

// Exact arithmetic used wherever counts can exceed 64 bits.  The counts
// themselves are non-negative, but signed intermediates appear inside the
// engines (inclusion-exclusion terms, coefficients of (x-1)^k), so a signed
// representation is used throughout.
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// A request that is well formed but exceeds a configured size or budget
// limit.  The CLI maps this to exit code 2; domain errors map to 1.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline BigInt factorial(long long n) {
  if (n < 0) throw std::domain_error("factorial: negative argument");
  BigInt r = 1;
  for (long long i = 2; i <= n; ++i) r *= i;
  return r;
}

// Exact binomial coefficient via the Pascal recurrence on a rolling row.
inline BigInt binomial(long long n, long long k) {
  if (n < 0) throw std::domain_error("binomial: negative row index");
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::vector<BigInt> row(static_cast<std::size_t>(k) + 1);
  row[0] = 1;
  for (long long i = 1; i <= n; ++i)
    for (long long j = std::min<long long>(i, k); j >= 1; --j)
      row[static_cast<std::size_t>(j)] += row[static_cast<std::size_t>(j) - 1];
  return row[static_cast<std::size_t>(k)];
}

inline BigInt ipow(const BigInt& base, long long exp) {
  if (exp < 0) throw std::domain_error("ipow: negative exponent");
  return boost::multiprecision::pow(base, static_cast<unsigned>(exp));
}

// Natural log of a positive big integer.  Values beyond double range are
// reduced to the top bits plus a power-of-two correction.
inline double ln_big(const BigInt& x) {
  if (x <= 0) throw std::domain_error("ln_big: argument must be positive");
  const auto bits = static_cast<long long>(boost::multiprecision::msb(x));
  if (bits <= 512) return std::log(x.convert_to<double>());
  const long long shift = bits - 52;
  const double mantissa = BigInt(x >> shift).convert_to<double>();
  return std::log(mantissa) + static_cast<double>(shift) * std::numbers::ln2;
}

}  // namespace chebyperm
