#pragma once

#include <cmath>

#include "chebyperm/integers.hpp"
#include "chebyperm/polynomial.hpp"

namespace chebyperm {

// Corner weight polynomial of degree d in the doubling variable x:
//   sum over m = 0..d of C(d, m) (m + 1)^d (x - 1)^(d - m).
// It equals the permanent of build_omega_matrix(d); the identity checkers
// verify that coefficient by coefficient.
inline IntPolynomial omega_closed_form(long long d) {
  if (d < 1) throw std::domain_error("omega: d must be positive");
  IntPolynomial acc;
  IntPolynomial pw = IntPolynomial::constant(1);  // (x - 1)^(d - m), from m = d down
  const IntPolynomial xm1({BigInt(-1), BigInt(1)});
  for (long long m = d; m >= 0; --m) {
    IntPolynomial term = pw;
    term *= binomial(d, m) * ipow(m + 1, d);
    acc += term;
    if (m > 0) pw *= xm1;
  }
  return acc;
}

// The same polynomial with its argument shifted by one: the coefficient of
// x^m is C(d, m) (d - m + 1)^d.
inline IntPolynomial omega_shifted_form(long long d) {
  if (d < 1) throw std::domain_error("omega: d must be positive");
  std::vector<BigInt> c(static_cast<std::size_t>(d) + 1);
  for (long long m = 0; m <= d; ++m)
    c[static_cast<std::size_t>(m)] = binomial(d, m) * ipow(d - m + 1, d);
  return IntPolynomial(std::move(c));
}

inline BigInt omega_at(long long d, const BigInt& x) { return omega_closed_form(d)(x); }
inline BigRat omega_at(long long d, const BigRat& x) { return omega_closed_form(d)(x); }

// The doubled-corner count: the closed form at x = 2.
inline BigInt omega_value(long long d) { return omega_at(d, BigInt(2)); }

// ln of omega_value(d) (e / (2d + 1))^d.  The value itself overflows double
// for large d while its log stays modest, so everything downstream works in
// log space.
inline double log_omega_factor(long long d) {
  if (d < 1) throw std::domain_error("omega factor: d must be positive");
  return ln_big(omega_value(d)) +
         static_cast<double>(d) * (1.0 - std::log(2.0 * static_cast<double>(d) + 1.0));
}

}  // namespace chebyperm
