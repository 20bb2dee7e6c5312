#include <cmath>
#include <numbers>

#include <catch2/catch_amalgamated.hpp>

#include "chebyperm/omega.hpp"
#include "chebyperm/permanent.hpp"
#include "oracles.hpp"

using namespace chebyperm;

TEST_CASE("closed form, small degrees") {
  CHECK(omega_closed_form(1) == IntPolynomial({BigInt(1), BigInt(1)}));
  CHECK(omega_closed_form(2) == IntPolynomial({BigInt(2), BigInt(6), BigInt(1)}));
  CHECK(omega_closed_form(3) == IntPolynomial({BigInt(6), BigInt(36), BigInt(21), BigInt(1)}));
  CHECK_THROWS_AS(omega_closed_form(0), std::domain_error);
}

TEST_CASE("closed form is monic of degree d") {
  for (long long d = 1; d <= 10; ++d) {
    const IntPolynomial p = omega_closed_form(d);
    CHECK(p.degree() == d);
    CHECK(p.coefficient(d) == 1);
  }
}

TEST_CASE("shifted form coefficients") {
  CHECK(omega_shifted_form(2) == IntPolynomial({BigInt(9), BigInt(8), BigInt(1)}));
  for (long long d = 1; d <= 8; ++d) {
    const IntPolynomial s = omega_shifted_form(d);
    for (long long m = 0; m <= d; ++m)
      CHECK(s.coefficient(m) == binomial(d, m) * ipow(BigInt(d - m + 1), d));
    CHECK(omega_closed_form(d).shifted(1) == s);
  }
}

TEST_CASE("values at x = 2") {
  const char* expected[] = {"3",        "18",        "170",
                            "2200",     "36232",     "725200",
                            "17095248", "463936896", "14246942336"};
  for (long long d = 1; d <= 9; ++d) CHECK(omega_value(d) == BigInt(expected[d - 1]));
}

TEST_CASE("value at x = 1 is (d+1)^d") {
  for (long long d = 1; d <= 10; ++d)
    CHECK(omega_at(d, BigInt(1)) == ipow(BigInt(d + 1), d));
}

TEST_CASE("rational evaluation") {
  CHECK(omega_at(2, BigRat(1, 2)) == BigRat(21, 4));
  CHECK(omega_at(1, BigRat(-1, 3)) == BigRat(2, 3));
}

TEST_CASE("closed form equals the matrix permanent") {
  for (long long d = 1; d <= 5; ++d)
    CHECK(omega_closed_form(d) == permanent_enumerate(build_omega_matrix(d)));
}

TEST_CASE("log factor") {
  CHECK(std::abs(log_omega_factor(1) - 1.0) < 1e-12);
  const double w2 = 18.0 * std::exp(2.0) / 25.0;
  CHECK(std::abs(std::exp(log_omega_factor(2)) - w2) < 1e-9 * w2);
  CHECK(std::abs(std::exp(log_omega_factor(1)) - std::numbers::e) < 1e-12);
}
