#include <catch2/catch_amalgamated.hpp>

#include "chebyperm/polynomial.hpp"

using chebyperm::BigInt;
using chebyperm::BigRat;
using chebyperm::IntPolynomial;

TEST_CASE("zero polynomial is canonical") {
  const IntPolynomial z;
  CHECK(z.is_zero());
  CHECK(z.degree() == -1);
  CHECK(z.str() == "0");
  CHECK(z == IntPolynomial({BigInt(0), BigInt(0)}));
  CHECK(z.coefficient(0) == 0);
  CHECK(z(BigInt(7)) == 0);
}

TEST_CASE("construction trims trailing zeros") {
  const IntPolynomial p({BigInt(1), BigInt(0), BigInt(0)});
  CHECK(p.degree() == 0);
  CHECK(p == IntPolynomial::constant(1));
}

TEST_CASE("constant and variable") {
  CHECK(IntPolynomial::constant(5).degree() == 0);
  CHECK(IntPolynomial::constant(0).is_zero());
  const IntPolynomial x = IntPolynomial::variable();
  CHECK(x.degree() == 1);
  CHECK(x.str() == "x");
  CHECK(x(BigInt(9)) == 9);
}

TEST_CASE("arithmetic") {
  const IntPolynomial x = IntPolynomial::variable();
  const IntPolynomial p = (x + IntPolynomial::constant(1)) * (x + IntPolynomial::constant(2));
  CHECK(p == IntPolynomial({BigInt(2), BigInt(3), BigInt(1)}));

  IntPolynomial q = p;
  q -= p;
  CHECK(q.is_zero());

  q = p;
  q *= BigInt(0);
  CHECK(q.is_zero());

  q = p;
  q *= BigInt(-2);
  CHECK(q == IntPolynomial({BigInt(-4), BigInt(-6), BigInt(-2)}));
}

TEST_CASE("coefficient access is total") {
  const IntPolynomial p({BigInt(2), BigInt(6), BigInt(1)});
  CHECK(p.coefficient(-1) == 0);
  CHECK(p.coefficient(0) == 2);
  CHECK(p.coefficient(2) == 1);
  CHECK(p.coefficient(3) == 0);
}

TEST_CASE("evaluation, exact integer and rational") {
  const IntPolynomial p({BigInt(2), BigInt(6), BigInt(1)});
  CHECK(p(BigInt(2)) == 18);
  CHECK(p(BigInt(-1)) == -3);
  const BigRat half(1, 2);
  CHECK(p(half) == BigRat(21, 4));
}

TEST_CASE("shift by one") {
  const IntPolynomial sq({BigInt(0), BigInt(0), BigInt(1)});
  CHECK(sq.shifted(1) == IntPolynomial({BigInt(1), BigInt(2), BigInt(1)}));

  const IntPolynomial omega2({BigInt(2), BigInt(6), BigInt(1)});
  CHECK(omega2.shifted(1) == IntPolynomial({BigInt(9), BigInt(8), BigInt(1)}));
  CHECK(omega2.shifted(1).shifted(-1) == omega2);
}

TEST_CASE("printing") {
  CHECK(IntPolynomial({BigInt(2), BigInt(6), BigInt(1)}).str() == "x^2 + 6*x + 2");
  CHECK(IntPolynomial({BigInt(-1), BigInt(1)}).str() == "x - 1");
  CHECK(IntPolynomial({BigInt(0), BigInt(0), BigInt(-1)}).str() == "-x^2");
  CHECK(IntPolynomial({BigInt(0), BigInt(2)}).str() == "2*x");
  CHECK(IntPolynomial::constant(-7).str() == "-7");
}
