#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "chebyperm/integers.hpp"

namespace chebyperm {

// Dense univariate polynomial with exact integer coefficients, stored
// low-to-high.  Canonical form carries no trailing zero coefficient; the
// zero polynomial is the empty array and reports degree -1.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

  static IntPolynomial constant(BigInt v) {
    IntPolynomial p;
    if (v != 0) p.c_.push_back(std::move(v));
    return p;
  }

  // The monomial x.
  static IntPolynomial variable() { return IntPolynomial({BigInt(0), BigInt(1)}); }

  bool is_zero() const { return c_.empty(); }
  long long degree() const { return static_cast<long long>(c_.size()) - 1; }
  const std::vector<BigInt>& coefficients() const { return c_; }

  BigInt coefficient(long long k) const {
    if (k < 0 || k >= static_cast<long long>(c_.size())) return 0;
    return c_[static_cast<std::size_t>(k)];
  }

  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) = default;

  IntPolynomial& operator+=(const IntPolynomial& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }

  IntPolynomial& operator-=(const IntPolynomial& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) {
    a += b;
    return a;
  }

  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) {
    a -= b;
    return a;
  }

  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    IntPolynomial r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        r.c_[i + j] += a.c_[i] * b.c_[j];
    return r;
  }

  IntPolynomial& operator*=(const IntPolynomial& o) {
    *this = *this * o;
    return *this;
  }

  IntPolynomial& operator*=(const BigInt& s) {
    if (s == 0) {
      c_.clear();
      return *this;
    }
    for (auto& c : c_) c *= s;
    return *this;
  }

  // Horner evaluation.
  BigInt operator()(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  BigRat operator()(const BigRat& x) const {
    BigRat acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + BigRat(*it);
    return acc;
  }

  // p(x + c), composed by Horner over polynomial arithmetic.
  IntPolynomial shifted(const BigInt& c) const {
    IntPolynomial res;
    const IntPolynomial lin({c, BigInt(1)});
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      res = res * lin;
      res += constant(*it);
    }
    return res;
  }

  // Human-readable form such as "x^2 + 6*x + 2".
  std::string str() const {
    if (c_.empty()) return "0";
    std::string out;
    bool first = true;
    for (long long k = degree(); k >= 0; --k) {
      const BigInt c = coefficient(k);
      if (c == 0) continue;
      const bool neg = c < 0;
      if (first) {
        if (neg) out += "-";
        first = false;
      } else {
        out += neg ? " - " : " + ";
      }
      const BigInt a = boost::multiprecision::abs(c);
      if (k == 0) {
        out += a.str();
      } else {
        if (a != 1) {
          out += a.str();
          out += "*";
        }
        out += "x";
        if (k > 1) out += "^" + std::to_string(k);
      }
    }
    return out;
  }

 private:
  std::vector<BigInt> c_;

  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
};

}  // namespace chebyperm
