// Copyright (c) past contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "past/exactnum/rational.hpp"

namespace past {

// Dense univariate polynomial over Q, constant term first.
class RatPolynomial {
 public:
  RatPolynomial() = default;
  explicit RatPolynomial(std::vector<Rational> coeffs);
  static RatPolynomial constant(const Rational& c);
  static RatPolynomial monomial(const Rational& c, std::size_t k);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  const Rational& leading() const { return c_.back(); }

  Rational eval(const Rational& x) const;
  RatPolynomial derivative() const;
  RatPolynomial monic() const;

  RatPolynomial operator-() const;
  friend RatPolynomial operator+(const RatPolynomial& a, const RatPolynomial& b);
  friend RatPolynomial operator-(const RatPolynomial& a, const RatPolynomial& b);
  friend RatPolynomial operator*(const RatPolynomial& a, const RatPolynomial& b);
  friend RatPolynomial operator*(const Rational& s, const RatPolynomial& a);
  friend bool operator==(const RatPolynomial& a, const RatPolynomial& b) { return a.c_ == b.c_; }

 private:
  void trim();
  std::vector<Rational> c_;
};

// (quotient, remainder); throws DivisionByZero on b = 0.
std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& a, const RatPolynomial& b);
// Monic gcd (zero only if both inputs are zero).
RatPolynomial gcd(const RatPolynomial& a, const RatPolynomial& b);

// Integer polynomial in primitive form: the content is 1, the sign of the
// leading coefficient is kept.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> coeffs);
  // Positive multiple of p with integer coefficients and content 1.
  static IntPolynomial from_rational(const RatPolynomial& p);
  // Linear polynomial den*t - num for the rational q.
  static IntPolynomial linear_root(const Rational& q);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Integer>& coeffs() const { return c_; }
  const Integer& leading() const { return c_.back(); }
  RatPolynomial to_rational() const;

  int sign_at(const Rational& x) const;
  Rational eval(const Rational& x) const;

  IntPolynomial normalized() const;              // leading coefficient > 0
  IntPolynomial derivative() const;
  IntPolynomial negate_variable() const;         // p(-t)
  IntPolynomial reversed() const;                // t^d p(1/t)
  IntPolynomial compose_power(unsigned k) const; // p(t^k)
  IntPolynomial shift(const Rational& q) const;  // p(t - q)
  IntPolynomial scale(const Rational& q) const;  // p(t / q), q != 0

  std::string to_string(const std::string& var = "t") const;

  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.c_ == b.c_; }

 private:
  std::vector<Integer> c_;
};

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial squarefree_part(const IntPolynomial& p);
// Exact quotient a / b over Q brought back to primitive form.
IntPolynomial divide_exact(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial multiply(const IntPolynomial& a, const IntPolynomial& b);

// Sturm chain of a squarefree polynomial.
std::vector<IntPolynomial> sturm_sequence(const IntPolynomial& p);
int sign_variations(const std::vector<IntPolynomial>& seq, const Rational& x);
// Number of distinct roots in the half-open interval (lo, hi].
int count_roots(const std::vector<IntPolynomial>& seq, const Rational& lo, const Rational& hi);
// Every real root lies strictly inside (-B, B).
Rational root_bound(const IntPolynomial& p);

using RatMatrix = std::vector<std::vector<Rational>>;
// Characteristic polynomial det(tI - M) of a square rational matrix.
RatPolynomial charpoly(const RatMatrix& m);
// Companion matrix of a monic polynomial.
RatMatrix companion(const RatPolynomial& monic);

}  // namespace past
