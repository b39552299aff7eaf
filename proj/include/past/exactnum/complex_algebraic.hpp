// Copyright (c) past contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "past/exactnum/real_algebraic.hpp"

namespace past {

// re + i*im with real algebraic parts.
struct ComplexAlgebraic {
  RealAlgebraic re;
  RealAlgebraic im;

  ComplexAlgebraic() = default;
  ComplexAlgebraic(RealAlgebraic r, RealAlgebraic i = RealAlgebraic())  // NOLINT
      : re(std::move(r)), im(std::move(i)) {}
  ComplexAlgebraic(const Rational& q) : re(q) {}  // NOLINT
  ComplexAlgebraic(long v) : re(v) {}             // NOLINT
  ComplexAlgebraic(int v) : re(v) {}              // NOLINT

  static ComplexAlgebraic i() { return {RealAlgebraic(0), RealAlgebraic(1)}; }

  bool is_real() const { return im.is_zero(); }
  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  bool is_rational() const { return re.is_rational() && im.is_rational(); }
  ComplexAlgebraic conj() const { return {re, -im}; }
  RealAlgebraic norm2() const;    // re^2 + im^2
  RealAlgebraic modulus() const;  // sqrt_nonneg(norm2)
  ComplexAlgebraic inverse() const;
  std::string to_string() const;

  ComplexAlgebraic operator-() const { return {-re, -im}; }
  friend ComplexAlgebraic operator+(const ComplexAlgebraic& a, const ComplexAlgebraic& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend ComplexAlgebraic operator-(const ComplexAlgebraic& a, const ComplexAlgebraic& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend ComplexAlgebraic operator*(const ComplexAlgebraic& a, const ComplexAlgebraic& b);
  friend ComplexAlgebraic operator/(const ComplexAlgebraic& a, const ComplexAlgebraic& b) {
    return a * b.inverse();
  }
  ComplexAlgebraic& operator+=(const ComplexAlgebraic& o) { return *this = *this + o; }
  ComplexAlgebraic& operator-=(const ComplexAlgebraic& o) { return *this = *this - o; }
  ComplexAlgebraic& operator*=(const ComplexAlgebraic& o) { return *this = *this * o; }
  friend bool operator==(const ComplexAlgebraic& a, const ComplexAlgebraic& b) {
    return a.re == b.re && a.im == b.im;
  }
};

ComplexAlgebraic pow(const ComplexAlgebraic& z, unsigned long e);

}  // namespace past
