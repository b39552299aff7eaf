// Copyright (c) past contributors.
// SPDX-License-Identifier: Apache-2.0
#include "past/exactnum/complex_algebraic.hpp"

#include "past/errors.hpp"

namespace past {

RealAlgebraic ComplexAlgebraic::norm2() const {
  if (im.is_zero()) return re * re;
  if (re.is_zero()) return im * im;
  return re * re + im * im;
}

RealAlgebraic ComplexAlgebraic::modulus() const {
  if (im.is_zero()) return abs(re);
  if (re.is_zero()) return abs(im);
  return sqrt_nonneg(norm2());
}

ComplexAlgebraic ComplexAlgebraic::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of complex zero");
  if (im.is_zero()) return {re.inverse(), RealAlgebraic()};
  RealAlgebraic n = norm2().inverse();
  return {re * n, -(im * n)};
}

std::string ComplexAlgebraic::to_string() const {
  if (im.is_zero()) return re.to_string();
  return "(" + re.to_string() + ") + i(" + im.to_string() + ")";
}

ComplexAlgebraic operator*(const ComplexAlgebraic& a, const ComplexAlgebraic& b) {
  if (a.im.is_zero() && b.im.is_zero()) return {a.re * b.re, RealAlgebraic()};
  if (a.im.is_zero()) return {a.re * b.re, a.re * b.im};
  if (b.im.is_zero()) return {a.re * b.re, a.im * b.re};
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

ComplexAlgebraic pow(const ComplexAlgebraic& z, unsigned long e) {
  ComplexAlgebraic result(1), base = z;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

}  // namespace past
