// Copyright (c) past contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "past/exactnum/interval.hpp"
#include "past/exactnum/polynomial.hpp"

namespace past {

// Exact real algebraic number. Rationals take a fast path; every other value
// is the unique root of an irreducible integer polynomial (degree >= 2,
// positive leading coefficient) inside an open isolating interval.
//
// The isolating interval of an irrational value is a cache: refinement
// narrows it under a lock but never changes the number denoted, so values
// behave as immutable and may be shared across threads.
class RealAlgebraic {
 public:
  RealAlgebraic() = default;
  RealAlgebraic(const Rational& q) : q_(q) {}  // NOLINT(google-explicit-constructor)
  RealAlgebraic(long v) : q_(v) {}             // NOLINT(google-explicit-constructor)
  RealAlgebraic(int v) : q_(v) {}              // NOLINT(google-explicit-constructor)

  // The unique root of `poly` in [lo, hi]. `poly` may be reducible or carry
  // repeated factors; throws InternalError if [lo, hi] does not isolate one root.
  static RealAlgebraic from_root(const IntPolynomial& poly, const Rational& lo, const Rational& hi);

  bool is_rational() const { return !irr_; }
  const Rational& rational() const;
  // Minimal polynomial with positive leading coefficient.
  IntPolynomial poly() const;
  // Current isolating interval; [q, q] for rationals.
  DyadicInterval interval() const;
  // Enclosure of width at most 2^-bits.
  DyadicInterval enclosure(long bits) const;

  int sign() const;
  bool is_zero() const { return !irr_ && q_ == 0; }
  double to_double() const;
  std::string to_string() const;

  RealAlgebraic operator-() const;
  RealAlgebraic inverse() const;

  friend RealAlgebraic operator+(const RealAlgebraic& a, const RealAlgebraic& b);
  friend RealAlgebraic operator-(const RealAlgebraic& a, const RealAlgebraic& b) { return a + (-b); }
  friend RealAlgebraic operator*(const RealAlgebraic& a, const RealAlgebraic& b);
  friend RealAlgebraic operator/(const RealAlgebraic& a, const RealAlgebraic& b) { return a * b.inverse(); }
  RealAlgebraic& operator+=(const RealAlgebraic& o) { return *this = *this + o; }
  RealAlgebraic& operator-=(const RealAlgebraic& o) { return *this = *this - o; }
  RealAlgebraic& operator*=(const RealAlgebraic& o) { return *this = *this * o; }

  friend int compare(const RealAlgebraic& a, const RealAlgebraic& b);
  friend bool operator==(const RealAlgebraic& a, const RealAlgebraic& b) { return compare(a, b) == 0; }
  friend std::strong_ordering operator<=>(const RealAlgebraic& a, const RealAlgebraic& b) {
    return compare(a, b) <=> 0;
  }

 private:
  struct Irrational;
  // Root of one of `candidates` (distinct irreducibles) singled out by the
  // shrinking enclosures enclose(bits).
  static RealAlgebraic select_root(const std::vector<IntPolynomial>& candidates,
                                   const std::function<DyadicInterval(long)>& enclose);
  friend RealAlgebraic sqrt_nonneg(const RealAlgebraic&);
  friend RealAlgebraic nth_root(const RealAlgebraic&, unsigned);
  friend std::vector<RealAlgebraic> isolate_real_roots(const IntPolynomial&);
  static RealAlgebraic make(const IntPolynomial& irreducible, const Rational& lo, const Rational& hi);
  const Irrational& irr() const { return *irr_; }

  Rational q_;
  std::shared_ptr<const Irrational> irr_;
};

int compare(const RealAlgebraic& a, const RealAlgebraic& b);
RealAlgebraic sqrt_nonneg(const RealAlgebraic& x);
// Nonnegative k-th root of x >= 0.
RealAlgebraic nth_root(const RealAlgebraic& x, unsigned k);
RealAlgebraic pow(const RealAlgebraic& x, unsigned long e);
RealAlgebraic abs(const RealAlgebraic& x);

// All distinct real roots, ascending, with pairwise-disjoint intervals.
std::vector<RealAlgebraic> isolate_real_roots(const IntPolynomial& poly);

}  // namespace past
