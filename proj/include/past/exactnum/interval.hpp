// Copyright (c) past contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>

#include "past/exactnum/rational.hpp"

namespace past {

// Closed interval with rational endpoints. Used for isolating intervals and
// certified enclosures; the endpoints produced by log_interval are dyadic.
struct DyadicInterval {
  Rational lo;
  Rational hi;

  Rational width() const { return hi - lo; }
  bool contains(const Rational& q) const { return lo <= q && q <= hi; }
  bool contains(const DyadicInterval& o) const { return lo <= o.lo && o.hi <= hi; }
  bool overlaps(const DyadicInterval& o) const { return !(hi < o.lo || o.hi < lo); }
  bool operator==(const DyadicInterval& o) const { return lo == o.lo && hi == o.hi; }
};

inline DyadicInterval operator+(const DyadicInterval& a, const DyadicInterval& b) {
  return {a.lo + b.lo, a.hi + b.hi};
}

inline DyadicInterval operator-(const DyadicInterval& a) { return {-a.hi, -a.lo}; }

inline DyadicInterval operator-(const DyadicInterval& a, const DyadicInterval& b) {
  return {a.lo - b.hi, a.hi - b.lo};
}

inline DyadicInterval operator*(const DyadicInterval& a, const DyadicInterval& b) {
  Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
  return {std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4})};
}

inline DyadicInterval operator*(const Rational& s, const DyadicInterval& a) {
  return s >= 0 ? DyadicInterval{s * a.lo, s * a.hi} : DyadicInterval{s * a.hi, s * a.lo};
}

}  // namespace past
