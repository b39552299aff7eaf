// Copyright (c) past contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include <string>

namespace past {

using Integer = mpz_class;
using Rational = mpq_class;  // always kept canonical

// Accepts "n", "n/d" and plain decimals such as "-1.25".
Rational parse_rational(const std::string& text);

// "n" when the denominator is 1, "n/d" otherwise.
std::string to_string(const Rational& q);

Integer floor_of(const Rational& q);
Integer ceil_of(const Rational& q);

// 2^e for any integer e.
Rational pow2(long e);

Rational pow(const Rational& base, unsigned long e);

inline int sign(const Rational& q) { return sgn(q); }

// Bit length of |z| (0 for z = 0).
std::size_t bit_length(const Integer& z);

}  // namespace past
