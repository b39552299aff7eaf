// Copyright (c) past contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "past/exactnum/text.hpp"
#include "past/spectral/conditions.hpp"

namespace past {

// Fixed-point rendering of q rounded down (or up) to `digits` decimals.
std::string decimal(const Rational& q, int digits, bool round_up);

// Certified enclosure of |a|^p |b|^(1-p) with width below 10^-digits.
DyadicInterval inner_enclosure(const GroupKey& k, const RealAlgebraic& p, int digits);

// Spectral report: eigenpairs, group table with both key displays, R/C
// split, gamma coefficients and the lex order per direction. Indices are
// 1-based.
Json explain_json(const Analysis& an);
std::string explain_text(const Analysis& an);

}  // namespace past
