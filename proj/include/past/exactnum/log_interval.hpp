// Copyright (c) past contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "past/exactnum/interval.hpp"
#include "past/exactnum/real_algebraic.hpp"

namespace past {

// Enclosure of ln(q) for rational q > 0, width at most 2^-bits.
DyadicInterval ln_bounds(const Rational& q, long bits);

// Certified enclosure of ln(x), width at most 2^-bits. The result is the
// dyadic grid cell of width 2^-(bits+1) that contains ln(x), so enclosures
// for more bits are nested inside enclosures for fewer bits.
DyadicInterval log_interval(const RealAlgebraic& x, long bits);

}  // namespace past
