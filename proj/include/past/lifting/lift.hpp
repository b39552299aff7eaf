// Copyright (c) past contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "past/exactnum/text.hpp"
#include "past/witness/membership.hpp"

namespace past {

// Band construction for a witness x with certificate (d, assignment, margins).
// With deviation u = |j - p*l| / l, the designated groups dominate for every
// u in [r/l, eps]; (j, k) sits in the middle of that band.
struct LiftConstants {
  Direction d = Direction::p;
  Rational epsilon;
  unsigned long r = 0;
  unsigned long l = 0;
  unsigned long j = 0;
  unsigned long k = 0;
};

struct LiftCertificate {
  LiftConstants constants;
  std::vector<RealAlgebraic> y;        // A^j B^k x
  std::vector<RealAlgebraic> margins;  // rho_c of x
  std::vector<RealAlgebraic> guard;    // C y, all > 0
};

// Throws NoCertificate when x is not a witness.
LiftConstants compute_lift_constants(const ExactVector& x, const Analysis& an);
LiftConstants compute_lift_constants(const ExactVector& x, const Certificate& cert, const Analysis& an);

// Exact checks of the band inequalities: eps bound, eps*l >= r + 2,
// j + k = l, deviation inside [0, eps*l] and within 1 of (eps*l + r)/2.
bool band_holds(const LiftConstants& c, const RealAlgebraic& p);

// y = A^j B^k x; throws GuardViolatedAtLift unless C y > 0 componentwise.
LiftCertificate lift_witness(const Analysis& an, const ExactVector& x, const LiftConstants& c,
                             const std::vector<RealAlgebraic>& margins = {});

Json lift_json(const LiftCertificate& lc);

}  // namespace past
