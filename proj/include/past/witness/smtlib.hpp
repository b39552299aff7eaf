// Copyright (c) past contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "past/witness/formula.hpp"

namespace past {

// SMT-LIB2 literal for a rational: 3, (- 3), (/ 11 10), (/ (- 1) 20).
std::string smt_rational(const Rational& q);

// Extra linear constraints appended to a query, used when re-querying for a
// rational point: x_index = value.
struct Pin {
  std::size_t index;
  Rational value;
};

// QF_NRA script for one disjunct: variables x1..xn, one auxiliary variable
// per distinct irrational coefficient (pinned by its defining polynomial and
// isolating interval), t >= 0 with t^2 = Re^2 + Im^2 per modulus term, then
// check-sat and get-model.
std::string emit_smtlib(const WitnessFormula& f, const std::vector<Pin>& pins = {});

// One script asserting the disjunction of all formulas.
std::string emit_smtlib_union(const std::vector<WitnessFormula>& fs, std::size_t n);

}  // namespace past
