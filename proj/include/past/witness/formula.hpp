// Copyright (c) past contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "past/spectral/conditions.hpp"

namespace past {

// One disjunct W_{d, c} of the witness set.
struct WitnessFormula {
  struct Constraint {
    PositivityCondition positivity;   // of the designated group
    std::vector<RealForm> equalities;  // zero conditions of every lex-greater group
  };
  Direction d = Direction::p;
  std::vector<std::size_t> assignment;  // designated group per constraint
  std::vector<Constraint> constraints;
  bool nonneg = false;
  std::size_t n = 0;
};

struct FormulaSet {
  std::vector<WitnessFormula> formulas;
  Integer raw_count = 0;  // 2 * |groups|^m before pruning
};

// Enumerates d = p then d = n; assignments in odometer order (last
// constraint fastest), each digit running from the lex-greatest group down.
// Disjuncts whose designated group has an empty R part (or an R-sum that is
// identically zero) are pruned.
FormulaSet build_witness_formulas(const Analysis& an, Semiring semiring);

}  // namespace past
