// Copyright (c) past contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <vector>

#include "past/spectral/conditions.hpp"

namespace past {

// Why x is a witness: for direction d, every constraint c has dominant group
// assignment[c] and margin[c] = R-sum minus the moduli of the other classes > 0.
struct Certificate {
  Direction d = Direction::p;
  std::vector<std::size_t> assignment;
  std::vector<RealAlgebraic> margins;
};

// Exact membership test for a real point x; tries d = p first.
std::optional<Certificate> membership_check(const ExactVector& x, const Analysis& an);

}  // namespace past
