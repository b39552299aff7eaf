// Copyright (c) past contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <vector>

#include "past/spectral/gamma.hpp"
#include "past/spectral/groups.hpp"

namespace past {

// Real-linear forms that must all vanish.
struct EqualityCondition {
  std::vector<RealForm> forms;
  bool holds(const ExactVector& x) const;
};

// sum over R-indices of gamma (lhs) > sum of |moduli[i]|.
struct PositivityCondition {
  RealForm lhs;
  std::vector<LinearForm> moduli;
  bool lhs_identically_zero() const { return is_zero_form(lhs); }
};

// The group's coefficient vanishes for every (j, k) iff, for each distinct
// unit pair u in the group, the sum of gamma_{c,i} over indices with unit u
// is 0. The R class and other self-conjugate classes give one real
// equation; a conjugate pair of classes gives the real and imaginary part
// of its first member. Identically zero forms are dropped.
EqualityCondition zero_coefficient_condition(std::size_t c, const Group& g, const GammaTable& gamma,
                                             const std::vector<std::size_t>& sigma);
PositivityCondition positivity_condition(std::size_t c, const Group& g, const GammaTable& gamma);

// Everything the witness search needs about one loop.
struct Analysis {
  Loop loop;
  SpectralDecomposition sd;
  GammaTable gamma;
  GroupTable table;
  std::vector<std::size_t> order_p;  // group indices ascending in the lex order for d = p
  std::vector<std::size_t> order_n;
  std::vector<std::vector<EqualityCondition>> zero;  // [c][group]
  std::vector<std::vector<PositivityCondition>> pos;

  const std::vector<std::size_t>& order(Direction d) const { return d == Direction::p ? order_p : order_n; }
};

Analysis analyze(const Loop& loop);

// Index of the lex-maximal group (for d) whose coefficient does not vanish at x.
std::optional<std::size_t> dominant_group_at(const ExactVector& x, std::size_t c, Direction d, const Analysis& an);

// Some d makes the dominant group's R-sum positive for every constraint.
bool necessary_condition(const ExactVector& x, const Analysis& an);

// Group coefficient sum_{i in D} zeta_a^j zeta_b^k gamma_{c,i}(x), evaluated directly.
ComplexAlgebraic group_coefficient(const Group& g, const GammaTable& gamma, std::size_t c, const ExactVector& x,
                                   unsigned long j, unsigned long k);

}  // namespace past
