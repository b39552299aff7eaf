// Copyright (c) past contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "past/linalg/eigen.hpp"
#include "past/loopmodel/loop.hpp"

namespace past {

// Coefficient vectors of linear forms over x.
using LinearForm = std::vector<ComplexAlgebraic>;
using RealForm = std::vector<RealAlgebraic>;

ComplexAlgebraic eval_form(const LinearForm& f, const ExactVector& x);
RealAlgebraic eval_form(const RealForm& f, const ExactVector& x);  // x must be real
bool is_zero_form(const RealForm& f);
RealForm real_part(const LinearForm& f);
RealForm imag_part(const LinearForm& f);
LinearForm add_forms(const LinearForm& a, const LinearForm& b);

// gamma_{c,i}(x) = (C S)_{c,i} (S^-1 x)_i, stored as g[c][i][k].
struct GammaTable {
  std::size_t m = 0;
  std::size_t n = 0;
  std::vector<std::vector<LinearForm>> g;

  ComplexAlgebraic eval(std::size_t c, std::size_t i, const ExactVector& x) const { return eval_form(g[c][i], x); }
};

GammaTable compute_gamma(const Loop& loop, const SpectralDecomposition& sd);

// sum_i a_i^j b_i^k gamma_{c,i}(x) for every constraint c.
ExactVector closed_form_values(const SpectralDecomposition& sd, const GammaTable& gamma, const ExactVector& x,
                               unsigned long j, unsigned long k);

}  // namespace past
