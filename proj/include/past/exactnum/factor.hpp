// Copyright (c) past contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "past/exactnum/polynomial.hpp"

namespace past {

struct Factor {
  IntPolynomial poly;  // irreducible over Q, positive leading coefficient
  int multiplicity = 1;
};

// Yun's square-free decomposition: p = content * prod f_i^i.
std::vector<Factor> squarefree_decomposition(const IntPolynomial& p);

// Complete factorization over Q into irreducible primitive factors
// (Zassenhaus: modular factorization, Hensel lifting, recombination).
// Constants are dropped. Output order is deterministic.
std::vector<Factor> factor(const IntPolynomial& p);

// Distinct irreducible factors only.
std::vector<IntPolynomial> irreducible_factors(const IntPolynomial& p);

}  // namespace past
