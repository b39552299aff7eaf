// Copyright (c) past contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "past/linalg/matrix.hpp"

namespace past {

struct CharMinPoly {
  RatPolynomial charpoly;  // monic, det(tI - M)
  RatPolynomial minpoly;   // monic, divides charpoly
};

// Requires rational entries (InternalError otherwise); NonSquare on shape.
CharMinPoly char_and_min_poly(const ExactMatrix& m);

struct Violation {
  enum class Kind { NotCommuting, NotDiagonalizableA, NotDiagonalizableB, DimensionMismatch };
  Kind kind;
  std::string message;
};

std::optional<Violation> check_commuting_diagonalizable(const ExactMatrix& a, const ExactMatrix& b);

// Distinct complex roots of a nonzero rational polynomial. Order: real roots
// ascending, then non-real roots grouped per irreducible factor with the
// Im > 0 member of each conjugate pair directly before its mirror.
std::vector<ComplexAlgebraic> complex_roots(const RatPolynomial& p);

struct SpectralDecomposition {
  ExactMatrix S;
  ExactMatrix S_inv;
  ExactVector a;
  ExactVector b;
  std::vector<std::size_t> sigma;  // conjugate pairing, an involution
};

// Canonical simultaneous diagonalization of commuting diagonalizable
// rational matrices. Eigenpairs are ordered by (|a|, |b|, Re a, Re b,
// |Im a|, |Im b|); a conjugate pair is adjacent with the Im b > 0 member
// first (Im a > 0 when b is real). Each column of S is scaled so that its
// last nonzero entry is 1, and real eigenpairs get real columns.
// Throws NotCommuting / NotDiagonalizable.
SpectralDecomposition simultaneous_diagonalize(const ExactMatrix& a, const ExactMatrix& b);

}  // namespace past
