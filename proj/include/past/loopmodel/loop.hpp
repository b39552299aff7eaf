// Copyright (c) past contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "past/exactnum/text.hpp"
#include "past/linalg/matrix.hpp"

namespace past {

enum class Semiring { N, Z, Qnonneg, Q, Anonneg, A };

// Display names: N, Z, Q+, Q, A+, A.
std::string semiring_name(Semiring s);
// Accepts the display names plus "Qnonneg", "Anonneg" and "R" (an alias of A:
// both are real closed fields, so the verdicts coincide).
Semiring parse_semiring(const std::string& s);
bool is_nonneg(Semiring s);
// N, Z, Q+ and Q need a rational witness; N and Z an integral one.
bool needs_rational(Semiring s);
bool needs_integral(Semiring s);

// while (Cx > 0) { x <- Ax with probability p, else x <- Bx }
struct Loop {
  std::size_t n = 0;
  std::size_t m = 0;
  ExactMatrix C;  // m x n, real algebraic entries
  RatMatrix A;
  RatMatrix B;
  RealAlgebraic p;  // in (0, 1) after normalization
  Semiring semiring = Semiring::A;
  std::vector<std::string> notes;  // normalization and scope diagnostics

  ExactMatrix A_exact() const { return ExactMatrix::from_rational(A); }
  ExactMatrix B_exact() const { return ExactMatrix::from_rational(B); }
  bool c_is_rational() const { return C.is_rational(); }
};

// Parses and validates a loop document. Throws ParseError (with line/column
// or field path), ProbabilityOutOfRange, SemiringViolation, NotCommuting and
// NotDiagonalizable. `semiring_override` replaces the file's "semiring" key.
Loop parse_loop(const std::string& text, std::optional<Semiring> semiring_override = std::nullopt);
Loop parse_loop_json(const Json& doc, std::optional<Semiring> semiring_override = std::nullopt);
Loop load_loop_file(const std::string& path, std::optional<Semiring> semiring_override = std::nullopt);

// Throws SemiringViolation if an entry of A or B lies outside s.
void check_semiring(const Loop& loop, Semiring s);
bool in_semiring(const RealAlgebraic& v, Semiring s);

// C * A^j * B^k * x.
ExactVector guard_values(const Loop& loop, const ExactVector& x, unsigned long j, unsigned long k);
ExactVector to_exact(const std::vector<Rational>& x);

}  // namespace past
