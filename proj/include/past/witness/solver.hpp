// Copyright (c) past contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "past/exactnum/real_algebraic.hpp"

namespace past {

struct SolverConfig {
  std::string command = "z3 -in";  // run through /bin/sh -c, script on stdin
  unsigned timeout_seconds = 60;
};

enum class SatStatus { sat, unsat, unknown };
const char* sat_status_name(SatStatus s);

struct SolverResult {
  SatStatus status = SatStatus::unknown;
  std::map<std::string, RealAlgebraic> model;  // only for sat
  std::string diagnostic;                      // timeout, stderr excerpt, ...
  double seconds = 0;
};

// Runs the solver on `script`. Throws SolverNotFound when the command cannot
// be executed and ModelParseError on unreadable model output; a timeout is
// reported as unknown with a diagnostic.
SolverResult run_solver(const std::string& script, const SolverConfig& config);

// Parses solver output: the check-sat answer, then an optional model.
SolverResult parse_solver_output(const std::string& output);

// S-expressions, as printed by SMT solvers.
struct SExpr {
  std::string atom;  // empty for lists
  std::vector<SExpr> list;
  bool is_atom() const { return !atom.empty(); }
};
std::vector<SExpr> parse_sexprs(const std::string& text);

// Value of a model term: numerals, decimals, (- v), (/ a b), (+ ...), (* ...)
// and (root-obj poly k), the k-th smallest real root of poly.
RealAlgebraic model_value(const SExpr& e);

}  // namespace past
