// Copyright (c) past contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "past/exactnum/text.hpp"
#include "past/witness/formula.hpp"
#include "past/witness/membership.hpp"
#include "past/witness/solver.hpp"

namespace past {

struct DecideConfig {
  SolverConfig solver;
  bool single_query = false;  // one union script instead of one query per disjunct
  bool timings = false;       // report solver seconds (breaks byte-identical output)
};

enum class Status { terminating, nonterminating, unknown };
const char* status_name(Status s);

struct QueryRecord {
  std::optional<Direction> d;  // empty for the union query
  std::vector<std::size_t> assignment;
  std::string result;  // sat, unsat, unknown, or a rewritten status such as sat-irrational
  double seconds = 0;
};

struct Verdict {
  Status status = Status::unknown;
  Semiring semiring = Semiring::A;
  std::optional<std::vector<RealAlgebraic>> witness;
  std::optional<Certificate> certificate;
  std::size_t disjuncts_raw = 0;
  std::size_t disjuncts = 0;
  std::vector<QueryRecord> queries;
  std::vector<std::string> notes;
};

Verdict decide(const Analysis& an, Semiring semiring, const DecideConfig& config);

// Multiplies x by the lcm of its denominators for Z and N; identity otherwise.
// Negative entries are rejected for the nonnegative semirings.
std::vector<Rational> scale_to_semiring(const std::vector<Rational>& x, Semiring semiring);

Json verdict_json(const Verdict& v, const Analysis& an, bool timings);

}  // namespace past
