// Copyright (c) past contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>

#include "past/witness/decide.hpp"

namespace past {

// Process exit codes.
constexpr int kExitTerminating = 0;
constexpr int kExitNonterminating = 10;
constexpr int kExitUnknown = 20;
constexpr int kExitInputError = 2;
constexpr int kExitInternalError = 3;

int exit_code(Status s);

// Entry point of the `past` tool: decide, witness, explain, simulate.
// Reads PAST_SOLVER_CMD and PAST_TIMEOUT; flags take precedence.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace past
