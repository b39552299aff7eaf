// Copyright (c) past contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "past/lifting/lift.hpp"
#include "past/loopmodel/simulate.hpp"
#include "past/witness/decide.hpp"

namespace past {

// Human-readable renderings behind --pretty; JSON is the default.
std::string verdict_text(const Verdict& v, const Analysis& an, const LiftCertificate* lift, bool timings);
std::string run_stats_text(const RunStats& s);

}  // namespace past
