// Copyright (c) past contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "json.hpp"
#include "past/exactnum/complex_algebraic.hpp"

namespace past {

using Json = nlohmann::ordered_json;

// Textual form of algebraic numbers: "num/den" (or "num") for rationals and
// {"poly": [c0, c1, ...], "interval": ["lo", "hi"]} otherwise. The interval
// written is the coarsest isolating dyadic cell, so output does not depend
// on how far a value happened to be refined.
Json to_json(const RealAlgebraic& x);
Json to_json(const ComplexAlgebraic& z);  // {"re": ..., "im": ...}

// Accepts strings, JSON integers and the polynomial object form.
// `where` names the field in error messages.
RealAlgebraic real_from_json(const Json& j, const std::string& where = "value");
Rational rational_from_json(const Json& j, const std::string& where = "value");

DyadicInterval canonical_interval(const RealAlgebraic& x);

}  // namespace past
