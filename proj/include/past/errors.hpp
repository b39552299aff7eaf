// Copyright (c) past contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace past {

// Base for every error the engine raises. kind() is the stable name used in
// diagnostics and tests.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define PAST_DEFINE_ERROR(Name)                                  \
  class Name : public Error {                                    \
   public:                                                       \
    explicit Name(const std::string& message = #Name)            \
        : Error(#Name, message) {}                               \
  };

PAST_DEFINE_ERROR(DivisionByZero)
PAST_DEFINE_ERROR(NegativeRadicand)
PAST_DEFINE_ERROR(NonPositiveArgument)
PAST_DEFINE_ERROR(NonSquare)
PAST_DEFINE_ERROR(SingularMatrix)
PAST_DEFINE_ERROR(DimensionMismatch)
PAST_DEFINE_ERROR(ParseError)
PAST_DEFINE_ERROR(NotCommuting)
PAST_DEFINE_ERROR(NotDiagonalizable)
PAST_DEFINE_ERROR(ProbabilityOutOfRange)
PAST_DEFINE_ERROR(SemiringViolation)
PAST_DEFINE_ERROR(SolverNotFound)
PAST_DEFINE_ERROR(SolverTimeout)
PAST_DEFINE_ERROR(ModelParseError)
PAST_DEFINE_ERROR(NoCertificate)
PAST_DEFINE_ERROR(GuardViolatedAtLift)
PAST_DEFINE_ERROR(NegativeEntryForNonnegSemiring)
PAST_DEFINE_ERROR(InternalError)

#undef PAST_DEFINE_ERROR

}  // namespace past
