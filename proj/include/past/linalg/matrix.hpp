// Copyright (c) past contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "past/exactnum/complex_algebraic.hpp"
#include "past/exactnum/polynomial.hpp"

namespace past {

using ExactVector = std::vector<ComplexAlgebraic>;

// Dense row-major matrix over complex algebraic numbers.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols);
  static ExactMatrix identity(std::size_t n);
  static ExactMatrix from_rational(const RatMatrix& m);
  static ExactMatrix diagonal(const ExactVector& d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  ComplexAlgebraic& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const ComplexAlgebraic& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  bool is_real() const;
  bool is_rational() const;
  // Throws InternalError unless every entry is rational.
  RatMatrix to_rational() const;

  ExactVector row(std::size_t i) const;
  ExactVector column(std::size_t j) const;
  ExactMatrix transpose() const;
  ExactMatrix conj() const;

  friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator*(const ComplexAlgebraic& s, const ExactMatrix& a);
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<ComplexAlgebraic> e_;
};

ExactMatrix mul(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix pow(const ExactMatrix& m, unsigned long e);
// Gauss-Jordan inverse; SingularMatrix if det = 0.
ExactMatrix inverse(const ExactMatrix& m);
ExactVector apply(const ExactMatrix& m, const ExactVector& x);

// Basis of the right kernel read off the reduced row echelon form: one
// vector per free column, carrying 1 there and 0 at the other free columns.
std::vector<ExactVector> kernel(const ExactMatrix& m);
std::size_t rank(const ExactMatrix& m);

// Rational helpers used on hot paths (simulation, guard checks).
RatMatrix rat_mul(const RatMatrix& a, const RatMatrix& b);
RatMatrix rat_identity(std::size_t n);
RatMatrix rat_pow(const RatMatrix& m, unsigned long e);
std::vector<Rational> rat_apply(const RatMatrix& m, const std::vector<Rational>& x);

}  // namespace past
