// Copyright (c) past contributors.
// SPDX-License-Identifier: Apache-2.0
#include "doctest.h"
#include "past/errors.hpp"
#include "past/linalg/eigen.hpp"

using namespace past;

namespace {
ComplexAlgebraic cx(long re, long im) { return {RealAlgebraic(re), RealAlgebraic(im)}; }
}  // namespace

TEST_CASE("matrix basics") {
  ExactMatrix m = ExactMatrix::from_rational({{1, 2}, {3, 4}});
  ExactMatrix inv = inverse(m);
  CHECK(m * inv == ExactMatrix::identity(2));
  CHECK(inv(0, 0) == ComplexAlgebraic(-2));
  CHECK(inv(1, 0) == ComplexAlgebraic(Rational(3, 2)));
  CHECK(pow(m, 3) == m * m * m);
  CHECK(rank(ExactMatrix::from_rational({{1, 2}, {2, 4}})) == 1);
  CHECK_THROWS_AS(inverse(ExactMatrix::from_rational({{1, 2}, {2, 4}})), SingularMatrix);
  CHECK_THROWS_AS(past::apply(m, ExactVector{1, 2, 3}), DimensionMismatch);
  auto ker = kernel(ExactMatrix::from_rational({{1, 2}, {2, 4}}));
  REQUIRE(ker.size() == 1);
  CHECK(ker[0] == ExactVector{-2, 1});
  CHECK(rat_pow({{0, 1}, {1, 0}}, 5) == RatMatrix{{0, 1}, {1, 0}});
  CHECK(rat_apply({{1, 1}, {0, 1}}, {2, 3}) == std::vector<Rational>{5, 3});
}

TEST_CASE("characteristic and minimal polynomials") {
  auto cm = char_and_min_poly(ExactMatrix::identity(3));
  CHECK(cm.charpoly == RatPolynomial({-1, 3, -3, 1}));
  CHECK(cm.minpoly == RatPolynomial({-1, 1}));
  auto jordan = char_and_min_poly(ExactMatrix::from_rational({{2, 1}, {0, 2}}));
  CHECK(jordan.minpoly == jordan.charpoly);
}

TEST_CASE("complex roots") {
  auto r = complex_roots(RatPolynomial({100, -12, 1}));  // t^2 - 12t + 100 -> 6 +- 8i
  REQUIRE(r.size() == 2);
  CHECK(r[0] == cx(6, 8));
  CHECK(r[1] == cx(6, -8));
  auto cubic = complex_roots(RatPolynomial({-1, 0, 0, 1}));  // t^3 - 1
  REQUIRE(cubic.size() == 3);
  CHECK(cubic[0] == ComplexAlgebraic(1));
  for (const auto& z : cubic) CHECK(pow(z, 3) == ComplexAlgebraic(1));
}

TEST_CASE("commuting and diagonalizable checks") {
  auto a = ExactMatrix::from_rational({{1, 1}, {0, 1}});
  auto v = check_commuting_diagonalizable(a, a);
  REQUIRE(v);
  CHECK(v->kind == Violation::Kind::NotDiagonalizableA);
  auto b = ExactMatrix::from_rational({{0, 1}, {1, 0}});
  auto d = ExactMatrix::from_rational({{1, 0}, {0, 2}});
  REQUIRE(check_commuting_diagonalizable(b, d));
  CHECK(check_commuting_diagonalizable(b, d)->kind == Violation::Kind::NotCommuting);
  CHECK(!check_commuting_diagonalizable(b, b));
  CHECK_THROWS_AS(simultaneous_diagonalize(b, d), NotCommuting);
  CHECK_THROWS_AS(simultaneous_diagonalize(a, a), NotDiagonalizable);
}

TEST_CASE("simultaneous diagonalization of the three-dimensional example") {
  auto A = ExactMatrix::from_rational({{11, 5, -8}, {9, 15, 8}, {7, -1, 6}});
  auto B = ExactMatrix::from_rational({{-7, 5, 16}, {17, 5, -16}, {-9, 7, -12}});
  auto sd = simultaneous_diagonalize(A, B);
  CHECK(sd.a == ExactVector{cx(6, -8), cx(6, 8), 20});
  CHECK(sd.b == ExactVector{cx(-12, 16), cx(-12, -16), 10});
  CHECK(sd.sigma == std::vector<std::size_t>{1, 0, 2});
  ExactMatrix S(3, 3);
  std::vector<std::vector<ComplexAlgebraic>> s{{cx(0, -1), cx(0, 1), 3}, {cx(0, 1), cx(0, -1), 7}, {1, 1, 1}};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) S(i, j) = s[i][j];
  CHECK(sd.S == S);
  CHECK(sd.S * sd.S_inv == ExactMatrix::identity(3));
  CHECK(sd.S * ExactMatrix::diagonal(sd.a) * sd.S_inv == A);
  CHECK(sd.S * ExactMatrix::diagonal(sd.b) * sd.S_inv == B);
}

TEST_CASE("diagonalization with a repeated eigenvalue of A") {
  // A = I has one eigenspace; B separates it.
  auto A = ExactMatrix::identity(2);
  auto B = ExactMatrix::from_rational({{0, 1}, {1, 0}});
  auto sd = simultaneous_diagonalize(A, B);
  CHECK(sd.b == ExactVector{-1, 1});
  CHECK(sd.S * ExactMatrix::diagonal(sd.b) * sd.S_inv == B);
}
