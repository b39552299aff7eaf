// Copyright (c) past contributors.
// SPDX-License-Identifier: Apache-2.0
#include "doctest.h"
#include "past/errors.hpp"
#include "past/loopmodel/simulate.hpp"
#include "support.hpp"

using namespace past;
using past::test::fixture;

namespace {
std::string loop_text(const std::string& p, const std::string& a, const std::string& b, const std::string& extra = "") {
  return R"({"n": 2, "m": 1, "p": )" + p + R"(, "C": [[1, 1]], "A": )" + a + R"(, "B": )" + b + extra + "}";
}
}  // namespace

TEST_CASE("semiring names") {
  for (Semiring s : {Semiring::N, Semiring::Z, Semiring::Qnonneg, Semiring::Q, Semiring::Anonneg, Semiring::A})
    CHECK(parse_semiring(semiring_name(s)) == s);
  CHECK(parse_semiring("R") == Semiring::A);
  CHECK(parse_semiring("Qnonneg") == Semiring::Qnonneg);
  CHECK_THROWS_AS(parse_semiring("C"), ParseError);
  CHECK(needs_integral(Semiring::N));
  CHECK(!needs_integral(Semiring::Q));
  CHECK(needs_rational(Semiring::Qnonneg));
  CHECK(!needs_rational(Semiring::Anonneg));
  CHECK(is_nonneg(Semiring::Anonneg));
  CHECK(in_semiring(RealAlgebraic(3), Semiring::N));
  CHECK(!in_semiring(RealAlgebraic(-3), Semiring::N));
  CHECK(!in_semiring(RealAlgebraic(Rational(1, 2)), Semiring::Z));
  CHECK(!in_semiring(sqrt_nonneg(RealAlgebraic(2)), Semiring::Q));
}

TEST_CASE("loading loops") {
  Loop l = load_loop_file(fixture("example3d.json"));
  CHECK(l.n == 3);
  CHECK(l.m == 1);
  CHECK(l.p == RealAlgebraic(Rational(1, 2)));
  CHECK(l.semiring == Semiring::A);
  CHECK(load_loop_file(fixture("example3d.json"), Semiring::Z).semiring == Semiring::Z);
  Loop s = load_loop_file(fixture("scale1d.json"));
  CHECK(s.B[0][0] == Rational(1, 2));
}

TEST_CASE("loop validation errors") {
  CHECK_THROWS_WITH_AS(load_loop_file(fixture("malformed.json")), "A[1]: expected 2 entries, found 1", ParseError);
  CHECK_THROWS_AS(load_loop_file(fixture("missing.json")), ParseError);
  CHECK_THROWS_AS(parse_loop("{\"n\": 2,"), ParseError);
  CHECK_THROWS_AS(parse_loop(loop_text("\"3/2\"", "[[1,0],[0,1]]", "[[1,0],[0,1]]")), ProbabilityOutOfRange);
  CHECK_THROWS_AS(parse_loop(loop_text("\"1/2\"", "[[1,0],[0,1]]", "[[1,0],[0,1]]", R"(, "extra": 1)")), ParseError);
  CHECK_THROWS_AS(parse_loop(loop_text("\"1/2\"", "[[0,1],[1,0]]", "[[1,0],[0,2]]")), NotCommuting);
  CHECK_THROWS_AS(parse_loop(loop_text("\"1/2\"", "[[1,1],[0,1]]", "[[1,0],[0,1]]")), NotDiagonalizable);
  CHECK_THROWS_AS(parse_loop(loop_text("\"1/2\"", "[[\"1/2\",0],[0,1]]", "[[1,0],[0,1]]"), Semiring::Z),
                  SemiringViolation);
  CHECK_THROWS_AS(parse_loop(loop_text("\"1/2\"", "[[-1,0],[0,1]]", "[[1,0],[0,1]]"), Semiring::N), SemiringViolation);
}

TEST_CASE("degenerate probabilities are normalized") {
  Loop l = parse_loop(loop_text("0", "[[2,0],[0,2]]", "[[3,0],[0,3]]"));
  CHECK(l.p == RealAlgebraic(Rational(1, 2)));
  CHECK(l.A == l.B);
  CHECK(l.A[0][0] == 3);
  CHECK(l.notes.size() == 1);
  Loop one = parse_loop(loop_text("1", "[[2,0],[0,2]]", "[[3,0],[0,3]]"));
  CHECK(one.B[0][0] == 2);
}

TEST_CASE("guard values") {
  Loop l = load_loop_file(fixture("example3d.json"));
  auto g = guard_values(l, to_exact({1, 1, 0}), 0, 0);
  CHECK(g == ExactVector{2});
  // A(1,1,0) = (16, 24, 6), sum 46
  CHECK(guard_values(l, to_exact({1, 1, 0}), 1, 0) == ExactVector{46});
}

TEST_CASE("random streams") {
  SplitMix64 a(7, 0), b(7, 0), c(7, 1), d(8, 0);
  std::uint64_t x = a.next();
  CHECK(x == b.next());
  CHECK(x != c.next());
  CHECK(x != d.next());
}

TEST_CASE("simulation on hand-analyzed loops") {
  Loop neg2 = load_loop_file(fixture("neg2.json"));
  RunStats s = simulate(neg2, {1}, 200, 1000, 3);
  CHECK(s.terminated == 200);
  CHECK(s.survivors == 0);
  CHECK(s.mean_runtime_of_terminated == Rational(1));
  CHECK(simulate(neg2, {-1}, 10, 100, 3).mean_runtime_of_terminated == Rational(0));

  Loop rot = load_loop_file(fixture("rotation.json"));
  RunStats r = simulate(rot, {1, 2}, 100, 100, 5);
  CHECK(r.terminated == 100);
  for (auto t : r.runtimes) CHECK(t == 1);

  Loop scale = load_loop_file(fixture("scale1d.json"));
  RunStats sc = simulate(scale, {1}, 100, 50, 9);
  CHECK(sc.survivors == 100);
  CHECK(sc.survival_fraction == 1);
  CHECK(!sc.mean_runtime_of_terminated);
}

TEST_CASE("simulation is deterministic across thread counts") {
  Loop l = load_loop_file(fixture("example3d.json"));
  RunStats one = simulate(l, {1, 1, 0}, 64, 200, 7, 1);
  RunStats four = simulate(l, {1, 1, 0}, 64, 200, 7, 4);
  CHECK(to_json(one).dump() == to_json(four).dump());
  CHECK(one.runtimes[5] == simulate_run(l, {1, 1, 0}, 200, 7, 5));
  CHECK_THROWS_AS(simulate(l, {1, 1}, 1, 1, 1), DimensionMismatch);
}
