// Copyright (c) past contributors.
// SPDX-License-Identifier: Apache-2.0
// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>

#include "past/cli/commands.hpp"
#include "past/lifting/lift.hpp"
#include "past/loopmodel/simulate.hpp"
#include "past/witness/decide.hpp"
#include "support.hpp"

using namespace past;
using past::test::fixture;
using past::test::Gen;

namespace {

// Survival thresholds, frozen at half of a pilot run (500 runs, cap 1000,
// seed 1001) of the lifted inputs.
const Rational kThetaExample(81, 1000);
const Rational kThetaScale(1, 2);
constexpr std::uint64_t kSeed = 7;

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      if (!ok) detail << "; ";
      detail << what;
      ok = false;
    }
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

ComplexAlgebraic cq(long re, long im) { return {RealAlgebraic(re), RealAlgebraic(im)}; }
ComplexAlgebraic cq(Rational re, Rational im) { return {RealAlgebraic(re), RealAlgebraic(im)}; }

std::vector<Rational> rationals(const std::vector<RealAlgebraic>& v) {
  std::vector<Rational> out;
  for (const auto& e : v) out.push_back(e.rational());
  return out;
}

std::string cli_output(std::vector<std::string> args) {
  args.insert(args.begin(), "past");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return std::to_string(code) + "\n" + out.str();
}

void example_pipeline(Outcome& o) {
  auto t0 = Clock::now();
  Analysis an = analyze(load_loop_file(fixture("example3d.json")));
  const auto& sd = an.sd;
  const ExactVector a{cq(6, -8), cq(6, 8), cq(20, 0)}, b{cq(-12, 16), cq(-12, -16), cq(10, 0)};
  o.expect(sd.a == a && sd.b == b, "eigenpairs");
  const auto& g = an.gamma.g[0];
  o.expect(g[0] == LinearForm{cq(Rational(-1, 20), Rational(7, 20)), cq(Rational(-1, 20), Rational(-3, 20)),
                              cq(Rational(1, 2), 0)},
           "gamma_1");
  o.expect(g[1] == LinearForm{cq(Rational(-1, 20), Rational(-7, 20)), cq(Rational(-1, 20), Rational(3, 20)),
                              cq(Rational(1, 2), 0)},
           "gamma_2");
  o.expect(g[2] == LinearForm{cq(Rational(11, 10), 0), cq(Rational(11, 10), 0), cq(0, 0)}, "gamma_3");

  RealAlgebraic inner = RealAlgebraic(10) * sqrt_nonneg(RealAlgebraic(2));
  const auto& groups = an.table.groups;
  o.expect(groups.size() == 2, "group count");
  if (groups.size() == 2) {
    o.expect(groups[0].indices == std::vector<std::size_t>{0, 1} && groups[1].indices == std::vector<std::size_t>{2},
             "group members");
    for (std::size_t k = 0; k < 2; ++k) o.expect(exact_inner(groups[k].key, an.loop.p) == inner, "inner value");
    o.expect(groups[0].key.outer() == RealAlgebraic(Rational(1, 2)), "outer 1/2");
    o.expect(groups[1].key.outer() == RealAlgebraic(2), "outer 2");
  }

  auto member = membership_check({1, 1, 0}, an);
  o.expect(member && member->d == Direction::p, "(1,1,0) not in W_p");

  DecideConfig cfg;
  for (Semiring s : {Semiring::A, Semiring::Q, Semiring::Z}) {
    Verdict v = decide(an, s, cfg);
    o.expect(v.status == Status::nonterminating, std::string("verdict over ") + semiring_name(s));
    if (v.witness) {
      ExactVector x(v.witness->begin(), v.witness->end());
      o.expect(membership_check(x, an).has_value(), "reported witness fails membership");
    }
  }
  double secs = seconds_since(t0);
  o.expect(secs < 30, "took " + std::to_string(secs) + " s");
  o.detail << (o.ok ? "" : "; ") << "elapsed " << secs << " s";
}

void boundary(Outcome& o) {
  Analysis an = analyze(load_loop_file(fixture("example3d.json")));
  Gen g(2024);
  int positive = 0;
  for (int t = 0; t < 20; ++t) {
    std::vector<Rational> x = g.vec(3, 6, 4);
    if (t % 5 == 0) x[1] = -x[0];  // on the boundary
    bool expect_member = x[0] + x[1] > 0;
    positive += expect_member;
    bool member = membership_check(to_exact(x), an).has_value();
    o.expect(member == expect_member, "mismatch at (" + to_string(x[0]) + ", " + to_string(x[1]) + ", " +
                                          to_string(x[2]) + ")");
  }
  o.detail << (o.ok ? "" : "; ") << positive << " of 20 points inside";
}

void terminating_fixtures(Outcome& o) {
  DecideConfig cfg;
  for (const char* f : {"zero.json", "neg2.json", "rotation.json"}) {
    Analysis an = analyze(load_loop_file(fixture(f)));
    Verdict v = decide(an, Semiring::A, cfg);
    o.expect(v.status == Status::terminating, std::string(f) + " verdict");
    for (const auto& q : v.queries) o.expect(q.result == "unsat", std::string(f) + " query " + q.result);
  }
  Gen g(3);
  Loop neg = load_loop_file(fixture("neg2.json")), rot = load_loop_file(fixture("rotation.json"));
  std::uint64_t worst = 0;
  for (int t = 0; t < 20; ++t) {
    for (const auto& [loop, n] : {std::pair<const Loop*, std::size_t>{&neg, 1}, {&rot, 2}}) {
      std::vector<Rational> x;
      for (std::size_t i = 0; i < n; ++i) x.push_back(g.positive(9, 4));
      RunStats s = simulate(*loop, x, 100, 50, static_cast<std::uint64_t>(t));
      o.expect(s.survivors == 0, "survivor");
      for (auto r : s.runtimes) worst = std::max(worst, r);
    }
  }
  o.expect(worst <= 1, "runtime " + std::to_string(worst));
  o.detail << (o.ok ? "" : "; ") << "max runtime " << worst;
}

void oracle_equivalence(Outcome& o) {
  auto t0 = Clock::now();
  Gen g(4);
  int cases = 0;
  for (const char* f : {"example3d.json", "zero.json", "neg2.json", "rotation.json", "scale1d.json"}) {
    Analysis an = analyze(load_loop_file(fixture(f)));
    for (int t = 0; t < 200; ++t, ++cases) {
      ExactVector x = to_exact(g.vec(an.loop.n, 20, 6));
      auto j = static_cast<unsigned long>(g.integer(0, 6)), k = static_cast<unsigned long>(g.integer(0, 6));
      o.expect(guard_values(an.loop, x, j, k) == closed_form_values(an.sd, an.gamma, x, j, k),
               std::string(f) + " j=" + std::to_string(j) + " k=" + std::to_string(k));
    }
  }
  double secs = seconds_since(t0);
  o.expect(secs < 10, "took " + std::to_string(secs) + " s");
  o.detail << (o.ok ? "" : "; ") << cases << " cases in " << secs << " s";
}

void property_suites(Outcome& o) {
  std::string cmd = std::string("\"") + PAST_PROPERTY_BIN + "\" > /dev/null 2>&1";
  int rc = std::system(cmd.c_str());
  o.expect(rc == 0, "property_tests exit status " + std::to_string(rc));
}

GroupKey random_key(Gen& g) {
  auto mod = [&]() {
    RealAlgebraic v(g.positive(12, 4));
    if (g.coin()) v = sqrt_nonneg(v);
    return v;
  };
  return {mod(), mod()};
}

void transcendental(Outcome& o) {
  Gen g(6);
  int decided = 0;
  for (int t = 0; t < 50; ++t) {
    GroupKey a = random_key(g), b = t % 10 == 0 ? a : random_key(g);
    Rational p(g.integer(1, 15), 16);
    p.canonicalize();
    int exact = compare_inner_exact(a, b, p);
    auto logs = compare_inner_by_logs(a, b, RealAlgebraic(p), 512);
    if (exact != 0) {
      o.expect(logs == std::optional<int>(exact), "rational p disagreement");
      ++decided;
    } else {
      o.expect(!logs, "equal pair separated");
    }
  }
  RealAlgebraic half(Rational(1, 2));
  std::vector<RealAlgebraic> ps{sqrt_nonneg(RealAlgebraic(2)) - half, sqrt_nonneg(RealAlgebraic(3)) - RealAlgebraic(1),
                                RealAlgebraic(Rational(3, 2)) - sqrt_nonneg(RealAlgebraic(2))};
  int separated = 0;
  for (int t = 0; t < 60; ++t) {
    GroupKey a = random_key(g), b = random_key(g);
    if (a == b) continue;
    const RealAlgebraic& p = ps[static_cast<std::size_t>(t) % ps.size()];
    auto logs = compare_inner_by_logs(a, b, p, 512);
    o.expect(logs.has_value(), "unseparated pair for irrational p");
    if (logs) {
      ++separated;
      o.expect(*logs == compare_inner(a, b, p), "inconsistent irrational comparison");
    }
  }
  o.detail << (o.ok ? "" : "; ") << decided << " rational-p pairs decided, " << separated << " irrational-p pairs separated";
}

void lifting(Outcome& o) {
  struct Case {
    const char* file;
    ExactVector x;
    Rational theta;
  };
  std::string summary;
  for (const auto& c : {Case{"example3d.json", {1, 1, 0}, kThetaExample}, Case{"scale1d.json", {1}, kThetaScale}}) {
    Analysis an = analyze(load_loop_file(fixture(c.file)));
    auto cert = membership_check(c.x, an);
    o.expect(cert.has_value(), std::string(c.file) + " witness rejected");
    if (!cert) continue;
    for (const auto& m : cert->margins) o.expect(m.sign() > 0, "margin");
    LiftConstants k = compute_lift_constants(c.x, *cert, an);
    o.expect(band_holds(k, an.loop.p), std::string(c.file) + " band");
    o.expect(k.j + k.k == k.l && k.l > 0, "length split");
    LiftCertificate lc = lift_witness(an, c.x, k, cert->margins);
    for (const auto& v : lc.guard) o.expect(v.sign() > 0, std::string(c.file) + " guard");
    RunStats s = simulate(an.loop, rationals(lc.y), 500, 1000, kSeed);
    o.expect(s.survival_fraction >= c.theta, std::string(c.file) + " survival " + to_string(s.survival_fraction));
    summary += std::string(summary.empty() ? "" : "; ") + c.file + ": l=" + std::to_string(k.l) + " survival " +
               to_string(s.survival_fraction) + " vs " + to_string(c.theta);
  }
  o.detail << (o.ok ? "" : "; ") << summary;
}

void determinism(Outcome& o) {
  std::vector<std::vector<std::string>> runs{
      {"decide", fixture("example3d.json")},
      {"decide", fixture("example3d.json"), "--semiring", "Z"},
      {"witness", fixture("example3d.json"), "--lift"},
      {"witness", fixture("scale1d.json"), "--lift"},
      {"simulate", fixture("example3d.json"), "--input", "[1,1,0]", "--runs", "300", "--seed", "11"},
  };
  for (const auto& args : runs) {
    std::string first = cli_output(args), second = cli_output(args);
    o.expect(first == second, args[0] + " " + args[1] + " differs");
  }
}

}  // namespace

int main() {
  std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"example pipeline", example_pipeline},
      {"membership boundary", boundary},
      {"terminating fixtures", terminating_fixtures},
      {"closed form equals iteration", oracle_equivalence},
      {"property suites", property_suites},
      {"inner comparison by logarithms", transcendental},
      {"witness lifting", lifting},
      {"deterministic reports", determinism},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.expect(false, std::string("exception: ") + e.what());
    }
    all = all && o.ok;
    std::cout << "criterion " << i + 1 << ": " << (o.ok ? "PASS" : "FAIL") << "  " << criteria[i].first;
    std::string d = o.detail.str();
    if (!d.empty()) std::cout << " (" << d << ")";
    std::cout << std::endl;
  }
  return all ? 0 : 1;
}
