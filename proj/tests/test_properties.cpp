// Copyright (c) past contributors.
// SPDX-License-Identifier: Apache-2.0
// Randomized properties. Every case count is at least 100.
#include <cmath>

#include "doctest.h"
#include "past/exactnum/log_interval.hpp"
#include "past/lifting/lift.hpp"
#include "past/loopmodel/simulate.hpp"
#include "past/witness/decide.hpp"
#include "past/witness/smtlib.hpp"
#include "support.hpp"

using namespace past;
using past::test::Gen;

namespace {

constexpr int kCases = 100;

RatMatrix rat_inverse(const RatMatrix& m) { return inverse(ExactMatrix::from_rational(m)).to_rational(); }

RatMatrix random_invertible(Gen& g, std::size_t n) {
  while (true) {
    RatMatrix s(n, std::vector<Rational>(n));
    for (auto& row : s)
      for (auto& e : row) e = g.integer(-3, 3);
    if (rank(ExactMatrix::from_rational(s)) == n) return s;
  }
}

// Commuting diagonalizable pair S D_A S^-1, S D_B S^-1 where D_A, D_B are
// block diagonal with 1x1 real blocks and 2x2 rotation-scaling blocks.
std::pair<RatMatrix, RatMatrix> random_commuting_pair(Gen& g, std::size_t n) {
  RatMatrix da(n, std::vector<Rational>(n)), db = da;
  std::size_t i = 0;
  while (i < n) {
    if (i + 1 < n && g.integer(0, 2) == 0) {
      long a = g.integer(-3, 3), b = g.integer(1, 3), c = g.integer(-3, 3), d = g.integer(-3, 3);
      if (d == 0) d = 1;
      da[i][i] = a, da[i][i + 1] = -b, da[i + 1][i] = b, da[i + 1][i + 1] = a;
      db[i][i] = c, db[i][i + 1] = -d, db[i + 1][i] = d, db[i + 1][i + 1] = c;
      i += 2;
    } else {
      da[i][i] = g.integer(-4, 4);
      db[i][i] = g.integer(-4, 4);
      if (g.integer(0, 3) == 0) db[i][i] = Rational(g.integer(1, 4), g.integer(1, 3));
      ++i;
    }
  }
  RatMatrix s = random_invertible(g, n), si = rat_inverse(s);
  return {rat_mul(rat_mul(s, da), si), rat_mul(rat_mul(s, db), si)};
}

Loop random_loop(Gen& g, std::size_t max_n = 3) {
  Loop l;
  l.n = static_cast<std::size_t>(g.integer(1, static_cast<long>(max_n)));
  l.m = static_cast<std::size_t>(g.integer(1, 2));
  auto [a, b] = random_commuting_pair(g, l.n);
  l.A = a;
  l.B = b;
  l.C = ExactMatrix(l.m, l.n);
  for (std::size_t c = 0; c < l.m; ++c)
    for (std::size_t k = 0; k < l.n; ++k) l.C(c, k) = ComplexAlgebraic(g.integer(-3, 3));
  static const Rational ps[] = {Rational(1, 2), Rational(1, 3), Rational(2, 3), Rational(1, 4), Rational(3, 4)};
  l.p = RealAlgebraic(ps[g.integer(0, 4)]);
  return l;
}

// Loop whose witness set is likely nonempty: positive real spectrum.
Loop random_positive_loop(Gen& g, std::size_t n) {
  Loop l;
  l.n = n;
  l.m = 1;
  RatMatrix da(n, std::vector<Rational>(n)), db = da;
  for (std::size_t i = 0; i < n; ++i) {
    da[i][i] = Rational(g.integer(1, 6), g.integer(1, 2));
    db[i][i] = Rational(g.integer(1, 6), g.integer(1, 2));
  }
  RatMatrix s = random_invertible(g, n), si = rat_inverse(s);
  l.A = rat_mul(rat_mul(s, da), si);
  l.B = rat_mul(rat_mul(s, db), si);
  l.C = ExactMatrix(1, n);
  for (std::size_t k = 0; k < n; ++k) l.C(0, k) = ComplexAlgebraic(g.integer(-2, 3));
  l.p = RealAlgebraic(Rational(g.integer(1, 3), 4));
  return l;
}

ExactVector random_point(Gen& g, std::size_t n) { return to_exact(g.vec(n, 5, 3)); }

ExactVector scaled(const ExactVector& x, const Rational& q) {
  ExactVector y;
  for (const auto& v : x) y.push_back(ComplexAlgebraic(q) * v);
  return y;
}

bool formula_holds(const WitnessFormula& f, const ExactVector& x) {
  for (const auto& k : f.constraints) {
    for (const auto& e : k.equalities)
      if (!eval_form(e, x).is_zero()) return false;
    RealAlgebraic margin = eval_form(k.positivity.lhs, x);
    for (const auto& m : k.positivity.moduli) margin -= eval_form(m, x).modulus();
    if (margin.sign() <= 0) return false;
  }
  return true;
}

RealAlgebraic random_algebraic(Gen& g) {
  RealAlgebraic v(g.rational(9, 5));
  if (g.coin()) v += sqrt_nonneg(RealAlgebraic(g.positive(20, 4)));
  if (g.integer(0, 3) == 0) v += nth_root(RealAlgebraic(g.integer(2, 9)), 3);
  return v;
}

GroupKey random_key(Gen& g) {
  auto mod = [&]() {
    RealAlgebraic v(g.positive(12, 4));
    if (g.integer(0, 2) == 0) v = sqrt_nonneg(v);
    return v;
  };
  return {mod(), mod()};
}

}  // namespace

TEST_CASE("rational text round trip") {
  Gen g(1);
  for (int t = 0; t < kCases * 5; ++t) {
    Rational q = g.rational(1000000, 1000);
    CHECK(parse_rational(to_string(q)) == q);
    auto e = parse_sexprs(smt_rational(q));
    REQUIRE(e.size() == 1);
    CHECK(model_value(e[0]) == RealAlgebraic(q));
  }
}

TEST_CASE("polynomial division identity") {
  Gen g(2);
  for (int t = 0; t < kCases * 2; ++t) {
    std::vector<Rational> ca, cb;
    for (long i = 0, d = g.integer(0, 6); i <= d; ++i) ca.push_back(g.rational(9, 4));
    for (long i = 0, d = g.integer(0, 4); i <= d; ++i) cb.push_back(g.rational(9, 4));
    cb.back() = g.positive(9, 4);
    RatPolynomial a(ca), b(cb);
    auto [q, r] = divmod(a, b);
    CHECK(q * b + r == a);
    CHECK(r.degree() < b.degree());
    RatPolynomial h = gcd(a * b, b);
    CHECK(h == b.monic());
  }
}

TEST_CASE("algebraic arithmetic agrees with floating point and field laws") {
  Gen g(3);
  for (int t = 0; t < kCases; ++t) {
    RealAlgebraic x = random_algebraic(g), y = random_algebraic(g);
    CHECK((x + y) - y == x);
    CHECK(std::abs((x * y).to_double() - x.to_double() * y.to_double()) < 1e-9 * (1 + std::abs(x.to_double() * y.to_double())));
    int c = compare(x, y);
    CHECK(c == -compare(y, x));
    if (std::abs(x.to_double() - y.to_double()) > 1e-9) CHECK(c == (x.to_double() < y.to_double() ? -1 : 1));
    if (!x.is_zero()) CHECK(x * x.inverse() == RealAlgebraic(1));
    RealAlgebraic sq = x * x;
    CHECK(sqrt_nonneg(sq) == abs(x));
    CHECK(real_from_json(to_json(x)) == x);
  }
}

TEST_CASE("root isolation recovers planted roots") {
  Gen g(4);
  for (int t = 0; t < kCases; ++t) {
    std::vector<Rational> roots;
    RatPolynomial p = RatPolynomial::constant(1);
    for (long i = 0, k = g.integer(1, 4); i < k; ++i) {
      Rational r = g.rational(20, 6);
      roots.push_back(r);
      p = p * RatPolynomial({-r, Rational(1)});
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    auto found = isolate_real_roots(IntPolynomial::from_rational(p));
    REQUIRE(found.size() == roots.size());
    for (std::size_t i = 0; i < roots.size(); ++i) CHECK(found[i] == RealAlgebraic(roots[i]));
  }
}

TEST_CASE("logarithm enclosures contain the logarithm and nest") {
  Gen g(5);
  for (int t = 0; t < kCases; ++t) {
    RealAlgebraic x(g.positive(1000, 100));
    if (g.coin()) x = sqrt_nonneg(x);
    double ref = std::log(x.to_double());
    auto c = log_interval(x, 20), f = log_interval(x, 60);
    CHECK(c.contains(f));
    CHECK(f.width() <= pow2(-60));
    CHECK(f.lo.get_d() <= ref + 1e-12);
    CHECK(f.hi.get_d() >= ref - 1e-12);
  }
}

TEST_CASE("matrix inverse") {
  Gen g(6);
  for (int t = 0; t < kCases; ++t) {
    std::size_t n = static_cast<std::size_t>(g.integer(1, 4));
    RatMatrix m = random_invertible(g, n);
    ExactMatrix e = ExactMatrix::from_rational(m);
    CHECK(e * inverse(e) == ExactMatrix::identity(n));
  }
}

TEST_CASE("simultaneous diagonalization reconstructs both matrices") {
  Gen g(7);
  for (int t = 0; t < kCases; ++t) {
    std::size_t n = static_cast<std::size_t>(g.integer(1, 3));
    auto [a, b] = random_commuting_pair(g, n);
    ExactMatrix A = ExactMatrix::from_rational(a), B = ExactMatrix::from_rational(b);
    auto sd = simultaneous_diagonalize(A, B);
    CHECK(sd.S * sd.S_inv == ExactMatrix::identity(n));
    CHECK(sd.S * ExactMatrix::diagonal(sd.a) * sd.S_inv == A);
    CHECK(sd.S * ExactMatrix::diagonal(sd.b) * sd.S_inv == B);
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(sd.sigma[sd.sigma[i]] == i);
      CHECK(sd.a[sd.sigma[i]] == sd.a[i].conj());
      CHECK(sd.b[sd.sigma[i]] == sd.b[i].conj());
    }
  }
}

TEST_CASE("gamma recomposition and update compatibility") {
  Gen g(8);
  for (int t = 0; t < kCases; ++t) {
    Loop l = random_loop(g);
    Analysis an = analyze(l);
    ExactVector x = random_point(g, l.n), y = random_point(g, l.n);
    ExactVector cx = past::apply(l.C, x);
    ExactVector ax = past::apply(l.A_exact(), x), bx = past::apply(l.B_exact(), x);
    ExactVector axy, bxy;
    for (std::size_t k = 0; k < l.n; ++k) {
      axy.push_back(ax[k] + y[k]);
      bxy.push_back(bx[k] + y[k]);
    }
    for (std::size_t c = 0; c < l.m; ++c) {
      ComplexAlgebraic s;
      for (std::size_t i = 0; i < l.n; ++i) {
        s += an.gamma.eval(c, i, x);
        CHECK(an.gamma.eval(c, i, axy) == an.sd.a[i] * an.gamma.eval(c, i, x) + an.gamma.eval(c, i, y));
        CHECK(an.gamma.eval(c, i, bxy) == an.sd.b[i] * an.gamma.eval(c, i, x) + an.gamma.eval(c, i, y));
      }
      CHECK(s == cx[c]);
    }
  }
}

TEST_CASE("group coefficients have zero imaginary part") {
  Gen g(9);
  for (int t = 0; t < kCases; ++t) {
    Loop l = random_loop(g);
    Analysis an = analyze(l);
    ExactVector x = random_point(g, l.n);
    unsigned long j = static_cast<unsigned long>(g.integer(0, 5)), k = static_cast<unsigned long>(g.integer(0, 5));
    for (std::size_t c = 0; c < l.m; ++c)
      for (const auto& grp : an.table.groups) CHECK(group_coefficient(grp, an.gamma, c, x, j, k).im.is_zero());
  }
}

TEST_CASE("membership is homogeneous under positive scaling") {
  Gen g(10);
  int members = 0;
  for (int t = 0; t < kCases * 2; ++t) {
    Loop l = t % 2 ? random_loop(g) : random_positive_loop(g, static_cast<std::size_t>(g.integer(1, 3)));
    Analysis an = analyze(l);
    ExactVector x = random_point(g, l.n);
    Rational q = g.positive(7, 5);
    auto a = membership_check(x, an), b = membership_check(scaled(x, q), an);
    REQUIRE(a.has_value() == b.has_value());
    if (!a) continue;
    ++members;
    CHECK(a->d == b->d);
    CHECK(a->assignment == b->assignment);
    for (std::size_t c = 0; c < a->margins.size(); ++c) CHECK(b->margins[c] == RealAlgebraic(q) * a->margins[c]);
  }
  CHECK(members >= kCases / 4);
}

TEST_CASE("witness pieces are convex") {
  Gen g(11);
  int pairs = 0;
  for (int t = 0; pairs < kCases && t < 50 * kCases; ++t) {
    Loop l = t % 2 ? random_loop(g) : random_positive_loop(g, static_cast<std::size_t>(g.integer(1, 3)));
    Analysis an = analyze(l);
    ExactVector x = random_point(g, l.n), y = random_point(g, l.n);
    auto cx = membership_check(x, an), cy = membership_check(y, an);
    if (!cx || !cy || cx->d != cy->d || cx->assignment != cy->assignment) continue;
    ++pairs;
    Rational s(g.integer(1, 9), 10);
    ExactVector z;
    for (std::size_t k = 0; k < l.n; ++k) z.push_back(ComplexAlgebraic(s) * x[k] + ComplexAlgebraic(1 - s) * y[k]);
    auto cz = membership_check(z, an);
    REQUIRE(cz);
    // z lies in W_{d, c}; membership may still report d = p first.
    if (cz->d == cx->d) CHECK(cz->assignment == cx->assignment);
    bool in_piece = false;
    for (const auto& f : build_witness_formulas(an, Semiring::A).formulas)
      if (f.d == cx->d && f.assignment == cx->assignment) in_piece = formula_holds(f, z);
    CHECK(in_piece);
  }
  CHECK(pairs == kCases);
}

TEST_CASE("witness formulas are disjoint per direction and match membership") {
  Gen g(12);
  for (int t = 0; t < kCases * 2; ++t) {
    Loop l = t % 2 ? random_loop(g) : random_positive_loop(g, static_cast<std::size_t>(g.integer(1, 3)));
    Analysis an = analyze(l);
    ExactVector x = random_point(g, l.n);
    if (g.integer(0, 3) == 0) x[0] = ComplexAlgebraic(0);
    FormulaSet fs = build_witness_formulas(an, Semiring::A);
    int per_d[2] = {0, 0};
    std::optional<std::pair<Direction, std::vector<std::size_t>>> first;
    for (const auto& f : fs.formulas)
      if (formula_holds(f, x)) {
        ++per_d[f.d == Direction::p ? 0 : 1];
        if (!first) first.emplace(f.d, f.assignment);
      }
    CHECK(per_d[0] <= 1);
    CHECK(per_d[1] <= 1);
    auto cert = membership_check(x, an);
    REQUIRE(cert.has_value() == first.has_value());
    if (cert) {
      CHECK(cert->d == first->first);
      CHECK(cert->assignment == first->second);
    }
  }
}

TEST_CASE("lex order on group keys is a total order") {
  Gen g(13);
  for (int t = 0; t < kCases; ++t) {
    GroupKey a = random_key(g), b = random_key(g), c = random_key(g);
    RealAlgebraic p(Rational(g.integer(1, 7), 8));
    for (Direction d : {Direction::p, Direction::n}) {
      CHECK(lex_compare_groups(a, a, p, d) == 0);
      int ab = lex_compare_groups(a, b, p, d), bc = lex_compare_groups(b, c, p, d), ac = lex_compare_groups(a, c, p, d);
      CHECK(ab == -lex_compare_groups(b, a, p, d));
      if (ab <= 0 && bc <= 0) CHECK(ac <= 0);
      if (ab >= 0 && bc >= 0) CHECK(ac >= 0);
      if (ab == 0) CHECK(a == b);
    }
  }
}

TEST_CASE("inner comparison by logarithms agrees with exact powers") {
  Gen g(14);
  for (int t = 0; t < kCases; ++t) {
    GroupKey a = random_key(g), b = random_key(g);
    Rational p(g.integer(1, 11), 12);
    p.canonicalize();
    int exact = compare_inner_exact(a, b, p);
    auto logs = compare_inner_by_logs(a, b, RealAlgebraic(p), 512);
    if (exact != 0) {
      REQUIRE(logs);
      CHECK(*logs == exact);
    }
    CHECK(compare_inner(a, b, RealAlgebraic(p)) == exact);
  }
}

TEST_CASE("simulation is reproducible and consistent") {
  Gen g(15);
  for (int t = 0; t < kCases; ++t) {
    Loop l = random_loop(g, 2);
    std::vector<Rational> x = g.vec(l.n, 5, 3);
    std::uint64_t seed = static_cast<std::uint64_t>(g.integer(0, 1 << 30));
    RunStats a = simulate(l, x, 20, 30, seed), b = simulate(l, x, 20, 30, seed, 3);
    CHECK(to_json(a).dump() == to_json(b).dump());
    CHECK(a.terminated + a.survivors == 20);
    for (std::uint64_t r = 0; r < 20; ++r) {
      std::uint64_t rt = a.runtimes[r];
      CHECK(rt <= 30);
      // The guard holds before the runtime and fails at it, on the exact replay.
      if (rt < 30) CHECK(simulate_run(l, x, 30, seed, r) == rt);
    }
    bool holds0 = true;
    for (const auto& v : guard_values(l, to_exact(x), 0, 0)) holds0 = holds0 && v.re.sign() > 0;
    if (!holds0) CHECK(a.mean_runtime_of_terminated == Rational(0));
  }
}

TEST_CASE("scaling to integers keeps direction") {
  Gen g(16);
  for (int t = 0; t < kCases; ++t) {
    std::vector<Rational> x;
    for (long i = 0, n = g.integer(1, 5); i < n; ++i) x.push_back(abs(g.rational(50, 12)));
    auto y = scale_to_semiring(x, Semiring::N);
    std::optional<Rational> ratio;
    for (std::size_t i = 0; i < x.size(); ++i) {
      CHECK(y[i].get_den() == 1);
      if (x[i] == 0) {
        CHECK(y[i] == 0);
        continue;
      }
      Rational q = y[i] / x[i];
      CHECK(q > 0);
      if (ratio) CHECK(q == *ratio);
      ratio = q;
    }
  }
}

TEST_CASE("lifting satisfies the band and the guard") {
  Gen g(17);
  int lifted = 0;
  for (int t = 0; lifted < kCases && t < 20 * kCases; ++t) {
    Loop l = random_positive_loop(g, static_cast<std::size_t>(g.integer(1, 2)));
    Analysis an = analyze(l);
    ExactVector x = random_point(g, l.n);
    auto cert = membership_check(x, an);
    if (!cert) continue;
    ++lifted;
    LiftConstants c = compute_lift_constants(x, *cert, an);
    CHECK(band_holds(c, l.p));
    LiftCertificate lc = lift_witness(an, x, c, cert->margins);
    for (const auto& v : lc.guard) CHECK(v.sign() > 0);
    CHECK(necessary_condition(ExactVector(lc.y.begin(), lc.y.end()), an));
  }
  CHECK(lifted == kCases);
}
