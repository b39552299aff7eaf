// Copyright (c) past contributors.
// SPDX-License-Identifier: Apache-2.0
#include "past/lifting/lift.hpp"

#include <functional>

#include "past/errors.hpp"
#include "past/exactnum/log_interval.hpp"

namespace past {

namespace {

constexpr long kMinBits = 64;
constexpr long kMaxBits = 1024;

// True once diff(bits) is certified positive; false if certified negative or
// never separated from 0.
bool certified_positive(const std::function<DyadicInterval(long)>& diff) {
  for (long bits = kMinBits; bits <= kMaxBits; bits *= 2) {
    auto iv = diff(bits);
    if (iv.lo > 0) return true;
    if (iv.hi < 0) return false;
  }
  return false;
}

// ln of a positive real, from a rational enclosure of the value itself.
DyadicInterval ln_positive(const RealAlgebraic& v, long bits) {
  if (v.is_rational()) return ln_bounds(v.rational(), bits);
  return log_interval(v, bits);
}

DyadicInterval max_interval(const DyadicInterval& a, const DyadicInterval& b) {
  return {std::max(a.lo, b.lo), std::max(a.hi, b.hi)};
}

// ln of the outer value, oriented so that larger is lex-greater for d.
DyadicInterval ln_outer(const GroupKey& k, Direction d, long bits) {
  DyadicInterval v = ln_positive(k.mod_a, bits) - ln_positive(k.mod_b, bits);
  return d == Direction::p ? v : -v;
}

Integer floor_real(const RealAlgebraic& v) {
  if (v.is_rational()) return floor_of(v.rational());
  for (long bits = 16;; bits *= 2) {
    auto iv = v.enclosure(bits);
    Integer lo = floor_of(iv.lo);
    if (lo == floor_of(iv.hi)) return lo;
  }
}

// Per-constraint data shared by the three searches.
struct ConstraintData {
  const GroupKey* top;
  std::vector<const GroupKey*> same;   // same inner, lex-lower outer
  std::vector<const GroupKey*> lower;  // strictly smaller inner
  RealAlgebraic t;                     // rho / 2
  RealAlgebraic total;                 // sum_i |gamma_{c,i}(x)|
};

unsigned long least_r(const ConstraintData& cd, Direction d) {
  if (cd.same.empty()) return 0;
  const GroupKey* second = cd.same[0];
  for (const auto* g : cd.same)
    if (certified_positive([&](long b) { return ln_outer(*g, d, b) - ln_outer(*second, d, b); })) second = g;
  auto ln_ratio = [&](long b) { return ln_outer(*cd.top, d, b) - ln_outer(*second, d, b); };
  // t * ratio^r > total
  auto passes = [&](unsigned long r) {
    return certified_positive([&](long b) {
      return ln_positive(cd.t, b) + Rational(r) * ln_ratio(b) - ln_positive(cd.total, b);
    });
  };
  if (passes(0)) return 0;
  DyadicInterval gap = ln_positive(cd.total, kMinBits) - ln_positive(cd.t, kMinBits);
  DyadicInterval lr = ln_ratio(kMinBits);
  Rational est = lr.lo > 0 ? Rational(gap.lo / lr.hi) : Rational(0);
  unsigned long r = est > 2 ? floor_of(est).get_ui() - 2 : 0;
  while (!passes(r)) ++r;
  while (r > 0 && passes(r - 1)) --r;
  return r;
}

// ln(inner) + u ln(outer) for the designated group minus the same for g.
DyadicInterval band_gap(const GroupKey& top, const GroupKey& g, const RealAlgebraic& p, Direction d, const Rational& u,
                        long bits) {
  return (log_inner_enclosure(top, p, bits) + u * ln_outer(top, d, bits)) -
         (log_inner_enclosure(g, p, bits) + u * ln_outer(g, d, bits));
}

// l (inner_top outer_top^u) + ln t > ln|L| + ln total + l max_g (inner_g outer_g^u)
bool growth_holds(const ConstraintData& cd, const RealAlgebraic& p, Direction d, const Rational& u, unsigned long l) {
  if (cd.lower.empty()) return true;
  return certified_positive([&](long b) {
    DyadicInterval top = log_inner_enclosure(*cd.top, p, b) + u * ln_outer(*cd.top, d, b);
    DyadicInterval best;
    for (std::size_t i = 0; i < cd.lower.size(); ++i) {
      DyadicInterval v = log_inner_enclosure(*cd.lower[i], p, b) + u * ln_outer(*cd.lower[i], d, b);
      best = i == 0 ? v : max_interval(best, v);
    }
    Rational lq(l);
    return (lq * top + ln_positive(cd.t, b)) -
           (ln_bounds(Rational(cd.lower.size()), b) + ln_positive(cd.total, b) + lq * best);
  });
}

}  // namespace

LiftConstants compute_lift_constants(const ExactVector& x, const Analysis& an) {
  auto cert = membership_check(x, an);
  if (!cert) throw NoCertificate("the point is not in the witness set");
  return compute_lift_constants(x, *cert, an);
}

LiftConstants compute_lift_constants(const ExactVector& x, const Certificate& cert, const Analysis& an) {
  if (cert.assignment.size() != an.loop.m || cert.margins.size() != an.loop.m)
    throw NoCertificate("certificate does not cover every constraint");
  const RealAlgebraic& p = an.loop.p;
  const Direction d = cert.d;
  std::vector<ConstraintData> data;
  for (std::size_t c = 0; c < an.loop.m; ++c) {
    if (cert.margins[c].sign() <= 0) throw NoCertificate("nonpositive margin for constraint " + std::to_string(c + 1));
    const GroupKey& top = an.table.groups[cert.assignment[c]].key;
    ConstraintData cd{&top, {}, {}, cert.margins[c] / RealAlgebraic(2), RealAlgebraic(0)};
    for (std::size_t g = 0; g < an.table.groups.size(); ++g) {
      if (g == cert.assignment[c]) continue;
      const GroupKey& key = an.table.groups[g].key;
      int ci = compare_inner(key, top, p);
      if (ci < 0) {
        cd.lower.push_back(&key);
      } else if (ci == 0 && lex_compare_groups(key, top, p, d) < 0) {
        cd.same.push_back(&key);
      }
    }
    for (std::size_t i = 0; i < an.loop.n; ++i) cd.total += an.gamma.eval(c, i, x).modulus();
    data.push_back(std::move(cd));
  }

  LiftConstants out;
  out.d = d;
  for (const auto& cd : data) out.r = std::max(out.r, least_r(cd, d));

  RealAlgebraic eps_bound = d == Direction::p ? RealAlgebraic(1) - p : p;
  Rational eps(1);
  for (;; eps /= 2) {
    if (RealAlgebraic(eps) > eps_bound) continue;
    bool ok = true;
    for (const auto& cd : data)
      for (const auto* g : cd.lower)
        ok = ok && certified_positive([&](long b) { return band_gap(*cd.top, *g, p, d, eps, b); });
    if (ok) break;
    if (eps < pow2(-64)) throw InternalError("no dyadic epsilon separates the lower groups");
  }
  out.epsilon = eps;

  Rational need = Rational(out.r + 2) / eps;
  unsigned long l = ceil_of(need).get_ui();
  if (l == 0) l = 1;
  auto grows = [&](unsigned long len) {
    for (const auto& cd : data)
      for (const Rational& u : {Rational(Rational(out.r) / Rational(len)), eps})
        if (!growth_holds(cd, p, d, u, len)) return false;
    return true;
  };
  while (!grows(l)) l *= 2;
  out.l = l;

  Rational half_band = (eps * Rational(l) + Rational(out.r)) / 2;
  RealAlgebraic centre = p * RealAlgebraic(Rational(l));
  centre = d == Direction::p ? centre + RealAlgebraic(half_band) : centre - RealAlgebraic(half_band);
  Integer j = floor_real(centre + RealAlgebraic(Rational(1, 2)));
  if (j < 0) j = 0;
  if (j > l) j = l;
  out.j = j.get_ui();
  out.k = l - out.j;
  return out;
}

bool band_holds(const LiftConstants& c, const RealAlgebraic& p) {
  RealAlgebraic eps(c.epsilon);
  RealAlgebraic bound = c.d == Direction::p ? RealAlgebraic(1) - p : p;
  if (c.epsilon <= 0 || eps > bound) return false;
  if (c.epsilon * Rational(c.l) < Rational(c.r + 2)) return false;
  if (c.j + c.k != c.l) return false;
  RealAlgebraic dev = RealAlgebraic(Rational(c.j)) - p * RealAlgebraic(Rational(c.l));
  if (c.d == Direction::n) dev = -dev;
  RealAlgebraic width(c.epsilon * Rational(c.l));
  if (dev < RealAlgebraic(0) || dev > width) return false;
  RealAlgebraic mid((c.epsilon * Rational(c.l) + Rational(c.r)) / 2);
  return abs(dev - mid) <= RealAlgebraic(1);
}

LiftCertificate lift_witness(const Analysis& an, const ExactVector& x, const LiftConstants& c,
                             const std::vector<RealAlgebraic>& margins) {
  RatMatrix M = rat_mul(rat_pow(an.loop.A, c.j), rat_pow(an.loop.B, c.k));
  ExactVector y = past::apply(ExactMatrix::from_rational(M), x);
  ExactVector guard = past::apply(an.loop.C, y);
  LiftCertificate out;
  out.constants = c;
  out.margins = margins;
  for (std::size_t i = 0; i < guard.size(); ++i) {
    if (!guard[i].is_real() || guard[i].re.sign() <= 0)
      throw GuardViolatedAtLift("constraint " + std::to_string(i + 1) + " is not positive at A^" +
                                std::to_string(c.j) + " B^" + std::to_string(c.k) + " x");
    out.guard.push_back(guard[i].re);
  }
  for (const auto& v : y) {
    if (!v.is_real()) throw InternalError("lifted point has a non-real entry");
    out.y.push_back(v.re);
  }
  return out;
}

Json lift_json(const LiftCertificate& lc) {
  Json j;
  j["epsilon"] = to_string(lc.constants.epsilon);
  j["r"] = lc.constants.r;
  j["l"] = lc.constants.l;
  j["j"] = lc.constants.j;
  j["k"] = lc.constants.k;
  Json y = Json::array(), g = Json::array();
  for (const auto& v : lc.y) y.push_back(to_json(v));
  for (const auto& v : lc.guard) g.push_back(to_json(v));
  j["y"] = y;
  j["guard"] = g;
  return j;
}

}  // namespace past
