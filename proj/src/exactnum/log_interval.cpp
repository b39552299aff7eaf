// Copyright (c) past contributors.
// SPDX-License-Identifier: Apache-2.0
#include "past/exactnum/log_interval.hpp"

#include "past/errors.hpp"

namespace past {

namespace {

Integer fdiv(const Integer& a, const Integer& b) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Integer cdiv(const Integer& a, const Integer& b) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

// atanh(z) = sum z^(2j+1)/(2j+1) for 0 <= z <= 1/3, in fixed point with
// separate floor/ceil tracks. Tail after the last term is at most
// z^(2N+1)/(1 - z^2) <= 2 * (upper power).
DyadicInterval atanh_bounds(const Rational& z, long bits) {
  long guard = 2 * static_cast<long>(bit_length(Integer(bits))) + 16;
  long w = bits + guard;
  Integer scale = 1;
  mpz_mul_2exp(scale.get_mpz_t(), scale.get_mpz_t(), static_cast<mp_bitcnt_t>(w));
  Rational zs = z * Rational(scale);
  Integer zl = floor_of(zs), zu = ceil_of(zs);
  Integer z2l = fdiv(zl * zl, scale), z2u = cdiv(zu * zu, scale);
  Integer pl = zl, pu = zu, sl = 0, su = 0;
  for (unsigned long j = 1; pu > 4; j += 2) {
    Integer jj = j;
    sl += fdiv(pl, jj);
    su += cdiv(pu, jj);
    pl = fdiv(pl * z2l, scale);
    pu = cdiv(pu * z2u, scale);
  }
  su += 2 * pu;
  return {Rational(sl) / Rational(scale), Rational(su) / Rational(scale)};
}

}  // namespace

DyadicInterval ln_bounds(const Rational& q, long bits) {
  if (q <= 0) throw NonPositiveArgument("ln of a non-positive number");
  if (q == 1) return {Rational(0), Rational(0)};
  long k = static_cast<long>(bit_length(q.get_num())) - static_cast<long>(bit_length(q.get_den()));
  Rational r = q * pow2(-k);
  while (r < 1) { r *= 2; --k; }
  while (r >= 2) { r /= 2; ++k; }
  Rational z = (r - 1) / (r + 1);
  long wbits = bits + 3 + static_cast<long>(bit_length(Integer(k < 0 ? -k : k)));
  DyadicInterval a = atanh_bounds(z, wbits);
  DyadicInterval result = Rational(2) * a;
  if (k != 0) {
    DyadicInterval ln2 = Rational(2) * atanh_bounds(Rational(1, 3), wbits);
    result = result + Rational(k) * ln2;
  }
  return result;
}

DyadicInterval log_interval(const RealAlgebraic& x, long bits) {
  if (x.sign() <= 0) throw NonPositiveArgument("log_interval of a non-positive number");
  Rational step = pow2(-(bits + 1));
  if (x.is_rational() && x.rational() == 1) return {-step, step};
  long refine_bits = bits + 8;
  for (long prec = bits + 8; prec <= bits + (1L << 16); prec *= 2) {
    DyadicInterval xb = x.enclosure(refine_bits);
    while (!(xb.lo > 0 && (xb.hi - xb.lo) * pow2(prec + 2) <= xb.lo)) {
      refine_bits += 16;
      xb = x.enclosure(refine_bits);
    }
    Rational lo = ln_bounds(xb.lo, prec + 2).lo;
    Rational hi = ln_bounds(xb.hi, prec + 2).hi;
    Rational g = Rational(floor_of(lo / step)) * step;
    // ln(x) is transcendental for algebraic x != 1, so it never sits on the
    // grid and this terminates.
    if (hi < g + step) return {g, g + step};
  }
  throw InternalError("log_interval: enclosure did not settle");
}

}  // namespace past
