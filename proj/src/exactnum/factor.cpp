// Copyright (c) past contributors.
// SPDX-License-Identifier: Apache-2.0
#include "past/exactnum/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <random>

#include "past/errors.hpp"

namespace past {

namespace {

using u64 = std::uint64_t;
using Poly = std::vector<u64>;  // coefficients mod p, constant first, trimmed
using ZPoly = std::vector<Integer>;

struct Field {
  u64 p;
  u64 add(u64 a, u64 b) const { u64 s = a + b; return s >= p ? s - p : s; }
  u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p - b; }
  u64 mul(u64 a, u64 b) const { return a * b % p; }
  u64 pow(u64 a, u64 e) const {
    u64 r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  u64 inv(u64 a) const { return pow(a, p - 2); }
};

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const Poly& a) { return static_cast<int>(a.size()) - 1; }

Poly psub(const Field& F, const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = F.sub(r[i], b[i]);
  trim(r);
  return r;
}

Poly pmul(const Field& F, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  }
  trim(r);
  return r;
}

void pdivmod(const Field& F, const Poly& a, const Poly& b, Poly* q, Poly* r) {
  Poly rem = a;
  int db = deg(b);
  u64 binv = F.inv(b.back());
  Poly quo(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  for (int k = deg(rem) - db; k >= 0; --k) {
    u64 f = F.mul(rem[static_cast<std::size_t>(k + db)], binv);
    quo[static_cast<std::size_t>(k)] = f;
    if (f == 0) continue;
    for (int i = 0; i <= db; ++i) {
      auto idx = static_cast<std::size_t>(k + i);
      rem[idx] = F.sub(rem[idx], F.mul(f, b[static_cast<std::size_t>(i)]));
    }
  }
  trim(rem);
  trim(quo);
  if (q) *q = std::move(quo);
  if (r) *r = std::move(rem);
}

Poly pmod(const Field& F, const Poly& a, const Poly& b) {
  Poly r;
  pdivmod(F, a, b, nullptr, &r);
  return r;
}

Poly pdiv(const Field& F, const Poly& a, const Poly& b) {
  Poly q;
  pdivmod(F, a, b, &q, nullptr);
  return q;
}

Poly pmonic(const Field& F, const Poly& a) {
  if (a.empty()) return a;
  u64 inv = F.inv(a.back());
  Poly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.mul(a[i], inv);
  return r;
}

Poly pgcd(const Field& F, Poly a, Poly b) {
  while (!b.empty()) {
    Poly r = pmod(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return pmonic(F, a);
}

// Inverse of a modulo m (gcd must be 1).
Poly pinvmod(const Field& F, const Poly& a, const Poly& m) {
  Poly r0 = m, r1 = pmod(F, a, m);
  Poly t0, t1 = {1};
  while (!r1.empty()) {
    Poly q, r;
    pdivmod(F, r0, r1, &q, &r);
    Poly t = psub(F, t0, pmul(F, q, t1));
    r0 = std::move(r1);
    r1 = std::move(r);
    t0 = std::move(t1);
    t1 = std::move(t);
  }
  if (deg(r0) != 0) throw InternalError("pinvmod: not invertible");
  u64 c = F.inv(r0[0]);
  Poly out = pmod(F, t0, m);
  for (auto& v : out) v = F.mul(v, c);
  return out;
}

Poly ppowmod(const Field& F, Poly base, const Integer& e, const Poly& m) {
  Poly result = {1};
  base = pmod(F, base, m);
  std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = pmod(F, pmul(F, result, result), m);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = pmod(F, pmul(F, result, base), m);
  }
  return result;
}

Poly pderiv(const Field& F, const Poly& a) {
  if (a.size() <= 1) return {};
  Poly d(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) d[i - 1] = F.mul(a[i], i % F.p);
  trim(d);
  return d;
}

Poly reduce(const Field& F, const ZPoly& f) {
  Poly r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) r[i] = mpz_fdiv_ui(f[i].get_mpz_t(), F.p);
  trim(r);
  return r;
}

// Distinct-degree factorization of a monic squarefree polynomial.
std::vector<std::pair<Poly, int>> ddf(const Field& F, Poly f) {
  std::vector<std::pair<Poly, int>> out;
  Poly x = {0, 1};
  Poly h = x;
  Integer p = static_cast<unsigned long>(F.p);
  for (int i = 1; 2 * i <= deg(f); ++i) {
    h = ppowmod(F, h, p, f);
    Poly g = pgcd(F, f, psub(F, h, x));
    if (deg(g) > 0) {
      out.emplace_back(g, i);
      f = pdiv(F, f, g);
      h = pmod(F, h, f);
    }
  }
  if (deg(f) > 0) out.emplace_back(f, deg(f));
  return out;
}

// Cantor-Zassenhaus equal-degree splitting (p odd).
void edf(const Field& F, const Poly& f, int d, std::mt19937_64& rng, std::vector<Poly>& out) {
  if (deg(f) == d) {
    out.push_back(f);
    return;
  }
  Integer e;
  mpz_ui_pow_ui(e.get_mpz_t(), F.p, static_cast<unsigned long>(d));
  e = (e - 1) / 2;
  std::uniform_int_distribution<u64> dist(0, F.p - 1);
  while (true) {
    Poly a(static_cast<std::size_t>(deg(f)));
    for (auto& v : a) v = dist(rng);
    trim(a);
    if (deg(a) < 1) continue;
    Poly g = pgcd(F, a, f);
    if (deg(g) <= 0) {
      Poly b = ppowmod(F, a, e, f);
      g = pgcd(F, psub(F, b, Poly{1}), f);
    }
    if (deg(g) > 0 && deg(g) < deg(f)) {
      edf(F, g, d, rng, out);
      edf(F, pdiv(F, f, g), d, rng, out);
      return;
    }
  }
}

std::vector<Poly> factor_mod_p(const Field& F, const Poly& monic) {
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL ^ F.p);
  std::vector<Poly> out;
  for (auto& [g, d] : ddf(F, monic)) edf(F, g, d, rng, out);
  std::sort(out.begin(), out.end());
  return out;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

ZPoly to_z(const Poly& a) {
  ZPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = static_cast<unsigned long>(a[i]);
  return r;
}

// Lifts f = lc * prod g_i (mod p) to a factorization modulo p^k > bound.
std::vector<ZPoly> hensel_lift(const Field& F, const ZPoly& f, const std::vector<Poly>& mods,
                               const Integer& bound, Integer* modulus) {
  const std::size_t r = mods.size();
  std::vector<Poly> s(r);
  for (std::size_t i = 0; i < r; ++i) {
    Poly cof = {1};
    for (std::size_t j = 0; j < r; ++j)
      if (j != i) cof = pmod(F, pmul(F, cof, mods[j]), mods[i]);
    s[i] = pinvmod(F, cof, mods[i]);
  }
  std::vector<ZPoly> g(r);
  for (std::size_t i = 0; i < r; ++i) g[i] = to_z(mods[i]);
  const Integer& lc = f.back();
  u64 lcinv = F.inv(mpz_fdiv_ui(lc.get_mpz_t(), F.p));
  Integer pk = static_cast<unsigned long>(F.p);
  while (pk <= bound) {
    ZPoly prod = {lc};
    for (const auto& gi : g) prod = zmul(prod, gi);
    ZPoly e(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
      Integer diff = f[i] - (i < prod.size() ? prod[i] : Integer(0));
      mpz_divexact(e[i].get_mpz_t(), diff.get_mpz_t(), pk.get_mpz_t());
    }
    Poly ep = reduce(F, e);
    for (auto& v : ep) v = F.mul(v, lcinv);
    for (std::size_t i = 0; i < r; ++i) {
      Poly delta = pmod(F, pmul(F, ep, s[i]), mods[i]);
      for (std::size_t k = 0; k < delta.size(); ++k) g[i][k] += pk * static_cast<unsigned long>(delta[k]);
    }
    pk *= static_cast<unsigned long>(F.p);
  }
  *modulus = pk;
  return g;
}

void symmetric_mod(ZPoly& a, const Integer& m) {
  Integer half = m / 2;
  for (auto& v : a) {
    mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
    if (v > half) v -= m;
  }
  while (!a.empty() && a.back() == 0) a.pop_back();
}

bool divides(const IntPolynomial& h, const IntPolynomial& f) {
  if (h.degree() > f.degree()) return false;
  const Integer& f0 = f.coeffs()[0];
  const Integer& h0 = h.coeffs()[0];
  if (f0 != 0 && (h0 == 0 || !mpz_divisible_p(f0.get_mpz_t(), h0.get_mpz_t()))) return false;
  if (!mpz_divisible_p(f.leading().get_mpz_t(), h.leading().get_mpz_t())) return false;
  return divmod(f.to_rational(), h.to_rational()).second.is_zero();
}

// f primitive, squarefree, degree >= 1, positive leading coefficient.
std::vector<IntPolynomial> zassenhaus(const IntPolynomial& f) {
  const int d = f.degree();
  if (d <= 1) return {f};

  std::vector<Poly> best;
  Field bestF{0};
  int tried = 0;
  for (u64 p = 3; tried < 5; p += 2) {
    if (!is_prime(p)) continue;
    if (mpz_fdiv_ui(f.leading().get_mpz_t(), p) == 0) continue;
    Field F{p};
    Poly fp = reduce(F, f.coeffs());
    if (deg(fp) != d) continue;
    if (deg(pgcd(F, fp, pderiv(F, fp))) != 0) continue;
    auto facs = factor_mod_p(F, pmonic(F, fp));
    ++tried;
    if (best.empty() || facs.size() < best.size()) {
      best = std::move(facs);
      bestF = F;
    }
    if (best.size() == 1) return {f};
  }

  Integer norm2 = 0;
  for (const auto& c : f.coeffs()) norm2 += c * c;
  Integer root;
  mpz_sqrt(root.get_mpz_t(), norm2.get_mpz_t());
  Integer bound = abs(f.leading()) * (root + 1);
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<mp_bitcnt_t>(d + 1));

  Integer pk;
  std::vector<ZPoly> lifted = hensel_lift(bestF, f.coeffs(), best, bound, &pk);

  std::vector<IntPolynomial> out;
  IntPolynomial rest = f;
  std::vector<std::size_t> live(lifted.size());
  for (std::size_t i = 0; i < live.size(); ++i) live[i] = i;
  std::size_t s = 1;
  while (2 * s <= live.size()) {
    bool found = false;
    std::vector<std::size_t> pick(s);
    for (std::size_t i = 0; i < s; ++i) pick[i] = i;
    while (true) {
      ZPoly h = {rest.leading()};
      for (auto idx : pick) h = zmul(h, lifted[live[idx]]);
      symmetric_mod(h, pk);
      IntPolynomial cand(h);
      if (cand.degree() > 0 && divides(cand, rest)) {
        cand = cand.normalized();
        out.push_back(cand);
        rest = divide_exact(rest, cand).normalized();
        std::vector<std::size_t> keep;
        for (std::size_t i = 0; i < live.size(); ++i)
          if (std::find(pick.begin(), pick.end(), i) == pick.end()) keep.push_back(live[i]);
        live = std::move(keep);
        found = true;
        break;
      }
      // next combination
      std::size_t i = s;
      while (i > 0 && pick[i - 1] == live.size() - s + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < s; ++j) pick[j] = pick[j - 1] + 1;
    }
    if (!found) ++s;
  }
  if (rest.degree() > 0) out.push_back(rest.normalized());
  return out;
}

bool poly_less(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    const auto& x = a.coeffs()[static_cast<std::size_t>(i)];
    const auto& y = b.coeffs()[static_cast<std::size_t>(i)];
    if (x != y) return x < y;
  }
  return false;
}

}  // namespace

std::vector<Factor> squarefree_decomposition(const IntPolynomial& p) {
  std::vector<Factor> out;
  if (p.degree() <= 0) return out;
  RatPolynomial f = p.to_rational().monic();
  RatPolynomial fd = f.derivative();
  RatPolynomial a0 = gcd(f, fd);
  RatPolynomial c = divmod(f, a0).first;
  RatPolynomial d = divmod(fd, a0).first - c.derivative();
  for (int i = 1; c.degree() > 0; ++i) {
    RatPolynomial a = gcd(c, d);
    c = divmod(c, a).first;
    d = divmod(d, a).first - c.derivative();
    if (a.degree() > 0) out.push_back({IntPolynomial::from_rational(a).normalized(), i});
  }
  return out;
}

std::vector<Factor> factor(const IntPolynomial& p) {
  std::vector<Factor> out;
  for (const auto& sq : squarefree_decomposition(p)) {
    for (auto& irr : zassenhaus(sq.poly)) out.push_back({irr, sq.multiplicity});
  }
  std::sort(out.begin(), out.end(), [](const Factor& a, const Factor& b) {
    if (a.poly == b.poly) return a.multiplicity < b.multiplicity;
    return poly_less(a.poly, b.poly);
  });
  return out;
}

std::vector<IntPolynomial> irreducible_factors(const IntPolynomial& p) {
  std::vector<IntPolynomial> out;
  for (auto& f : factor(p)) out.push_back(f.poly);
  return out;
}

}  // namespace past
