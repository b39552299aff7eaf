// Copyright (c) past contributors.
// SPDX-License-Identifier: Apache-2.0
#include "past/exactnum/real_algebraic.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

#include "past/errors.hpp"
#include "past/exactnum/factor.hpp"

namespace past {

struct RealAlgebraic::Irrational {
  IntPolynomial poly;
  int sign_lo = 0;  // sign of poly at lo; invariant under bisection
  mutable std::mutex mu;
  mutable Rational lo, hi;
  mutable std::vector<IntPolynomial> sturm;  // built on first use

  DyadicInterval snapshot() const {
    std::lock_guard<std::mutex> lock(mu);
    return {lo, hi};
  }

  DyadicInterval refine_to(const Rational& width) const {
    std::lock_guard<std::mutex> lock(mu);
    while (hi - lo > width) bisect_locked();
    return {lo, hi};
  }

  DyadicInterval halve() const {
    std::lock_guard<std::mutex> lock(mu);
    bisect_locked();
    return {lo, hi};
  }

  const std::vector<IntPolynomial>& sturm_chain() const {
    std::lock_guard<std::mutex> lock(mu);
    if (sturm.empty()) sturm = sturm_sequence(poly);
    return sturm;
  }

 private:
  void bisect_locked() const {
    Rational mid = (lo + hi) / 2;
    // mid is never a root: the polynomial is irreducible of degree >= 2.
    if (poly.sign_at(mid) == sign_lo) lo = mid;
    else hi = mid;
  }
};

namespace {

RatMatrix kron_sum(const RatMatrix& a, const RatMatrix& b) {
  std::size_t m = a.size(), n = b.size();
  RatMatrix k(m * n, std::vector<Rational>(m * n));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
          Rational v = 0;
          if (p == q) v += a[i][j];
          if (i == j) v += b[p][q];
          k[i * n + p][j * n + q] = v;
        }
  return k;
}

RatMatrix kron_product(const RatMatrix& a, const RatMatrix& b) {
  std::size_t m = a.size(), n = b.size();
  RatMatrix k(m * n, std::vector<Rational>(m * n));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      if (a[i][j] == 0) continue;
      for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) k[i * n + p][j * n + q] = a[i][j] * b[p][q];
    }
  return k;
}

RatMatrix companion_of(const IntPolynomial& p) { return companion(p.to_rational().monic()); }

// floor(y^(1/k)) for y >= 0 at scale 2^-bits, as (lower, upper) rational bounds.
DyadicInterval root_bounds(const Rational& lo, const Rational& hi, unsigned k, long bits) {
  Integer scale = 1;
  mpz_mul_2exp(scale.get_mpz_t(), scale.get_mpz_t(), static_cast<mp_bitcnt_t>(bits) * k);
  Rational den = pow2(bits);
  Rational ylo = lo < 0 ? Rational(0) : lo;
  Integer a = floor_of(ylo * Rational(scale));
  Integer b = ceil_of(hi * Rational(scale));
  Integer ra, rb;
  mpz_root(ra.get_mpz_t(), a.get_mpz_t(), k);
  int exact = mpz_root(rb.get_mpz_t(), b.get_mpz_t(), k);
  if (!exact) rb += 1;
  return {Rational(ra) / den, Rational(rb) / den};
}

}  // namespace

RealAlgebraic RealAlgebraic::make(const IntPolynomial& irreducible, const Rational& lo, const Rational& hi) {
  RealAlgebraic r;
  auto irr = std::make_shared<Irrational>();
  irr->poly = irreducible.normalized();
  irr->lo = lo;
  irr->hi = hi;
  irr->sign_lo = irr->poly.sign_at(lo);
  if (irr->sign_lo == 0 || irr->poly.sign_at(hi) != -irr->sign_lo)
    throw InternalError("isolating interval without a sign change");
  r.irr_ = std::move(irr);
  return r;
}

RealAlgebraic RealAlgebraic::select_root(const std::vector<IntPolynomial>& candidates,
                                         const std::function<DyadicInterval(long)>& enclose) {
  std::vector<std::vector<IntPolynomial>> chains(candidates.size());
  for (std::size_t i = 0; i < candidates.size(); ++i)
    if (candidates[i].degree() >= 2) chains[i] = sturm_sequence(candidates[i]);
  for (long bits = 4; bits <= (1L << 20); bits *= 2) {
    DyadicInterval j = enclose(bits);
    int total = 0;
    std::size_t hit = 0;
    Rational rational_hit;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      const auto& f = candidates[i];
      if (f.degree() == 1) {
        Rational root = Rational(-f.coeffs()[0]) / Rational(f.coeffs()[1]);
        if (j.contains(root)) {
          ++total;
          hit = i;
          rational_hit = root;
        }
      } else if (f.degree() >= 2) {
        int c = count_roots(chains[i], j.lo, j.hi);
        total += c;
        if (c) hit = i;
      }
    }
    if (total == 0) throw InternalError("select_root: enclosure holds no candidate root");
    if (total == 1) {
      if (candidates[hit].degree() == 1) return RealAlgebraic(rational_hit);
      return make(candidates[hit], j.lo, j.hi);
    }
  }
  throw InternalError("select_root: roots not separated");
}

RealAlgebraic RealAlgebraic::from_root(const IntPolynomial& poly, const Rational& lo, const Rational& hi) {
  if (poly.degree() < 1) throw InternalError("from_root: constant polynomial");
  auto factors = irreducible_factors(poly);
  int total = 0;
  for (const auto& f : factors) {
    if (f.degree() == 1) {
      Rational root = Rational(-f.coeffs()[0]) / Rational(f.coeffs()[1]);
      if (lo <= root && root <= hi) ++total;
    } else {
      total += count_roots(sturm_sequence(f), lo, hi);
    }
  }
  if (total != 1) throw InternalError("from_root: interval does not isolate a single root");
  DyadicInterval fixed{lo, hi};
  return select_root(factors, [fixed](long) { return fixed; });
}

const Rational& RealAlgebraic::rational() const {
  if (irr_) throw InternalError("rational() on an irrational value");
  return q_;
}

IntPolynomial RealAlgebraic::poly() const {
  if (!irr_) return IntPolynomial::linear_root(q_).normalized();
  return irr_->poly;
}

DyadicInterval RealAlgebraic::interval() const {
  if (!irr_) return {q_, q_};
  return irr_->snapshot();
}

DyadicInterval RealAlgebraic::enclosure(long bits) const {
  if (!irr_) return {q_, q_};
  return irr_->refine_to(pow2(-bits));
}

int RealAlgebraic::sign() const {
  if (!irr_) return sgn(q_);
  DyadicInterval iv = irr_->snapshot();
  while (true) {
    if (iv.lo >= 0) return 1;
    if (iv.hi <= 0) return -1;
    iv = irr_->halve();
  }
}

double RealAlgebraic::to_double() const {
  if (!irr_) return q_.get_d();
  DyadicInterval iv = irr_->snapshot();
  // relative precision of about 60 bits
  while (true) {
    Rational w = iv.hi - iv.lo;
    Rational m = abs(iv.lo) < abs(iv.hi) ? abs(iv.lo) : abs(iv.hi);
    if (w * pow2(60) <= m || w < pow2(-1074)) break;
    iv = irr_->halve();
  }
  return Rational((iv.lo + iv.hi) / 2).get_d();
}

std::string RealAlgebraic::to_string() const {
  if (!irr_) return q_.get_str();
  std::ostringstream os;
  os.precision(10);
  os << "root(" << irr_->poly.to_string() << ") ~ " << to_double();
  return os.str();
}

RealAlgebraic RealAlgebraic::operator-() const {
  if (!irr_) return RealAlgebraic(Rational(-q_));
  DyadicInterval iv = interval();
  return make(irr_->poly.negate_variable(), -iv.hi, -iv.lo);
}

RealAlgebraic RealAlgebraic::inverse() const {
  if (!irr_) {
    if (q_ == 0) throw DivisionByZero("inverse of zero");
    return RealAlgebraic(Rational(1 / q_));
  }
  DyadicInterval iv = interval();
  while (iv.lo <= 0 && iv.hi >= 0) iv = irr_->halve();
  return make(irr_->poly.reversed(), 1 / iv.hi, 1 / iv.lo);
}

RealAlgebraic operator+(const RealAlgebraic& a, const RealAlgebraic& b) {
  if (!a.irr_ && !b.irr_) return RealAlgebraic(Rational(a.q_ + b.q_));
  if (!a.irr_ || !b.irr_) {
    const RealAlgebraic& x = a.irr_ ? a : b;
    const Rational& q = a.irr_ ? b.q_ : a.q_;
    if (q == 0) return x;
    DyadicInterval iv = x.interval();
    return RealAlgebraic::make(x.irr_->poly.shift(q), iv.lo + q, iv.hi + q);
  }
  if (a.irr_ == b.irr_) return RealAlgebraic(2) * a;
  RatPolynomial r = charpoly(kron_sum(companion_of(a.irr_->poly), companion_of(b.irr_->poly)));
  auto cands = irreducible_factors(IntPolynomial::from_rational(r));
  return RealAlgebraic::select_root(cands, [&](long bits) { return a.enclosure(bits) + b.enclosure(bits); });
}

RealAlgebraic operator*(const RealAlgebraic& a, const RealAlgebraic& b) {
  if (!a.irr_ && !b.irr_) return RealAlgebraic(Rational(a.q_ * b.q_));
  if (!a.irr_ || !b.irr_) {
    const RealAlgebraic& x = a.irr_ ? a : b;
    const Rational& q = a.irr_ ? b.q_ : a.q_;
    if (q == 0) return RealAlgebraic();
    if (q == 1) return x;
    DyadicInterval iv = q * x.interval();
    return RealAlgebraic::make(x.irr_->poly.scale(q), iv.lo, iv.hi);
  }
  RatPolynomial r = charpoly(kron_product(companion_of(a.irr_->poly), companion_of(b.irr_->poly)));
  auto cands = irreducible_factors(IntPolynomial::from_rational(r));
  return RealAlgebraic::select_root(cands, [&](long bits) { return a.enclosure(bits) * b.enclosure(bits); });
}

int compare(const RealAlgebraic& a, const RealAlgebraic& b) {
  if (!a.irr_ && !b.irr_) {
    int c = cmp(a.q_, b.q_);
    return (c > 0) - (c < 0);
  }
  if (!a.irr_ || !b.irr_) {
    const RealAlgebraic& x = a.irr_ ? a : b;
    const Rational& q = a.irr_ ? b.q_ : a.q_;
    int flip = a.irr_ ? 1 : -1;
    DyadicInterval iv = x.interval();
    while (true) {
      if (q <= iv.lo) return flip;  // the isolating interval is open
      if (q >= iv.hi) return -flip;
      iv = x.irr_->halve();
    }
  }
  if (a.irr_ == b.irr_) return 0;
  const bool same_poly = a.irr_->poly == b.irr_->poly;
  DyadicInterval i = a.interval(), j = b.interval();
  while (true) {
    if (i.hi <= j.lo) return -1;
    if (j.hi <= i.lo) return 1;
    if (same_poly) {
      Rational lo = std::min(i.lo, j.lo), hi = std::max(i.hi, j.hi);
      if (count_roots(a.irr_->sturm_chain(), lo, hi) == 1) return 0;
    }
    i = a.irr_->halve();
    j = b.irr_->halve();
  }
}

RealAlgebraic nth_root(const RealAlgebraic& x, unsigned k) {
  if (k == 0) throw InternalError("zeroth root");
  int s = x.sign();
  if (s < 0) throw NegativeRadicand("root of a negative number");
  if (s == 0 || k == 1) return x;
  if (x.is_rational()) {
    const Rational& q = x.rational();
    Integer rn, rd;
    bool en = mpz_root(rn.get_mpz_t(), q.get_num_mpz_t(), k) != 0;
    bool ed = mpz_root(rd.get_mpz_t(), q.get_den_mpz_t(), k) != 0;
    if (en && ed) {
      Rational r(rn, rd);
      r.canonicalize();
      return RealAlgebraic(r);
    }
  }
  IntPolynomial p = x.poly().compose_power(k);
  auto cands = irreducible_factors(p);
  return RealAlgebraic::select_root(cands, [&](long bits) {
    DyadicInterval iv = x.enclosure(bits + 2);
    return root_bounds(iv.lo, iv.hi, k, bits + 2);
  });
}

RealAlgebraic sqrt_nonneg(const RealAlgebraic& x) { return nth_root(x, 2); }

RealAlgebraic pow(const RealAlgebraic& x, unsigned long e) {
  RealAlgebraic result(1), base = x;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

RealAlgebraic abs(const RealAlgebraic& x) { return x.sign() < 0 ? -x : x; }

std::vector<RealAlgebraic> isolate_real_roots(const IntPolynomial& poly) {
  if (poly.is_zero()) throw InternalError("isolate_real_roots of the zero polynomial");
  std::vector<RealAlgebraic> roots;
  for (const auto& f : irreducible_factors(poly)) {
    if (f.degree() == 1) {
      roots.emplace_back(Rational(Rational(-f.coeffs()[0]) / Rational(f.coeffs()[1])));
      continue;
    }
    auto chain = sturm_sequence(f);
    Rational b = root_bound(f);
    std::vector<std::tuple<Rational, Rational, int>> work{{-b, b, count_roots(chain, -b, b)}};
    while (!work.empty()) {
      auto [lo, hi, c] = work.back();
      work.pop_back();
      if (c == 0) continue;
      if (c == 1) {
        roots.push_back(RealAlgebraic::make(f, lo, hi));
        continue;
      }
      Rational mid = (lo + hi) / 2;
      int left = count_roots(chain, lo, mid);
      work.emplace_back(lo, mid, left);
      work.emplace_back(mid, hi, c - left);
    }
  }
  std::sort(roots.begin(), roots.end(), [](const RealAlgebraic& a, const RealAlgebraic& b) { return compare(a, b) < 0; });
  for (std::size_t i = 0; i + 1 < roots.size(); ++i) {
    while (!(roots[i].interval().hi < roots[i + 1].interval().lo)) {
      if (!roots[i].is_rational()) roots[i].irr_->halve();
      if (!roots[i + 1].is_rational()) roots[i + 1].irr_->halve();
    }
  }
  return roots;
}

}  // namespace past
