// Copyright (c) past contributors.
// SPDX-License-Identifier: Apache-2.0
#include "past/linalg/eigen.hpp"

#include <algorithm>
#include <complex>
#include <limits>

#include "past/errors.hpp"
#include "past/exactnum/factor.hpp"

namespace past {

namespace {

RatMatrix kron_sum_half(const RatMatrix& c) {
  std::size_t d = c.size(), n = d * d;
  RatMatrix k(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t l = 0; l < d; ++l) {
        // (C (x) I)[(i,l),(j,l)] = c[i][j]; (I (x) C)[(l,i),(l,j)] = c[i][j]
        k[i * d + l][j * d + l] += c[i][j] / 2;
        k[l * d + i][l * d + j] += c[i][j] / 2;
      }
  return k;
}

// -(C (x) I - I (x) C)^2 / 4: eigenvalues ((l_i - l_j) / 2i)^2.
RatMatrix kron_diff_square(const RatMatrix& c) {
  std::size_t d = c.size(), n = d * d;
  RatMatrix k(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t l = 0; l < d; ++l) {
        k[i * d + l][j * d + l] += c[i][j];
        k[l * d + i][l * d + j] -= c[i][j];
      }
  RatMatrix sq = rat_mul(k, k);
  for (auto& row : sq)
    for (auto& v : row) v = -v / 4;
  return sq;
}

using Cld = std::complex<long double>;

// Aberth-Ehrlich iteration; only used to pair exact candidates.
std::vector<Cld> numeric_roots(const IntPolynomial& q) {
  const int d = q.degree();
  std::vector<long double> c(d + 1);
  for (int i = 0; i <= d; ++i) c[i] = q.coeffs()[i].get_d();
  long double radius = 1;
  for (int i = 0; i < d; ++i) radius = std::max(radius, 1 + std::abs(c[i] / c[d]));
  std::vector<Cld> z(d);
  for (int k = 0; k < d; ++k)
    z[k] = std::polar(radius * 0.5L, (2 * 3.14159265358979323846L * k + 0.4L) / d);
  for (int it = 0; it < 2000; ++it) {
    long double moved = 0;
    for (int k = 0; k < d; ++k) {
      Cld p = c[d], dp = 0;
      for (int i = d - 1; i >= 0; --i) {
        dp = dp * z[k] + p;
        p = p * z[k] + c[i];
      }
      if (p == Cld(0)) continue;
      Cld ratio = p / dp;
      Cld sum = 0;
      for (int j = 0; j < d; ++j)
        if (j != k) sum += Cld(1) / (z[k] - z[j]);
      Cld step = ratio / (Cld(1) - ratio * sum);
      z[k] -= step;
      moved = std::max(moved, std::abs(step) / std::max<long double>(1, std::abs(z[k])));
    }
    if (moved < 1e-16L) break;
  }
  return z;
}

bool is_root(const IntPolynomial& q, const ComplexAlgebraic& z) {
  ComplexAlgebraic acc;
  for (int i = q.degree(); i >= 0; --i) acc = acc * z + ComplexAlgebraic(Rational(q.coeffs()[i]));
  return acc.is_zero();
}

// Roots with Im > 0 of an irreducible polynomial with no real roots left.
std::vector<ComplexAlgebraic> upper_roots(const IntPolynomial& q) {
  std::vector<ComplexAlgebraic> out;
  const Integer& a = q.leading();
  if (q.degree() == 2) {
    const Integer& b = q.coeffs()[1];
    const Integer& c = q.coeffs()[0];
    Rational two_a(2 * a);
    RealAlgebraic re(Rational(-b) / two_a);
    RealAlgebraic im = sqrt_nonneg(RealAlgebraic(Rational(4 * a * c - b * b))) / RealAlgebraic(two_a);
    out.push_back({re, im});
    return out;
  }
  RatMatrix comp = companion(q.to_rational().monic());
  std::vector<RealAlgebraic> re_cands = isolate_real_roots(IntPolynomial::from_rational(charpoly(kron_sum_half(comp))));
  std::vector<RealAlgebraic> im_cands;
  for (const auto& s2 : isolate_real_roots(IntPolynomial::from_rational(charpoly(kron_diff_square(comp)))))
    if (s2.sign() > 0) im_cands.push_back(sqrt_nonneg(s2));
  const std::size_t real_count = isolate_real_roots(q).size();
  const std::size_t upper_count = (static_cast<std::size_t>(q.degree()) - real_count) / 2;
  std::vector<Cld> approx = numeric_roots(q);
  std::sort(approx.begin(), approx.end(), [](const Cld& x, const Cld& y) { return x.imag() > y.imag(); });
  approx.resize(upper_count);
  for (const Cld& z : approx) {
    std::vector<std::pair<long double, std::pair<std::size_t, std::size_t>>> order;
    for (std::size_t i = 0; i < re_cands.size(); ++i)
      for (std::size_t j = 0; j < im_cands.size(); ++j) {
        long double dist = std::abs(re_cands[i].to_double() - z.real()) + std::abs(im_cands[j].to_double() - z.imag());
        order.push_back({dist, {i, j}});
      }
    std::sort(order.begin(), order.end());
    bool found = false;
    for (const auto& [dist, ij] : order) {
      ComplexAlgebraic cand{re_cands[ij.first], im_cands[ij.second]};
      bool dup = std::any_of(out.begin(), out.end(), [&](const ComplexAlgebraic& w) { return w == cand; });
      if (!dup && is_root(q, cand)) {
        out.push_back(cand);
        found = true;
        break;
      }
    }
    if (!found) throw InternalError("failed to certify a complex root of " + q.to_string());
  }
  std::sort(out.begin(), out.end(), [](const ComplexAlgebraic& x, const ComplexAlgebraic& y) {
    int c = compare(x.re, y.re);
    return c != 0 ? c < 0 : compare(x.im, y.im) < 0;
  });
  return out;
}

bool squarefree(const RatPolynomial& p) { return gcd(p, p.derivative()).degree() == 0; }

ExactMatrix shifted(const ExactMatrix& m, const ComplexAlgebraic& lambda) {
  ExactMatrix r = m;
  for (std::size_t i = 0; i < m.rows(); ++i) r(i, i) -= lambda;
  return r;
}

bool upper_member(const ComplexAlgebraic& z) { return z.im.sign() > 0; }

struct Column {
  ComplexAlgebraic a, b;
  ExactVector v;
};

void normalize_last(ExactVector& v) {
  for (std::size_t i = v.size(); i-- > 0;)
    if (!v[i].is_zero()) {
      ComplexAlgebraic inv = v[i].inverse();
      for (auto& z : v)
        if (!z.is_zero()) z = z * inv;
      return;
    }
  throw InternalError("zero eigenvector");
}

Column mirror(const Column& c) {
  Column m{c.a.conj(), c.b.conj(), c.v};
  for (auto& z : m.v) z = z.conj();
  return m;
}

}  // namespace

CharMinPoly char_and_min_poly(const ExactMatrix& m) {
  if (!m.is_square()) throw NonSquare("characteristic polynomial of a non-square matrix");
  RatMatrix r = m.to_rational();
  const std::size_t n = r.size();
  CharMinPoly out;
  out.charpoly = charpoly(r);
  // Minimal polynomial from the first linear dependency among I, M, M^2, ...
  std::vector<RatMatrix> powers{rat_identity(n)};
  for (std::size_t k = 1; k <= n; ++k) {
    powers.push_back(rat_mul(powers.back(), r));
    ExactMatrix krylov(n * n, k + 1);
    for (std::size_t e = 0; e <= k; ++e)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) krylov(i * n + j, e) = powers[e][i][j];
    auto ker = kernel(krylov);
    if (ker.empty()) continue;
    std::vector<Rational> coeffs(k + 1);
    for (std::size_t e = 0; e <= k; ++e) coeffs[e] = ker[0][e].re.rational();
    out.minpoly = RatPolynomial(coeffs).monic();
    return out;
  }
  out.minpoly = out.charpoly;  // n = 0
  return out;
}

std::optional<Violation> check_commuting_diagonalizable(const ExactMatrix& a, const ExactMatrix& b) {
  if (!a.is_square() || !b.is_square() || a.rows() != b.rows())
    return Violation{Violation::Kind::DimensionMismatch, "A and B must be square of the same size"};
  if (!(a * b == b * a)) return Violation{Violation::Kind::NotCommuting, "A*B != B*A"};
  if (!squarefree(char_and_min_poly(a).minpoly))
    return Violation{Violation::Kind::NotDiagonalizableA, "A is not diagonalizable (minimal polynomial has a repeated factor)"};
  if (!squarefree(char_and_min_poly(b).minpoly))
    return Violation{Violation::Kind::NotDiagonalizableB, "B is not diagonalizable (minimal polynomial has a repeated factor)"};
  return std::nullopt;
}

std::vector<ComplexAlgebraic> complex_roots(const RatPolynomial& p) {
  std::vector<ComplexAlgebraic> reals, nonreal;
  if (p.degree() < 1) return reals;
  for (const auto& q : irreducible_factors(IntPolynomial::from_rational(p))) {
    auto rr = isolate_real_roots(q);
    for (auto& r : rr) reals.emplace_back(r);
    if (rr.size() == static_cast<std::size_t>(q.degree())) continue;
    for (auto& z : upper_roots(q)) {
      nonreal.push_back(z);
      nonreal.push_back(z.conj());
    }
  }
  std::sort(reals.begin(), reals.end(),
            [](const ComplexAlgebraic& x, const ComplexAlgebraic& y) { return compare(x.re, y.re) < 0; });
  reals.insert(reals.end(), nonreal.begin(), nonreal.end());
  return reals;
}

SpectralDecomposition simultaneous_diagonalize(const ExactMatrix& a, const ExactMatrix& b) {
  if (auto v = check_commuting_diagonalizable(a, b)) {
    switch (v->kind) {
      case Violation::Kind::NotCommuting: throw NotCommuting(v->message);
      case Violation::Kind::DimensionMismatch: throw DimensionMismatch(v->message);
      default: throw NotDiagonalizable(v->message);
    }
  }
  const std::size_t n = a.rows();
  auto a_roots = complex_roots(char_and_min_poly(a).charpoly);
  auto b_roots = complex_roots(char_and_min_poly(b).charpoly);

  // Items are single real columns or (plus, minus) conjugate pairs.
  std::vector<std::vector<Column>> items;
  for (const auto& lambda : a_roots) {
    if (lambda.im.sign() < 0) continue;
    auto basis = kernel(shifted(a, lambda));
    std::vector<Column> found;
    if (basis.size() == 1) {
      ExactVector bv = past::apply(b, basis[0]);
      std::size_t f = n;
      while (f-- > 0 && basis[0][f].is_zero()) {}
      found.push_back(Column{lambda, bv[f] / basis[0][f], basis[0]});
    } else {
      ExactMatrix vm(n, basis.size());
      for (std::size_t j = 0; j < basis.size(); ++j)
        for (std::size_t i = 0; i < n; ++i) vm(i, j) = basis[j][i];
      for (const auto& mu : b_roots) {
        if (lambda.is_real() && mu.im.sign() < 0) continue;
        for (const auto& w : kernel(shifted(b, mu) * vm)) found.push_back(Column{lambda, mu, past::apply(vm, w)});
      }
      std::size_t expect = 0;
      for (const auto& c : found) expect += (lambda.is_real() && !c.b.is_real()) ? 2 : 1;
      if (expect != basis.size()) throw InternalError("joint eigenspace dimensions do not add up");
    }
    for (auto& c : found) {
      normalize_last(c.v);
      if (c.a.is_real() && c.b.is_real()) {
        items.push_back({c});
        continue;
      }
      Column m = mirror(c);
      bool c_first = c.b.is_real() ? upper_member(c.a) : upper_member(c.b);
      items.push_back(c_first ? std::vector<Column>{c, m} : std::vector<Column>{m, c});
    }
  }

  struct Key {
    RealAlgebraic ma, mb, ra, rb, ia, ib;
  };
  std::vector<Key> keys;
  for (const auto& it : items) {
    const Column& c = it[0];
    keys.push_back({c.a.modulus(), c.b.modulus(), c.a.re, c.b.re, abs(c.a.im), abs(c.b.im)});
  }
  std::vector<std::size_t> order(items.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    const Key& p = keys[x];
    const Key& q = keys[y];
    for (auto [u, v] : {std::pair{&p.ma, &q.ma}, {&p.mb, &q.mb}, {&p.ra, &q.ra}, {&p.rb, &q.rb}, {&p.ia, &q.ia},
                        {&p.ib, &q.ib}}) {
      int c = compare(*u, *v);
      if (c != 0) return c < 0;
    }
    return false;
  });

  SpectralDecomposition out;
  out.S = ExactMatrix(n, n);
  out.sigma.resize(n);
  std::size_t col = 0;
  for (std::size_t idx : order) {
    const auto& it = items[idx];
    for (std::size_t k = 0; k < it.size(); ++k) {
      for (std::size_t i = 0; i < n; ++i) out.S(i, col + k) = it[k].v[i];
      out.a.push_back(it[k].a);
      out.b.push_back(it[k].b);
      out.sigma[col + k] = it.size() == 1 ? col : col + 1 - k;
    }
    col += it.size();
  }
  if (col != n) throw InternalError("eigenvector count mismatch");
  out.S_inv = inverse(out.S);
  return out;
}

}  // namespace past
