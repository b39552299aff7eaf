// Copyright (c) past contributors.
// SPDX-License-Identifier: Apache-2.0
#include "past/exactnum/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "past/errors.hpp"

namespace past {

// ---- RatPolynomial ---------------------------------------------------------

RatPolynomial::RatPolynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

RatPolynomial RatPolynomial::constant(const Rational& c) { return RatPolynomial({c}); }

RatPolynomial RatPolynomial::monomial(const Rational& c, std::size_t k) {
  std::vector<Rational> v(k + 1);
  v[k] = c;
  return RatPolynomial(std::move(v));
}

void RatPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational RatPolynomial::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RatPolynomial RatPolynomial::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<unsigned long>(i);
  return RatPolynomial(std::move(d));
}

RatPolynomial RatPolynomial::monic() const {
  if (is_zero()) return {};
  Rational lc = leading();
  std::vector<Rational> v(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] = c_[i] / lc;
  return RatPolynomial(std::move(v));
}

RatPolynomial RatPolynomial::operator-() const {
  std::vector<Rational> v(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] = -c_[i];
  return RatPolynomial(std::move(v));
}

RatPolynomial operator+(const RatPolynomial& a, const RatPolynomial& b) {
  std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
  return RatPolynomial(std::move(v));
}

RatPolynomial operator-(const RatPolynomial& a, const RatPolynomial& b) { return a + (-b); }

RatPolynomial operator*(const RatPolynomial& a, const RatPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return RatPolynomial(std::move(v));
}

RatPolynomial operator*(const Rational& s, const RatPolynomial& a) {
  std::vector<Rational> v(a.c_.size());
  for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] = s * a.c_[i];
  return RatPolynomial(std::move(v));
}

std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& a, const RatPolynomial& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  std::vector<Rational> r = a.coeffs();
  int db = b.degree();
  if (a.degree() < db) return {RatPolynomial(), a};
  std::vector<Rational> q(static_cast<std::size_t>(a.degree() - db + 1));
  const Rational& lb = b.leading();
  for (int k = a.degree() - db; k >= 0; --k) {
    Rational f = r[static_cast<std::size_t>(k + db)] / lb;
    q[static_cast<std::size_t>(k)] = f;
    if (f == 0) continue;
    for (int i = 0; i <= db; ++i) r[static_cast<std::size_t>(k + i)] -= f * b.coeff(static_cast<std::size_t>(i));
  }
  r.resize(static_cast<std::size_t>(db));
  return {RatPolynomial(std::move(q)), RatPolynomial(std::move(r))};
}

RatPolynomial gcd(const RatPolynomial& a, const RatPolynomial& b) {
  RatPolynomial x = a, y = b;
  while (!y.is_zero()) {
    RatPolynomial r = divmod(x, y).second;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

// ---- IntPolynomial ---------------------------------------------------------

IntPolynomial::IntPolynomial(std::vector<Integer> coeffs) : c_(std::move(coeffs)) {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
  if (c_.empty()) return;
  Integer g = 0;
  for (const auto& v : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) return;
  }
  for (auto& v : c_) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

IntPolynomial IntPolynomial::from_rational(const RatPolynomial& p) {
  Integer l = 1;
  for (const auto& q : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  std::vector<Integer> v;
  v.reserve(p.coeffs().size());
  for (const auto& q : p.coeffs()) {
    Integer z = l / q.get_den();
    v.push_back(z * q.get_num());
  }
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::linear_root(const Rational& q) {
  return IntPolynomial({Integer(-q.get_num()), q.get_den()});
}

RatPolynomial IntPolynomial::to_rational() const {
  std::vector<Rational> v(c_.begin(), c_.end());
  return RatPolynomial(std::move(v));
}

int IntPolynomial::sign_at(const Rational& x) const {
  if (c_.empty()) return 0;
  const Integer& a = x.get_num();
  const Integer& b = x.get_den();
  Integer acc = c_.back();
  Integer bpow = 1;
  for (int i = degree() - 1; i >= 0; --i) {
    bpow *= b;
    acc = acc * a + c_[static_cast<std::size_t>(i)] * bpow;
  }
  return sgn(acc);
}

Rational IntPolynomial::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Rational(*it);
  return acc;
}

IntPolynomial IntPolynomial::normalized() const {
  if (c_.empty() || c_.back() > 0) return *this;
  std::vector<Integer> v(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] = -c_[i];
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Integer> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<unsigned long>(i);
  return IntPolynomial(std::move(d));
}

IntPolynomial IntPolynomial::negate_variable() const {
  std::vector<Integer> v = c_;
  for (std::size_t i = 1; i < v.size(); i += 2) v[i] = -v[i];
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::reversed() const {
  std::vector<Integer> v(c_.rbegin(), c_.rend());
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::compose_power(unsigned k) const {
  if (c_.empty()) return {};
  std::vector<Integer> v((c_.size() - 1) * k + 1);
  for (std::size_t i = 0; i < c_.size(); ++i) v[i * k] = c_[i];
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::shift(const Rational& q) const {
  // Horner in (t - q).
  RatPolynomial lin({Rational(-q), Rational(1)});
  RatPolynomial r;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * lin + RatPolynomial::constant(Rational(*it));
  return from_rational(r);
}

IntPolynomial IntPolynomial::scale(const Rational& q) const {
  if (q == 0) throw DivisionByZero("scale by zero");
  std::vector<Rational> v(c_.size());
  Rational qp = 1;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    v[i] = Rational(c_[i]) / qp;
    qp *= q;
  }
  return from_rational(RatPolynomial(std::move(v)));
}

std::string IntPolynomial::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Integer& c = c_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    if (i == 0 || mag != 1) os << mag.get_str();
    if (i >= 1) os << var;
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
  return IntPolynomial::from_rational(gcd(a.to_rational(), b.to_rational())).normalized();
}

IntPolynomial squarefree_part(const IntPolynomial& p) {
  if (p.degree() <= 0) return p;
  IntPolynomial g = gcd(p, p.derivative());
  if (g.degree() == 0) return p;
  return divide_exact(p, g);
}

IntPolynomial divide_exact(const IntPolynomial& a, const IntPolynomial& b) {
  auto [q, r] = divmod(a.to_rational(), b.to_rational());
  if (!r.is_zero()) throw InternalError("divide_exact: nonzero remainder");
  return IntPolynomial::from_rational(q);
}

IntPolynomial multiply(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> v(a.coeffs().size() + b.coeffs().size() - 1);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i)
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) v[i + j] += a.coeffs()[i] * b.coeffs()[j];
  return IntPolynomial(std::move(v));
}

std::vector<IntPolynomial> sturm_sequence(const IntPolynomial& p) {
  std::vector<IntPolynomial> seq;
  if (p.is_zero()) return seq;
  seq.push_back(p);
  IntPolynomial d = p.derivative();
  if (d.is_zero()) return seq;
  seq.push_back(d);
  while (true) {
    const auto& a = seq[seq.size() - 2];
    const auto& b = seq.back();
    RatPolynomial r = divmod(a.to_rational(), b.to_rational()).second;
    if (r.is_zero()) break;
    seq.push_back(IntPolynomial::from_rational(-r));
  }
  return seq;
}

int sign_variations(const std::vector<IntPolynomial>& seq, const Rational& x) {
  int changes = 0, last = 0;
  for (const auto& s : seq) {
    int v = s.sign_at(x);
    if (v == 0) continue;
    if (last != 0 && v != last) ++changes;
    last = v;
  }
  return changes;
}

int count_roots(const std::vector<IntPolynomial>& seq, const Rational& lo, const Rational& hi) {
  if (hi <= lo) return 0;
  return sign_variations(seq, lo) - sign_variations(seq, hi);
}

Rational root_bound(const IntPolynomial& p) {
  if (p.degree() <= 0) return Rational(1);
  Rational lc = abs(Rational(p.leading()));
  Rational m = 0;
  for (int i = 0; i < p.degree(); ++i) {
    Rational v = abs(Rational(p.coeffs()[static_cast<std::size_t>(i)])) / lc;
    if (v > m) m = v;
  }
  return m + 2;
}

RatMatrix companion(const RatPolynomial& monic) {
  std::size_t d = static_cast<std::size_t>(monic.degree());
  RatMatrix c(d, std::vector<Rational>(d));
  for (std::size_t i = 1; i < d; ++i) c[i][i - 1] = 1;
  for (std::size_t i = 0; i < d; ++i) c[i][d - 1] = -monic.coeff(i);
  return c;
}

RatPolynomial charpoly(const RatMatrix& m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw NonSquare("charpoly of a non-square matrix");
  RatMatrix h = m;
  // Similarity reduction to upper Hessenberg form.
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t piv = j + 1;
    while (piv < n && h[piv][j] == 0) ++piv;
    if (piv == n) continue;
    if (piv != j + 1) {
      std::swap(h[piv], h[j + 1]);
      for (std::size_t r = 0; r < n; ++r) std::swap(h[r][piv], h[r][j + 1]);
    }
    for (std::size_t r = j + 2; r < n; ++r) {
      if (h[r][j] == 0) continue;
      Rational u = h[r][j] / h[j + 1][j];
      for (std::size_t c = 0; c < n; ++c) h[r][c] -= u * h[j + 1][c];
      for (std::size_t c = 0; c < n; ++c) h[c][j + 1] += u * h[c][r];
    }
  }
  // Determinant recurrence for Hessenberg matrices; H(a, b) is 1-based.
  auto H = [&](std::size_t a, std::size_t b) -> const Rational& { return h[a - 1][b - 1]; };
  std::vector<RatPolynomial> p(n + 1);
  p[0] = RatPolynomial::constant(1);
  for (std::size_t k = 1; k <= n; ++k) {
    p[k] = RatPolynomial({Rational(-H(k, k)), Rational(1)}) * p[k - 1];
    Rational prod = 1;
    for (std::size_t i = 1; i < k; ++i) {
      prod *= H(k - i + 1, k - i);
      if (prod == 0) break;
      Rational f = H(k - i, k) * prod;
      if (f != 0) p[k] = p[k] - f * p[k - i - 1];
    }
  }
  return p[n];
}

}  // namespace past
