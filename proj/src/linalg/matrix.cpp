// Copyright (c) past contributors.
// SPDX-License-Identifier: Apache-2.0
#include "past/linalg/matrix.hpp"

#include <sstream>

#include "past/errors.hpp"

namespace past {

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), e_(rows * cols) {}

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

ExactMatrix ExactMatrix::from_rational(const RatMatrix& r) {
  std::size_t cols = r.empty() ? 0 : r[0].size();
  ExactMatrix m(r.size(), cols);
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r[i].size() != cols) throw DimensionMismatch("ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = r[i][j];
  }
  return m;
}

ExactMatrix ExactMatrix::diagonal(const ExactVector& d) {
  ExactMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

bool ExactMatrix::is_real() const {
  for (const auto& z : e_)
    if (!z.is_real()) return false;
  return true;
}

bool ExactMatrix::is_rational() const {
  for (const auto& z : e_)
    if (!z.is_rational()) return false;
  return true;
}

RatMatrix ExactMatrix::to_rational() const {
  RatMatrix r(rows_, std::vector<Rational>(cols_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      const auto& z = (*this)(i, j);
      if (!z.is_rational() || !z.im.is_zero()) throw InternalError("matrix entry is not rational");
      r[i][j] = z.re.rational();
    }
  return r;
}

ExactVector ExactMatrix::row(std::size_t i) const {
  return ExactVector(e_.begin() + i * cols_, e_.begin() + (i + 1) * cols_);
}

ExactVector ExactMatrix::column(std::size_t j) const {
  ExactVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

ExactMatrix ExactMatrix::conj() const {
  ExactMatrix c = *this;
  for (auto& z : c.e_) z = z.conj();
  return c;
}

ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix sum");
  ExactMatrix r = a;
  for (std::size_t k = 0; k < r.e_.size(); ++k) r.e_[k] += b.e_[k];
  return r;
}

ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix difference");
  ExactMatrix r = a;
  for (std::size_t k = 0; k < r.e_.size(); ++k) r.e_[k] -= b.e_[k];
  return r;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols_ != b.rows_)
    throw DimensionMismatch("matrix product " + std::to_string(a.rows_) + "x" + std::to_string(a.cols_) +
                            " * " + std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
  ExactMatrix r(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const auto& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) r(i, j) += aik * b(k, j);
    }
  return r;
}

ExactMatrix operator*(const ComplexAlgebraic& s, const ExactMatrix& a) {
  ExactMatrix r = a;
  for (auto& z : r.e_) z = s * z;
  return r;
}

bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  for (std::size_t k = 0; k < a.e_.size(); ++k)
    if (!(a.e_[k] == b.e_[k])) return false;
  return true;
}

std::string ExactMatrix::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    os << "[";
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).to_string();
    os << "]\n";
  }
  return os.str();
}

ExactMatrix mul(const ExactMatrix& a, const ExactMatrix& b) { return a * b; }

ExactMatrix pow(const ExactMatrix& m, unsigned long e) {
  if (!m.is_square()) throw NonSquare("matrix power of a non-square matrix");
  ExactMatrix result = ExactMatrix::identity(m.rows());
  ExactMatrix base = m;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

namespace {

// In-place reduced row echelon form; returns the pivot columns.
std::vector<std::size_t> rref(ExactMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    ComplexAlgebraic inv = m(r, c).inverse();
    for (std::size_t j = c; j < m.cols(); ++j)
      if (!m(r, j).is_zero()) m(r, j) = m(r, j) * inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      ComplexAlgebraic f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

ExactMatrix inverse(const ExactMatrix& m) {
  if (!m.is_square()) throw NonSquare("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  ExactMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  auto pivots = rref(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw SingularMatrix("matrix is singular");
  ExactMatrix r(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r(i, j) = aug(i, n + j);
  return r;
}

ExactVector apply(const ExactMatrix& m, const ExactVector& x) {
  if (x.size() != m.cols())
    throw DimensionMismatch("vector of length " + std::to_string(x.size()) + " for " +
                            std::to_string(m.cols()) + " columns");
  ExactVector y(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t k = 0; k < m.cols(); ++k)
      if (!m(i, k).is_zero() && !x[k].is_zero()) y[i] += m(i, k) * x[k];
  return y;
}

std::vector<ExactVector> kernel(const ExactMatrix& m) {
  ExactMatrix r = m;
  auto pivots = rref(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<ExactVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    ExactVector v(m.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank(const ExactMatrix& m) {
  ExactMatrix r = m;
  return rref(r).size();
}

RatMatrix rat_identity(std::size_t n) {
  RatMatrix m(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

RatMatrix rat_mul(const RatMatrix& a, const RatMatrix& b) {
  std::size_t inner = b.size();
  std::size_t cols = b.empty() ? 0 : b[0].size();
  RatMatrix r(a.size(), std::vector<Rational>(cols));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != inner) throw DimensionMismatch("rational matrix product");
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) r[i][j] += a[i][k] * b[k][j];
    }
  }
  return r;
}

RatMatrix rat_pow(const RatMatrix& m, unsigned long e) {
  RatMatrix result = rat_identity(m.size());
  RatMatrix base = m;
  while (e) {
    if (e & 1) result = rat_mul(result, base);
    e >>= 1;
    if (e) base = rat_mul(base, base);
  }
  return result;
}

std::vector<Rational> rat_apply(const RatMatrix& m, const std::vector<Rational>& x) {
  std::vector<Rational> y(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i].size() != x.size()) throw DimensionMismatch("rational matrix-vector product");
    for (std::size_t k = 0; k < x.size(); ++k)
      if (m[i][k] != 0) y[i] += m[i][k] * x[k];
  }
  return y;
}

}  // namespace past
