// Copyright (c) past contributors.
// SPDX-License-Identifier: Apache-2.0
#include "past/spectral/gamma.hpp"

#include "past/errors.hpp"

namespace past {

ComplexAlgebraic eval_form(const LinearForm& f, const ExactVector& x) {
  if (f.size() != x.size()) throw DimensionMismatch("linear form and vector lengths differ");
  ComplexAlgebraic s;
  for (std::size_t k = 0; k < f.size(); ++k)
    if (!f[k].is_zero() && !x[k].is_zero()) s += f[k] * x[k];
  return s;
}

RealAlgebraic eval_form(const RealForm& f, const ExactVector& x) {
  if (f.size() != x.size()) throw DimensionMismatch("linear form and vector lengths differ");
  RealAlgebraic s;
  for (std::size_t k = 0; k < f.size(); ++k) {
    if (!x[k].is_real()) throw InternalError("real form evaluated at a non-real vector");
    if (!f[k].is_zero() && !x[k].is_zero()) s += f[k] * x[k].re;
  }
  return s;
}

bool is_zero_form(const RealForm& f) {
  for (const auto& v : f)
    if (!v.is_zero()) return false;
  return true;
}

RealForm real_part(const LinearForm& f) {
  RealForm r;
  for (const auto& z : f) r.push_back(z.re);
  return r;
}

RealForm imag_part(const LinearForm& f) {
  RealForm r;
  for (const auto& z : f) r.push_back(z.im);
  return r;
}

LinearForm add_forms(const LinearForm& a, const LinearForm& b) {
  LinearForm r = a;
  for (std::size_t k = 0; k < r.size(); ++k) r[k] += b[k];
  return r;
}

GammaTable compute_gamma(const Loop& loop, const SpectralDecomposition& sd) {
  GammaTable t;
  t.m = loop.m;
  t.n = loop.n;
  ExactMatrix cs = loop.C * sd.S;
  t.g.assign(t.m, std::vector<LinearForm>(t.n, LinearForm(t.n)));
  for (std::size_t c = 0; c < t.m; ++c)
    for (std::size_t i = 0; i < t.n; ++i) {
      if (cs(c, i).is_zero()) continue;
      for (std::size_t k = 0; k < t.n; ++k)
        if (!sd.S_inv(i, k).is_zero()) t.g[c][i][k] = cs(c, i) * sd.S_inv(i, k);
    }
  return t;
}

ExactVector closed_form_values(const SpectralDecomposition& sd, const GammaTable& gamma, const ExactVector& x,
                               unsigned long j, unsigned long k) {
  if (x.size() != gamma.n) throw DimensionMismatch("input length does not match the loop dimension");
  ExactVector weights(gamma.n);
  for (std::size_t i = 0; i < gamma.n; ++i) weights[i] = pow(sd.a[i], j) * pow(sd.b[i], k);
  ExactVector out(gamma.m);
  for (std::size_t c = 0; c < gamma.m; ++c)
    for (std::size_t i = 0; i < gamma.n; ++i) {
      if (weights[i].is_zero()) continue;
      ComplexAlgebraic g = gamma.eval(c, i, x);
      if (!g.is_zero()) out[c] += weights[i] * g;
    }
  return out;
}

}  // namespace past
