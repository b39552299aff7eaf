// Copyright (c) past contributors.
// SPDX-License-Identifier: Apache-2.0
#include "past/spectral/conditions.hpp"

#include <cassert>

namespace past {

bool EqualityCondition::holds(const ExactVector& x) const {
  for (const auto& f : forms)
    if (!eval_form(f, x).is_zero()) return false;
  return true;
}

EqualityCondition zero_coefficient_condition(std::size_t c, const Group& g, const GammaTable& gamma,
                                             const std::vector<std::size_t>& sigma) {
  // Classes of indices sharing (a_i, b_i); equal moduli make equal units
  // the same as equal eigenpairs.
  const std::size_t size = g.indices.size();
  std::vector<std::size_t> cls(size, size);
  std::vector<std::size_t> heads;
  for (std::size_t s = 0; s < size; ++s) {
    if (cls[s] != size) continue;
    cls[s] = heads.size();
    for (std::size_t t = s + 1; t < size; ++t)
      if (cls[t] == size && g.units[t].zeta_a == g.units[s].zeta_a && g.units[t].zeta_b == g.units[s].zeta_b)
        cls[t] = heads.size();
    heads.push_back(s);
  }
  std::vector<LinearForm> sums(heads.size(), LinearForm(gamma.n));
  for (std::size_t s = 0; s < size; ++s) sums[cls[s]] = add_forms(sums[cls[s]], gamma.g[c][g.indices[s]]);

  auto position = [&](std::size_t index) {
    for (std::size_t s = 0; s < size; ++s)
      if (g.indices[s] == index) return s;
    return size;
  };

  EqualityCondition out;
  std::vector<bool> done(heads.size(), false);
  for (std::size_t h = 0; h < heads.size(); ++h) {
    if (done[h]) continue;
    done[h] = true;
    std::size_t mirror_pos = position(sigma[g.indices[heads[h]]]);
    std::size_t mirror = mirror_pos == size ? h : cls[mirror_pos];
    RealForm re = real_part(sums[h]);
    if (!is_zero_form(re)) out.forms.push_back(re);
    if (mirror == h) continue;  // self-conjugate class: the sum is real
    done[mirror] = true;
    RealForm im = imag_part(sums[h]);
    if (!is_zero_form(im)) out.forms.push_back(im);
#ifndef NDEBUG
    // Unsimplified form: the mirror class sum is the conjugate.
    for (std::size_t k = 0; k < gamma.n; ++k) assert(sums[mirror][k] == sums[h][k].conj());
#endif
  }
  return out;
}

PositivityCondition positivity_condition(std::size_t c, const Group& g, const GammaTable& gamma) {
  PositivityCondition out;
  LinearForm lhs(gamma.n);
  for (std::size_t i : g.real_indices) lhs = add_forms(lhs, gamma.g[c][i]);
  out.lhs = real_part(lhs);
  for (std::size_t i : g.complex_indices) out.moduli.push_back(gamma.g[c][i]);
  return out;
}

Analysis analyze(const Loop& loop) {
  Analysis an;
  an.loop = loop;
  an.sd = simultaneous_diagonalize(loop.A_exact(), loop.B_exact());
  an.gamma = compute_gamma(loop, an.sd);
  an.table = build_groups(an.sd);
  an.order_p = lex_order(an.table, loop.p, Direction::p);
  an.order_n = lex_order(an.table, loop.p, Direction::n);
  an.zero.resize(loop.m);
  an.pos.resize(loop.m);
  for (std::size_t c = 0; c < loop.m; ++c)
    for (const auto& g : an.table.groups) {
      an.zero[c].push_back(zero_coefficient_condition(c, g, an.gamma, an.sd.sigma));
      an.pos[c].push_back(positivity_condition(c, g, an.gamma));
    }
  return an;
}

std::optional<std::size_t> dominant_group_at(const ExactVector& x, std::size_t c, Direction d, const Analysis& an) {
  const auto& order = an.order(d);
  for (std::size_t r = order.size(); r-- > 0;)
    if (!an.zero[c][order[r]].holds(x)) return order[r];
  return std::nullopt;
}

bool necessary_condition(const ExactVector& x, const Analysis& an) {
  for (Direction d : {Direction::p, Direction::n}) {
    bool all = an.loop.m > 0;
    for (std::size_t c = 0; c < an.loop.m && all; ++c) {
      auto g = dominant_group_at(x, c, d, an);
      all = g && eval_form(an.pos[c][*g].lhs, x).sign() > 0;
    }
    if (all) return true;
  }
  return false;
}

ComplexAlgebraic group_coefficient(const Group& g, const GammaTable& gamma, std::size_t c, const ExactVector& x,
                                   unsigned long j, unsigned long k) {
  ComplexAlgebraic s;
  for (std::size_t t = 0; t < g.indices.size(); ++t) {
    ComplexAlgebraic v = gamma.eval(c, g.indices[t], x);
    if (v.is_zero()) continue;
    s += pow(g.units[t].zeta_a, j) * pow(g.units[t].zeta_b, k) * v;
  }
  return s;
}

}  // namespace past
