// Copyright (c) past contributors.
// SPDX-License-Identifier: Apache-2.0
#include "past/witness/membership.hpp"

namespace past {

std::optional<Certificate> membership_check(const ExactVector& x, const Analysis& an) {
  for (Direction d : {Direction::p, Direction::n}) {
    Certificate cert;
    cert.d = d;
    bool ok = an.loop.m > 0;
    for (std::size_t c = 0; c < an.loop.m && ok; ++c) {
      auto g = dominant_group_at(x, c, d, an);
      if (!g || an.table.groups[*g].real_indices.empty()) {
        ok = false;
        break;
      }
      const PositivityCondition& pc = an.pos[c][*g];
      RealAlgebraic margin = eval_form(pc.lhs, x);
      if (margin.sign() <= 0) {
        ok = false;
        break;
      }
      for (const auto& mf : pc.moduli) margin -= eval_form(mf, x).modulus();
      ok = margin.sign() > 0;
      cert.assignment.push_back(*g);
      cert.margins.push_back(margin);
    }
    if (ok) return cert;
  }
  return std::nullopt;
}

}  // namespace past
