// Copyright (c) past contributors.
// SPDX-License-Identifier: Apache-2.0
#include "past/witness/formula.hpp"

namespace past {

FormulaSet build_witness_formulas(const Analysis& an, Semiring semiring) {
  FormulaSet out;
  const std::size_t m = an.loop.m, groups = an.table.groups.size();
  Integer per_d = 1;
  for (std::size_t c = 0; c < m; ++c) per_d *= static_cast<unsigned long>(groups);
  out.raw_count = groups == 0 ? Integer(0) : Integer(2 * per_d);
  if (groups == 0) return out;

  for (Direction d : {Direction::p, Direction::n}) {
    const auto& order = an.order(d);
    std::vector<std::size_t> rank(groups);
    for (std::size_t r = 0; r < groups; ++r) rank[order[r]] = r;
    // Surviving candidates per constraint, lex-greatest first.
    std::vector<std::vector<std::size_t>> digits(m);
    bool empty = false;
    for (std::size_t c = 0; c < m; ++c) {
      for (std::size_t r = groups; r-- > 0;) {
        std::size_t g = order[r];
        if (!an.table.groups[g].real_indices.empty() && !an.pos[c][g].lhs_identically_zero())
          digits[c].push_back(g);
      }
      empty = empty || digits[c].empty();
    }
    if (empty) continue;
    std::vector<std::size_t> odo(m, 0);
    while (true) {
      WitnessFormula f;
      f.d = d;
      f.n = an.loop.n;
      f.nonneg = is_nonneg(semiring);
      for (std::size_t c = 0; c < m; ++c) {
        std::size_t g = digits[c][odo[c]];
        f.assignment.push_back(g);
        WitnessFormula::Constraint k{an.pos[c][g], {}};
        for (std::size_t r = rank[g] + 1; r < groups; ++r) {
          const auto& forms = an.zero[c][order[r]].forms;
          k.equalities.insert(k.equalities.end(), forms.begin(), forms.end());
        }
        f.constraints.push_back(std::move(k));
      }
      out.formulas.push_back(std::move(f));
      std::size_t c = m;
      while (c-- > 0) {
        if (++odo[c] < digits[c].size()) break;
        odo[c] = 0;
      }
      if (c == static_cast<std::size_t>(-1)) break;
    }
  }
  return out;
}

}  // namespace past
