// Copyright (c) past contributors.
// SPDX-License-Identifier: Apache-2.0
#include "past/spectral/groups.hpp"

#include <algorithm>

#include "past/errors.hpp"
#include "past/exactnum/log_interval.hpp"

namespace past {

namespace {

ComplexAlgebraic unit_of(const ComplexAlgebraic& z, const RealAlgebraic& mod) {
  return {z.re / mod, z.im / mod};
}

bool positive_real(const ComplexAlgebraic& z) { return z.is_real() && z.re.sign() > 0; }

}  // namespace

const char* direction_name(Direction d) { return d == Direction::p ? "p" : "n"; }

GroupTable build_groups(const SpectralDecomposition& sd) {
  GroupTable t;
  for (std::size_t i = 0; i < sd.a.size(); ++i) {
    if (sd.a[i].is_zero() || sd.b[i].is_zero()) {
      t.excluded.push_back(i);
      continue;
    }
    GroupKey key{sd.a[i].modulus(), sd.b[i].modulus()};
    auto it = std::find_if(t.groups.begin(), t.groups.end(), [&](const Group& g) { return g.key == key; });
    if (it == t.groups.end()) {
      t.groups.push_back(Group{key, {}, {}, {}, {}});
      it = t.groups.end() - 1;
    }
    it->indices.push_back(i);
    it->units.push_back(Unit{unit_of(sd.a[i], key.mod_a), unit_of(sd.b[i], key.mod_b)});
    if (positive_real(sd.a[i]) && positive_real(sd.b[i])) {
      it->real_indices.push_back(i);
    } else {
      it->complex_indices.push_back(i);
    }
  }
  std::stable_sort(t.groups.begin(), t.groups.end(), [](const Group& x, const Group& y) {
    int c = compare(x.key.mod_a, y.key.mod_a);
    return c != 0 ? c < 0 : compare(x.key.mod_b, y.key.mod_b) < 0;
  });
  return t;
}

DyadicInterval log_inner_enclosure(const GroupKey& k, const RealAlgebraic& p, long bits) {
  DyadicInterval la = log_interval(k.mod_a, bits + 4);
  DyadicInterval lb = log_interval(k.mod_b, bits + 4);
  DyadicInterval pi = p.enclosure(bits + 8);
  DyadicInterval one{1, 1};
  return pi * la + (one - pi) * lb;
}

std::optional<int> compare_inner_by_logs(const GroupKey& k1, const GroupKey& k2, const RealAlgebraic& p,
                                         long max_bits, long* bits_used) {
  for (long bits = 16; bits <= max_bits; bits *= 2) {
    if (bits_used) *bits_used = bits;
    DyadicInterval e1 = log_inner_enclosure(k1, p, bits);
    DyadicInterval e2 = log_inner_enclosure(k2, p, bits);
    if (e1.hi < e2.lo) return -1;
    if (e2.hi < e1.lo) return 1;
  }
  return std::nullopt;
}

int compare_inner_exact(const GroupKey& k1, const GroupKey& k2, const Rational& p) {
  unsigned long u = p.get_num().get_ui(), v = p.get_den().get_ui();
  RealAlgebraic lhs = pow(k1.mod_a, u) * pow(k1.mod_b, v - u);
  RealAlgebraic rhs = pow(k2.mod_a, u) * pow(k2.mod_b, v - u);
  return compare(lhs, rhs);
}

int compare_inner(const GroupKey& k1, const GroupKey& k2, const RealAlgebraic& p) {
  if (k1 == k2) return 0;
  if (p.is_rational()) {
    if (auto c = compare_inner_by_logs(k1, k2, p, 64)) return *c;
    return compare_inner_exact(k1, k2, p.rational());
  }
  // Irrational algebraic p: distinct keys have distinct inner values, so the
  // enclosures separate eventually.
  if (auto c = compare_inner_by_logs(k1, k2, p, long(1) << 20)) return *c;
  throw InternalError("inner values failed to separate");
}

int lex_compare_groups(const GroupKey& k1, const GroupKey& k2, const RealAlgebraic& p, Direction d) {
  int c = compare_inner(k1, k2, p);
  if (c != 0) return c;
  int o = compare(k1.outer(), k2.outer());
  return d == Direction::p ? o : -o;
}

std::vector<std::size_t> lex_order(const GroupTable& t, const RealAlgebraic& p, Direction d) {
  std::vector<std::size_t> order(t.groups.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return lex_compare_groups(t.groups[x].key, t.groups[y].key, p, d) < 0;
  });
  return order;
}

std::optional<RealAlgebraic> exact_inner(const GroupKey& k, const RealAlgebraic& p, unsigned long max_den) {
  if (!p.is_rational() || p.rational().get_den() > max_den) return std::nullopt;
  unsigned long u = p.rational().get_num().get_ui(), v = p.rational().get_den().get_ui();
  return nth_root(pow(k.mod_a, u) * pow(k.mod_b, v - u), static_cast<unsigned>(v));
}

}  // namespace past
