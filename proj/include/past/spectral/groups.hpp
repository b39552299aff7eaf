// Copyright (c) past contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <vector>

#include "past/exactnum/interval.hpp"
#include "past/linalg/eigen.hpp"

namespace past {

// (|a|, |b|); equivalent to (inner, outer) = (|a|^p |b|^(1-p), |a| / |b|).
struct GroupKey {
  RealAlgebraic mod_a;
  RealAlgebraic mod_b;

  RealAlgebraic outer() const { return mod_a / mod_b; }
  friend bool operator==(const GroupKey& x, const GroupKey& y) { return x.mod_a == y.mod_a && x.mod_b == y.mod_b; }
};

struct Unit {
  ComplexAlgebraic zeta_a;  // a_i / |a_i|
  ComplexAlgebraic zeta_b;  // b_i / |b_i|
  bool is_one() const { return zeta_a == ComplexAlgebraic(1) && zeta_b == ComplexAlgebraic(1); }
};

struct Group {
  GroupKey key;
  std::vector<std::size_t> indices;          // ascending
  std::vector<Unit> units;                   // parallel to indices
  std::vector<std::size_t> real_indices;     // both eigenvalues positive real
  std::vector<std::size_t> complex_indices;  // the rest
};

struct GroupTable {
  std::vector<Group> groups;          // sorted by (|a|, |b|) ascending
  std::vector<std::size_t> excluded;  // indices with a_i = 0 or b_i = 0
};

GroupTable build_groups(const SpectralDecomposition& sd);

enum class Direction { p, n };
const char* direction_name(Direction d);  // "p" / "n"

// Sign of inner(k1) - inner(k2), where inner = |a|^p |b|^(1-p).
int compare_inner(const GroupKey& k1, const GroupKey& k2, const RealAlgebraic& p);
// Enclosure of ln inner(k) = p ln|a| + (1-p) ln|b|.
DyadicInterval log_inner_enclosure(const GroupKey& k, const RealAlgebraic& p, long bits);
// Decides the inner comparison from log enclosures alone, refining up to
// max_bits; nullopt if the enclosures never separate (e.g. equal values).
std::optional<int> compare_inner_by_logs(const GroupKey& k1, const GroupKey& k2, const RealAlgebraic& p,
                                         long max_bits, long* bits_used = nullptr);
// Exact comparison for rational p = u/v: |a1|^u |b1|^(v-u) vs |a2|^u |b2|^(v-u).
int compare_inner_exact(const GroupKey& k1, const GroupKey& k2, const Rational& p);

// Lexicographic order on (inner, outer); the outer comparison is flipped for
// Direction::n. Returns -1, 0 or 1.
int lex_compare_groups(const GroupKey& k1, const GroupKey& k2, const RealAlgebraic& p, Direction d);

// Group indices sorted ascending by lex_compare_groups for direction d.
std::vector<std::size_t> lex_order(const GroupTable& t, const RealAlgebraic& p, Direction d);

// Exact inner value when p = u/v with v <= max_den, else nullopt.
std::optional<RealAlgebraic> exact_inner(const GroupKey& k, const RealAlgebraic& p, unsigned long max_den = 12);

}  // namespace past
