// Copyright (c) past contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "past/exactnum/rational.hpp"

namespace past::test {

inline std::string fixture(const std::string& name) { return std::string(PAST_FIXTURE_DIR) + "/" + name; }

inline bool solver_available() {
  static const bool ok = std::system("z3 -version > /dev/null 2>&1") == 0;
  return ok;
}

// Seeded source of random test cases.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }

  // num / den with |num| <= num_bound and 1 <= den <= den_bound.
  Rational rational(long num_bound, long den_bound) {
    Rational q(integer(-num_bound, num_bound), integer(1, den_bound));
    q.canonicalize();
    return q;
  }
  Rational positive(long num_bound, long den_bound) {
    Rational q(integer(1, num_bound), integer(1, den_bound));
    q.canonicalize();
    return q;
  }
  std::vector<Rational> vec(std::size_t n, long num_bound, long den_bound) {
    std::vector<Rational> v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(rational(num_bound, den_bound));
    return v;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace past::test
