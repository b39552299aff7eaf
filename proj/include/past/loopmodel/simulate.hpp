// Copyright (c) past contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "past/loopmodel/loop.hpp"

namespace past {

// Counter-based SplitMix64 stream; stream(seed, r) is the substream of run r.
class SplitMix64 {
 public:
  SplitMix64(std::uint64_t seed, std::uint64_t stream);
  std::uint64_t next();

 private:
  std::uint64_t state_;
};

struct RunStats {
  std::uint64_t runs = 0;
  std::uint64_t cap = 0;
  std::uint64_t seed = 0;
  std::uint64_t terminated = 0;
  std::uint64_t survivors = 0;
  std::vector<std::uint64_t> runtimes;  // first kMaxSamples runs, in run order
  Rational survival_fraction;
  std::optional<Rational> mean_runtime_of_terminated;

  static constexpr std::size_t kMaxSamples = 1000;
};

// Runtime of a run: the first step count whose guard value is not > 0, or
// `cap` for runs still alive after cap steps (reported as survivors).
// Deterministic in (seed, runs, cap) for any thread count.
RunStats simulate(const Loop& loop, const std::vector<Rational>& x, std::uint64_t runs, std::uint64_t cap,
                  std::uint64_t seed, unsigned threads = 1);

// One run; exposed for tests.
std::uint64_t simulate_run(const Loop& loop, const std::vector<Rational>& x, std::uint64_t cap,
                           std::uint64_t seed, std::uint64_t run);

Json to_json(const RunStats& s);

}  // namespace past
