// Copyright (c) past contributors.
// SPDX-License-Identifier: Apache-2.0
#include "past/loopmodel/simulate.hpp"

#include <thread>

#include "past/errors.hpp"

namespace past {

namespace {

std::uint64_t mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

Integer lcm_of_denominators(const std::vector<Rational>& v) {
  Integer l = 1;
  for (const auto& q : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  return l;
}

using IntRow = std::vector<Integer>;

std::vector<IntRow> integerize(const RatMatrix& m) {
  std::vector<Rational> flat;
  for (const auto& row : m) flat.insert(flat.end(), row.begin(), row.end());
  Integer l = lcm_of_denominators(flat);
  std::vector<IntRow> out;
  for (const auto& row : m) {
    IntRow r;
    for (const auto& q : row) r.push_back(Integer(q * l));
    out.push_back(std::move(r));
  }
  return out;
}

// Positive rescalings of A, B, x and each rational guard row leave the sign
// of every guard value unchanged, so runs can use integer arithmetic.
struct Prepared {
  std::vector<IntRow> a, b;
  std::vector<std::optional<IntRow>> c_int;  // nullopt for rows with irrational entries
  const ExactMatrix* c = nullptr;
  IntRow x0;
  std::uint64_t threshold = 0;  // choose A iff draw < threshold
  bool always_a = false;
};

Prepared prepare(const Loop& loop, const std::vector<Rational>& x) {
  if (x.size() != loop.n)
    throw DimensionMismatch("input has " + std::to_string(x.size()) + " entries, loop has n = " +
                            std::to_string(loop.n));
  Prepared p;
  p.a = integerize(loop.A);
  p.b = integerize(loop.B);
  p.c = &loop.C;
  for (std::size_t i = 0; i < loop.m; ++i) {
    bool rational = true;
    for (std::size_t j = 0; j < loop.n; ++j) rational = rational && loop.C(i, j).is_rational();
    if (!rational) {
      p.c_int.emplace_back();
      continue;
    }
    RatMatrix row(1);
    for (std::size_t j = 0; j < loop.n; ++j) row[0].push_back(loop.C(i, j).re.rational());
    p.c_int.push_back(integerize(row)[0]);
  }
  Integer l = lcm_of_denominators(x);
  for (const auto& q : x) p.x0.push_back(Integer(q * l));
  // Bracket p by a rational within 2^-64; exact for dyadic p such as 1/2.
  Rational lo = loop.p.is_rational() ? loop.p.rational() : loop.p.enclosure(70).lo;
  Integer t = floor_of(lo * pow2(64));
  if (t >= Integer(pow2(64))) {
    p.always_a = true;
  } else {
    p.threshold = t.get_ui();  // unsigned long is 64-bit on supported targets
  }
  return p;
}

bool row_positive(const Prepared& p, std::size_t i, const IntRow& v) {
  if (p.c_int[i]) {
    Integer s = 0;
    const IntRow& c = *p.c_int[i];
    for (std::size_t j = 0; j < v.size(); ++j)
      if (c[j] != 0) s += c[j] * v[j];
    return s > 0;
  }
  const ExactMatrix& c = *p.c;
  for (long bits = 64; bits <= 1024; bits *= 2) {
    DyadicInterval acc{0, 0};
    for (std::size_t j = 0; j < v.size(); ++j) acc = acc + Rational(v[j]) * c(i, j).re.enclosure(bits);
    if (acc.lo > 0) return true;
    if (acc.hi < 0) return false;
  }
  RealAlgebraic s;
  for (std::size_t j = 0; j < v.size(); ++j) s += RealAlgebraic(Rational(v[j])) * c(i, j).re;
  return s.sign() > 0;
}

bool guard_holds(const Prepared& p, const IntRow& v) {
  for (std::size_t i = 0; i < p.c_int.size(); ++i)
    if (!row_positive(p, i, v)) return false;
  return true;
}

void step(const std::vector<IntRow>& m, IntRow& v, IntRow& scratch) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    scratch[i] = 0;
    for (std::size_t j = 0; j < v.size(); ++j)
      if (m[i][j] != 0) scratch[i] += m[i][j] * v[j];
  }
  std::swap(v, scratch);
}

void reduce(IntRow& v) {
  Integer g = 0;
  for (const auto& e : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.get_mpz_t());
  if (g > 1)
    for (auto& e : v) mpz_divexact(e.get_mpz_t(), e.get_mpz_t(), g.get_mpz_t());
}

std::uint64_t run_prepared(const Prepared& p, std::uint64_t cap, std::uint64_t seed, std::uint64_t run) {
  SplitMix64 rng(seed, run);
  IntRow v = p.x0, scratch(v.size());
  for (std::uint64_t k = 0; k < cap; ++k) {
    if (!guard_holds(p, v)) return k;
    bool take_a = p.always_a || rng.next() < p.threshold;
    step(take_a ? p.a : p.b, v, scratch);
    if ((k & 15) == 15) reduce(v);
  }
  return cap;
}

}  // namespace

SplitMix64::SplitMix64(std::uint64_t seed, std::uint64_t stream) : state_(mix(seed ^ mix(stream + kGolden))) {}

std::uint64_t SplitMix64::next() {
  state_ += kGolden;
  return mix(state_);
}

std::uint64_t simulate_run(const Loop& loop, const std::vector<Rational>& x, std::uint64_t cap,
                           std::uint64_t seed, std::uint64_t run) {
  return run_prepared(prepare(loop, x), cap, seed, run);
}

RunStats simulate(const Loop& loop, const std::vector<Rational>& x, std::uint64_t runs, std::uint64_t cap,
                  std::uint64_t seed, unsigned threads) {
  if (runs < 1 || cap < 1) throw ParseError("simulate needs runs >= 1 and cap >= 1");
  Prepared p = prepare(loop, x);
  std::vector<std::uint64_t> runtime(runs);
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::min<std::uint64_t>(runs, 64))));
  if (threads == 1) {
    for (std::uint64_t r = 0; r < runs; ++r) runtime[r] = run_prepared(p, cap, seed, r);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back([&, t] {
        for (std::uint64_t r = t; r < runs; r += threads) runtime[r] = run_prepared(p, cap, seed, r);
      });
    for (auto& th : pool) th.join();
  }

  RunStats s;
  s.runs = runs;
  s.cap = cap;
  s.seed = seed;
  Integer total = 0;
  for (std::uint64_t r = 0; r < runs; ++r) {
    if (runtime[r] < cap) {
      ++s.terminated;
      total += Integer(std::to_string(runtime[r]));
    }
    if (s.runtimes.size() < RunStats::kMaxSamples) s.runtimes.push_back(runtime[r]);
  }
  s.survivors = runs - s.terminated;
  s.survival_fraction = Rational(Integer(std::to_string(s.survivors)), Integer(std::to_string(runs)));
  s.survival_fraction.canonicalize();
  if (s.terminated) {
    Rational mean(total, Integer(std::to_string(s.terminated)));
    mean.canonicalize();
    s.mean_runtime_of_terminated = mean;
  }
  return s;
}

Json to_json(const RunStats& s) {
  Json out = Json::object();
  out["runs"] = s.runs;
  out["cap"] = s.cap;
  out["seed"] = s.seed;
  out["terminated"] = s.terminated;
  out["survivors"] = s.survivors;
  out["survival_fraction"] = to_string(s.survival_fraction);
  out["mean_runtime_of_terminated"] =
      s.mean_runtime_of_terminated ? Json(to_string(*s.mean_runtime_of_terminated)) : Json(nullptr);
  out["runtime_samples"] = s.runtimes;
  return out;
}

}  // namespace past
