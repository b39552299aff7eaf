// Copyright (c) past contributors.
// SPDX-License-Identifier: Apache-2.0
#include "past/witness/decide.hpp"

#include <numeric>

#include "past/errors.hpp"
#include "past/witness/smtlib.hpp"

namespace past {

const char* status_name(Status s) {
  switch (s) {
    case Status::terminating: return "TERMINATING";
    case Status::nonterminating: return "NONTERMINATING";
    case Status::unknown: return "UNKNOWN";
  }
  return "UNKNOWN";
}

std::vector<Rational> scale_to_semiring(const std::vector<Rational>& x, Semiring semiring) {
  if (is_nonneg(semiring))
    for (std::size_t k = 0; k < x.size(); ++k)
      if (x[k] < 0)
        throw NegativeEntryForNonnegSemiring("x[" + std::to_string(k) + "] = " + to_string(x[k]) + " is negative but the semiring is " +
                                             semiring_name(semiring));
  if (!needs_integral(semiring)) return x;
  Integer l = 1;
  for (const auto& q : x) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  std::vector<Rational> y;
  for (const auto& q : x) y.emplace_back(q * l);
  return y;
}

namespace {

std::vector<RealAlgebraic> model_point(const SolverResult& r, std::size_t n) {
  std::vector<RealAlgebraic> x(n);
  for (std::size_t k = 0; k < n; ++k) {
    auto it = r.model.find("x" + std::to_string(k + 1));
    if (it != r.model.end()) x[k] = it->second;  // unconstrained variables default to 0
  }
  return x;
}

ExactVector as_exact(const std::vector<RealAlgebraic>& x) {
  ExactVector v;
  for (const auto& c : x) v.emplace_back(c);
  return v;
}

bool all_rational(const std::vector<RealAlgebraic>& x) {
  for (const auto& c : x)
    if (!c.is_rational()) return false;
  return true;
}

// A dyadic with `bits` fractional bits near v, never below 0 when v >= 0.
Rational dyadic_near(const RealAlgebraic& v, long bits) {
  if (v.is_rational()) return v.rational();
  DyadicInterval iv = v.enclosure(bits + 2);
  Rational scale = pow2(bits);
  Rational q(floor_of((iv.lo + iv.hi) / 2 * scale + Rational(1, 2)), 1);
  q /= scale;
  q.canonicalize();
  if (v.sign() >= 0 && q < 0) q = 0;
  return q;
}

class Decider {
 public:
  Decider(const Analysis& an, Semiring semiring, const DecideConfig& config, Verdict& v)
      : an_(an), semiring_(semiring), config_(config), v_(v) {}

  // Runs one script; solver failures become unknown with a note.
  SolverResult query(const std::string& script) {
    try {
      return run_solver(script, config_.solver);
    } catch (const Error& e) {
      SolverResult r;
      r.status = SatStatus::unknown;
      r.diagnostic = e.kind() + ": " + e.what();
      return r;
    }
  }

  // Turns a SAT model into an accepted witness, or explains in `result` why not.
  std::optional<std::vector<RealAlgebraic>> accept(const SolverResult& r, const WitnessFormula* f, std::string& result) {
    std::vector<RealAlgebraic> x = model_point(r, an_.loop.n);
    if (needs_rational(semiring_) && !all_rational(x)) {
      x = rationalize(x, f);
      if (!all_rational(x)) {
        result = "sat-irrational";
        return std::nullopt;
      }
    }
    if (!membership_check(as_exact(x), an_)) {
      result = "sat-rejected";
      v_.notes.push_back("solver model failed the exact membership check");
      return std::nullopt;
    }
    if (needs_rational(semiring_)) {
      std::vector<Rational> q;
      for (const auto& c : x) q.push_back(c.rational());
      q = scale_to_semiring(q, semiring_);
      x.assign(q.begin(), q.end());
    }
    result = "sat";
    return x;
  }

 private:
  // Dyadic rounding first, then pinning coordinates one at a time and
  // re-querying. Returns x unchanged when neither yields a rational point.
  std::vector<RealAlgebraic> rationalize(const std::vector<RealAlgebraic>& x, const WitnessFormula* f) {
    for (long bits : {4L, 8L, 16L, 32L, 64L}) {
      std::vector<RealAlgebraic> y;
      for (const auto& c : x) y.emplace_back(dyadic_near(c, bits));
      if (membership_check(as_exact(y), an_)) {
        v_.notes.push_back("irrational model rounded to " + std::to_string(bits) + "-bit dyadics");
        return y;
      }
    }
    if (f == nullptr) return x;
    std::vector<Pin> pins;
    std::vector<RealAlgebraic> cur = x;
    for (std::size_t k = 0; k < cur.size(); ++k) {
      pins.push_back({k, dyadic_near(cur[k], 16)});
      SolverResult r = query(emit_smtlib(*f, pins));
      ++v_requeries_;
      if (r.status != SatStatus::sat) {
        v_.notes.push_back("pinning x" + std::to_string(k + 1) + " to " + to_string(pins.back().value) + " gave " +
                           sat_status_name(r.status));
        return x;
      }
      cur = model_point(r, cur.size());
    }
    v_.notes.push_back("rational witness found after " + std::to_string(v_requeries_) + " pinned re-queries");
    return cur;
  }

  const Analysis& an_;
  Semiring semiring_;
  const DecideConfig& config_;
  Verdict& v_;
  std::size_t v_requeries_ = 0;
};

}  // namespace

Verdict decide(const Analysis& an, Semiring semiring, const DecideConfig& config) {
  Verdict v;
  v.semiring = semiring;
  FormulaSet fs = build_witness_formulas(an, semiring);
  v.disjuncts_raw = fs.raw_count.get_ui();
  v.disjuncts = fs.formulas.size();
  if (fs.formulas.empty()) {
    v.status = Status::terminating;
    v.notes.push_back("every disjunct pruned: no group with a nonempty R part can dominate");
    return v;
  }
  Decider dec(an, semiring, config, v);
  bool irrational_only = false, unknown = false;
  auto finish = [&](std::vector<RealAlgebraic> x) {
    v.certificate = membership_check(as_exact(x), an);
    v.witness = std::move(x);
    v.status = Status::nonterminating;
    return v;
  };

  if (config.single_query) {
    SolverResult r = dec.query(emit_smtlib_union(fs.formulas, an.loop.n));
    QueryRecord rec{std::nullopt, {}, sat_status_name(r.status), r.seconds};
    if (!r.diagnostic.empty()) v.notes.push_back(r.diagnostic);
    std::optional<std::vector<RealAlgebraic>> x;
    if (r.status == SatStatus::sat) {
      try {
        x = dec.accept(r, nullptr, rec.result);
      } catch (const Error& e) {
        rec.result = "sat-unreadable";
        v.notes.push_back(e.kind() + ": " + e.what());
      }
    }
    v.queries.push_back(rec);
    if (x) return finish(std::move(*x));
    if (r.status == SatStatus::unsat) {
      v.status = Status::terminating;
      return v;
    }
    irrational_only = rec.result == "sat-irrational";
    unknown = !irrational_only;
  } else {
    for (const auto& f : fs.formulas) {
      SolverResult r = dec.query(emit_smtlib(f));
      QueryRecord rec{f.d, f.assignment, sat_status_name(r.status), r.seconds};
      if (!r.diagnostic.empty()) v.notes.push_back(r.diagnostic);
      std::optional<std::vector<RealAlgebraic>> x;
      if (r.status == SatStatus::sat) {
        try {
          x = dec.accept(r, &f, rec.result);
        } catch (const Error& e) {
          rec.result = "sat-unreadable";
          v.notes.push_back(e.kind() + ": " + e.what());
        }
      }
      v.queries.push_back(rec);
      if (x) return finish(std::move(*x));
      if (rec.result == "sat-irrational") {
        irrational_only = true;
      } else if (r.status != SatStatus::unsat) {
        unknown = true;
      }
    }
  }

  if (!irrational_only && !unknown) {
    v.status = Status::terminating;
    return v;
  }
  v.status = Status::unknown;
  if (irrational_only)
    v.notes.push_back(std::string("witness set is nonempty over A but no witness over ") + semiring_name(semiring) +
                      " was found; the loop is NONTERMINATING over A");
  if (unknown) v.notes.push_back("some disjunct was not decided by the solver");
  return v;
}

Json verdict_json(const Verdict& v, const Analysis& an, bool timings) {
  Json j;
  j["status"] = status_name(v.status);
  j["semiring"] = semiring_name(v.semiring);
  if (v.witness) {
    Json w = Json::array();
    for (const auto& c : *v.witness) w.push_back(to_json(c));
    j["witness"] = w;
  } else {
    j["witness"] = nullptr;
  }
  if (v.certificate) {
    Json c;
    c["d"] = direction_name(v.certificate->d);
    Json a = Json::array(), m = Json::array();
    for (auto g : v.certificate->assignment) {
      const GroupKey& key = an.table.groups[g].key;
      a.push_back(Json::array({to_json(key.mod_a), to_json(key.mod_b)}));
    }
    for (const auto& r : v.certificate->margins) m.push_back(to_json(r));
    c["assignment"] = a;
    c["margins"] = m;
    j["certificate"] = c;
  } else {
    j["certificate"] = nullptr;
  }
  Json d;
  d["disjuncts_raw"] = v.disjuncts_raw;
  d["disjuncts"] = v.disjuncts;
  Json qs = Json::array();
  double total = 0;
  for (const auto& q : v.queries) {
    Json e;
    if (q.d) {
      e["d"] = direction_name(*q.d);
      Json a = Json::array();
      for (auto g : q.assignment) a.push_back(g + 1);
      e["groups"] = a;
    } else {
      e["union"] = true;
    }
    e["result"] = q.result;
    if (timings) e["seconds"] = q.seconds;
    total += q.seconds;
    qs.push_back(e);
  }
  d["queries"] = qs;
  if (timings) d["solver_seconds"] = total;
  if (!v.notes.empty()) d["notes"] = v.notes;
  j["diagnostics"] = d;
  return j;
}

}  // namespace past
