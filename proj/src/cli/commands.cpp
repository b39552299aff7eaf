// Copyright (c) past contributors.
// SPDX-License-Identifier: Apache-2.0
#include "past/cli/commands.hpp"

#include <cstdlib>
#include <iostream>

#include "CLI11.hpp"
#include "past/cli/report.hpp"
#include "past/errors.hpp"
#include "past/spectral/report.hpp"

namespace past {

int exit_code(Status s) {
  switch (s) {
    case Status::terminating: return kExitTerminating;
    case Status::nonterminating: return kExitNonterminating;
    case Status::unknown: return kExitUnknown;
  }
  return kExitUnknown;
}

namespace {

struct Options {
  std::string file;
  std::string semiring;
  std::string solver_cmd;
  long timeout = 0;
  bool single_query = false;
  bool pretty = false;
  bool timings = false;
  bool lift = false;
  std::string input;
  std::uint64_t runs = 1000;
  std::uint64_t cap = 1000;
  std::uint64_t seed = 0;
};

bool is_input_error(const Error& e) {
  static const char* kinds[] = {"ParseError",        "ProbabilityOutOfRange", "SemiringViolation",
                                "NotCommuting",      "NotDiagonalizable",     "DimensionMismatch",
                                "NegativeEntryForNonnegSemiring"};
  for (const char* k : kinds)
    if (e.kind() == k) return true;
  return false;
}

Loop load(const Options& o) {
  std::optional<Semiring> s;
  if (!o.semiring.empty()) s = parse_semiring(o.semiring);
  return load_loop_file(o.file, s);
}

DecideConfig decide_config(const Options& o) {
  DecideConfig cfg;
  if (const char* env = std::getenv("PAST_SOLVER_CMD"); env && *env) cfg.solver.command = env;
  if (const char* env = std::getenv("PAST_TIMEOUT"); env && *env) {
    char* end = nullptr;
    long t = std::strtol(env, &end, 10);
    if (*end != '\0' || t < 1) throw ParseError(std::string("PAST_TIMEOUT: expected a positive integer, got '") + env + "'");
    cfg.solver.timeout_seconds = static_cast<unsigned>(t);
  }
  if (!o.solver_cmd.empty()) cfg.solver.command = o.solver_cmd;
  if (o.timeout != 0) {
    if (o.timeout < 1) throw ParseError("--timeout must be at least 1");
    cfg.solver.timeout_seconds = static_cast<unsigned>(o.timeout);
  }
  if (cfg.solver.command.find_first_not_of(" \t") == std::string::npos) throw ParseError("solver command is empty");
  cfg.single_query = o.single_query;
  cfg.timings = o.timings;
  return cfg;
}

int cmd_decide(const Options& o, bool witness_mode, std::ostream& out, std::ostream& err) {
  DecideConfig cfg = decide_config(o);
  Loop loop = load(o);
  Analysis an = analyze(loop);
  Verdict v = decide(an, loop.semiring, cfg);
  for (const auto& n : loop.notes) v.notes.insert(v.notes.begin(), n);

  std::optional<LiftCertificate> lift;
  std::string lift_error;
  if (witness_mode && o.lift && v.status == Status::nonterminating && v.witness) {
    ExactVector x(v.witness->begin(), v.witness->end());
    try {
      LiftConstants c = compute_lift_constants(x, *v.certificate, an);
      lift = lift_witness(an, x, c, v.certificate->margins);
    } catch (const Error& e) {
      lift_error = e.kind() + ": " + e.what();
      err << "lift failed: " << lift_error << "\n";
    }
  }

  if (o.pretty) {
    out << verdict_text(v, an, lift ? &*lift : nullptr, o.timings);
    if (!lift_error.empty()) out << "lift: " << lift_error << "\n";
  } else {
    Json j = verdict_json(v, an, o.timings);
    if (lift) j["lift"] = lift_json(*lift);
    if (!lift_error.empty()) j["lift"] = Json{{"error", lift_error}};
    out << j.dump(2) << "\n";
  }
  return exit_code(v.status);
}

int cmd_explain(const Options& o, std::ostream& out) {
  Loop loop = load(o);
  Analysis an = analyze(loop);
  if (o.pretty) {
    out << explain_text(an);
  } else {
    out << explain_json(an).dump(2) << "\n";
  }
  return 0;
}

int cmd_simulate(const Options& o, std::ostream& out) {
  Loop loop = load(o);
  Json doc;
  try {
    doc = Json::parse(o.input);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("--input: ") + e.what());
  }
  if (!doc.is_array() || doc.size() != loop.n)
    throw ParseError("--input: expected a JSON array of " + std::to_string(loop.n) + " rationals");
  std::vector<Rational> x;
  for (std::size_t i = 0; i < doc.size(); ++i) x.push_back(rational_from_json(doc[i], "--input[" + std::to_string(i) + "]"));
  if (o.runs == 0) throw ParseError("--runs must be positive");
  RunStats s = simulate(loop, x, o.runs, o.cap, o.seed);
  if (o.pretty) {
    out << run_stats_text(s);
  } else {
    out << to_json(s).dump(2) << "\n";
  }
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Positive almost-sure termination analysis for probabilistic linear loops"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("file", o.file, "loop description (JSON)")->required();
    sub->add_option("--semiring", o.semiring, "N, Z, Q+, Q, A+ or A (default: the file's, else A)");
    sub->add_flag("--pretty", o.pretty, "text output instead of JSON");
  };
  auto add_solver = [&](CLI::App* sub) {
    sub->add_option("--solver-cmd", o.solver_cmd, "SMT-LIB2 solver reading the script on stdin");
    sub->add_option("--timeout", o.timeout, "per-query timeout in seconds");
    sub->add_flag("--single-query", o.single_query, "solve the union of all disjuncts at once");
    sub->add_flag("--timings", o.timings, "report solver times");
  };

  CLI::App* decide_cmd = app.add_subcommand("decide", "decide termination over a semiring");
  add_common(decide_cmd);
  add_solver(decide_cmd);
  CLI::App* witness_cmd = app.add_subcommand("witness", "decide and report a witness of non-termination");
  add_common(witness_cmd);
  add_solver(witness_cmd);
  witness_cmd->add_flag("--lift", o.lift, "lift the witness to a point that survives the guard");
  CLI::App* explain_cmd = app.add_subcommand("explain", "print the spectral report");
  add_common(explain_cmd);
  CLI::App* simulate_cmd = app.add_subcommand("simulate", "sample runs of the loop");
  add_common(simulate_cmd);
  simulate_cmd->add_option("--input", o.input, "initial vector as a JSON array")->required();
  simulate_cmd->add_option("--runs", o.runs, "number of runs");
  simulate_cmd->add_option("--cap", o.cap, "step cap per run");
  simulate_cmd->add_option("--seed", o.seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : kExitInputError;
  }

  try {
    if (*decide_cmd) return cmd_decide(o, false, out, err);
    if (*witness_cmd) return cmd_decide(o, true, out, err);
    if (*explain_cmd) return cmd_explain(o, out);
    return cmd_simulate(o, out);
  } catch (const Error& e) {
    err << "error: " << e.kind() << ": " << e.what() << "\n";
    return is_input_error(e) ? kExitInputError : kExitInternalError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInternalError;
  }
}

}  // namespace past
