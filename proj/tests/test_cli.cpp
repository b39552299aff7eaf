// Copyright (c) past contributors.
// SPDX-License-Identifier: Apache-2.0
#include <sstream>

#include "doctest.h"
#include "past/cli/commands.hpp"
#include "support.hpp"

using namespace past;
using past::test::fixture;
using past::test::solver_available;

namespace {
struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "past");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}
}  // namespace

TEST_CASE("exit codes without a solver") {
  CHECK(exit_code(Status::terminating) == 0);
  CHECK(exit_code(Status::nonterminating) == 10);
  CHECK(exit_code(Status::unknown) == 20);
  for (const char* f : {"zero.json", "neg2.json", "rotation.json"}) {
    Run r = cli({"decide", fixture(f)});
    CHECK(r.code == 0);
    CHECK(Json::parse(r.out)["status"] == "TERMINATING");
  }
  Run bad = cli({"decide", fixture("malformed.json")});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("A[1]") != std::string::npos);
  CHECK(cli({"decide", fixture("nope.json")}).code == 2);
  CHECK(cli({"decide"}).code == 2);
  CHECK(cli({"frobnicate"}).code == 2);
  CHECK(cli({"decide", fixture("zero.json"), "--semiring", "W"}).code == 2);
  CHECK(cli({"decide", fixture("zero.json"), "--timeout", "-1"}).code == 2);
  CHECK(cli({"--help"}).code == 0);
  Run missing = cli({"decide", fixture("example3d.json"), "--solver-cmd", "no-such-solver-binary-xyz"});
  CHECK(missing.code == 20);
}

TEST_CASE("environment overrides and flag precedence") {
  setenv("PAST_SOLVER_CMD", "no-such-solver-binary-xyz", 1);
  CHECK(cli({"decide", fixture("example3d.json")}).code == 20);
  if (solver_available()) CHECK(cli({"decide", fixture("example3d.json"), "--solver-cmd", "z3 -in"}).code == 10);
  unsetenv("PAST_SOLVER_CMD");
  setenv("PAST_TIMEOUT", "zero", 1);
  CHECK(cli({"decide", fixture("zero.json")}).code == 2);
  CHECK(cli({"decide", fixture("zero.json"), "--timeout", "5"}).code == 2);  // env is still read and rejected
  unsetenv("PAST_TIMEOUT");
}

TEST_CASE("explain and simulate") {
  Run e = cli({"explain", fixture("example3d.json")});
  CHECK(e.code == 0);
  Json j = Json::parse(e.out);
  CHECK(j["groups"][0]["outer"] == "1/2");
  CHECK(j["groups"][1]["outer"] == "2");
  CHECK(j["groups"][0]["inner"]["enclosure"][0].get<std::string>().rfind("14.1421356237", 0) == 0);
  Run pretty = cli({"explain", fixture("example3d.json"), "--pretty"});
  CHECK(pretty.out.find("lex order") != std::string::npos);

  Run s = cli({"simulate", fixture("neg2.json"), "--input", "[1]", "--runs", "50"});
  CHECK(s.code == 0);
  Json st = Json::parse(s.out);
  CHECK(st["mean_runtime_of_terminated"] == "1");
  CHECK(st["survival_fraction"] == "0");
  Run a = cli({"simulate", fixture("example3d.json"), "--input", "[1,1,0]", "--seed", "7", "--runs", "100"});
  Run b = cli({"simulate", fixture("example3d.json"), "--input", "[1,1,0]", "--seed", "7", "--runs", "100"});
  CHECK(a.out == b.out);
  CHECK(cli({"simulate", fixture("neg2.json"), "--input", "[1,2]"}).code == 2);
  CHECK(cli({"simulate", fixture("neg2.json"), "--input", "[1"}).code == 2);
  CHECK(cli({"simulate", fixture("neg2.json")}).code == 2);
}

TEST_CASE("witness reports") {
  if (!solver_available()) return;
  Run w = cli({"witness", fixture("example3d.json"), "--lift"});
  CHECK(w.code == 10);
  Json j = Json::parse(w.out);
  REQUIRE(j.contains("lift"));
  for (const auto& g : j["lift"]["guard"]) CHECK(real_from_json(g).sign() > 0);

  // The witness read back from the report reproduces the certificate.
  Analysis an = analyze(load_loop_file(fixture("example3d.json")));
  ExactVector x;
  for (const auto& v : j["witness"]) x.emplace_back(real_from_json(v));
  auto cert = membership_check(x, an);
  REQUIRE(cert);
  for (std::size_t c = 0; c < cert->margins.size(); ++c)
    CHECK(cert->margins[c] == real_from_json(j["certificate"]["margins"][c]));

  Run z = cli({"witness", fixture("example3d.json"), "--semiring", "Z"});
  Json jz = Json::parse(z.out);
  CHECK(jz["semiring"] == "Z");
  for (const auto& v : jz["witness"]) CHECK(rational_from_json(v).get_den() == 1);

  Run rot = cli({"witness", fixture("rotation.json"), "--lift"});
  CHECK(rot.code == 0);
  CHECK(Json::parse(rot.out)["witness"].is_null());
  CHECK(!Json::parse(rot.out).contains("lift"));

  Run pretty = cli({"witness", fixture("scale1d.json"), "--lift", "--pretty"});
  CHECK(pretty.out.find("lift: eps = 1/2, r = 0, l = 4, j = 3, k = 1") != std::string::npos);
}
