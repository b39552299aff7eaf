// Copyright (c) past contributors.
// SPDX-License-Identifier: Apache-2.0
#include "past/witness/solver.hpp"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <chrono>
#include <cstring>

#include "past/errors.hpp"

namespace past {

const char* sat_status_name(SatStatus s) {
  switch (s) {
    case SatStatus::sat: return "sat";
    case SatStatus::unsat: return "unsat";
    case SatStatus::unknown: return "unknown";
  }
  return "unknown";
}

std::vector<SExpr> parse_sexprs(const std::string& text) {
  std::vector<std::vector<SExpr>> stack(1);
  std::size_t i = 0;
  while (i < text.size()) {
    char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
    } else if (ch == ';') {
      while (i < text.size() && text[i] != '\n') ++i;
    } else if (ch == '(') {
      stack.emplace_back();
      ++i;
    } else if (ch == ')') {
      if (stack.size() < 2) throw ModelParseError("unbalanced ')' in solver output");
      SExpr e;
      e.list = std::move(stack.back());
      stack.pop_back();
      stack.back().push_back(std::move(e));
      ++i;
    } else if (ch == '"' || ch == '|') {
      std::size_t j = text.find(ch, i + 1);
      if (j == std::string::npos) throw ModelParseError("unterminated literal in solver output");
      stack.back().push_back(SExpr{text.substr(i, j - i + 1), {}});
      i = j + 1;
    } else {
      std::size_t j = i;
      while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j])) && text[j] != '(' &&
             text[j] != ')' && text[j] != ';')
        ++j;
      stack.back().push_back(SExpr{text.substr(i, j - i), {}});
      i = j;
    }
  }
  if (stack.size() != 1) throw ModelParseError("unbalanced '(' in solver output");
  return std::move(stack[0]);
}

namespace {

const std::string& head(const SExpr& e) {
  static const std::string empty;
  return !e.is_atom() && !e.list.empty() && e.list[0].is_atom() ? e.list[0].atom : empty;
}

RatPolynomial poly_value(const SExpr& e) {
  if (e.is_atom()) {
    if (std::isdigit(static_cast<unsigned char>(e.atom[0]))) return RatPolynomial::constant(parse_rational(e.atom));
    return RatPolynomial::monomial(1, 1);  // the root-obj variable
  }
  const std::string& op = head(e);
  if (op.empty() || e.list.size() < 2) throw ModelParseError("malformed polynomial in root-obj");
  if (op == "^") {
    RatPolynomial base = poly_value(e.list[1]);
    long k = std::stol(e.list.at(2).atom);
    RatPolynomial r = RatPolynomial::constant(1);
    for (long t = 0; t < k; ++t) r = r * base;
    return r;
  }
  RatPolynomial acc = poly_value(e.list[1]);
  if (op == "-" && e.list.size() == 2) return -acc;
  for (std::size_t t = 2; t < e.list.size(); ++t) {
    RatPolynomial v = poly_value(e.list[t]);
    if (op == "+") {
      acc = acc + v;
    } else if (op == "-") {
      acc = acc - v;
    } else if (op == "*") {
      acc = acc * v;
    } else if (op == "/" && v.degree() == 0) {
      acc = (1 / Rational(v.coeff(0))) * acc;
    } else {
      throw ModelParseError("unsupported operator '" + op + "' in root-obj");
    }
  }
  return acc;
}

}  // namespace

RealAlgebraic model_value(const SExpr& e) {
  if (e.is_atom()) {
    try {
      return RealAlgebraic(parse_rational(e.atom));
    } catch (const ParseError&) {
      throw ModelParseError("unexpected model value '" + e.atom + "'");
    }
  }
  const std::string& op = head(e);
  if (op == "root-obj") {
    if (e.list.size() != 3 || !e.list[2].is_atom()) throw ModelParseError("malformed root-obj");
    IntPolynomial p = IntPolynomial::from_rational(poly_value(e.list[1]));
    auto roots = isolate_real_roots(p);
    long k = std::stol(e.list[2].atom);
    if (k < 1 || static_cast<std::size_t>(k) > roots.size()) throw ModelParseError("root-obj index out of range");
    return roots[k - 1];
  }
  if (e.list.size() < 2) throw ModelParseError("malformed model value");
  RealAlgebraic acc = model_value(e.list[1]);
  if (op == "-" && e.list.size() == 2) return -acc;
  for (std::size_t t = 2; t < e.list.size(); ++t) {
    RealAlgebraic v = model_value(e.list[t]);
    if (op == "+") {
      acc += v;
    } else if (op == "-") {
      acc -= v;
    } else if (op == "*") {
      acc *= v;
    } else if (op == "/") {
      acc = acc / v;
    } else {
      throw ModelParseError("unsupported model term '" + op + "'");
    }
  }
  return acc;
}

namespace {

void collect_definitions(const SExpr& e, std::map<std::string, RealAlgebraic>& model) {
  if (e.is_atom()) return;
  if (head(e) == "define-fun") {
    // (define-fun name () Real value)
    if (e.list.size() == 5 && e.list[1].is_atom() && e.list[2].list.empty() && !e.list[2].is_atom())
      model[e.list[1].atom] = model_value(e.list[4]);
    return;
  }
  for (const auto& c : e.list) collect_definitions(c, model);
}

}  // namespace

SolverResult parse_solver_output(const std::string& output) {
  SolverResult r;
  auto items = parse_sexprs(output);
  std::size_t i = 0;
  for (; i < items.size(); ++i) {
    if (!items[i].is_atom()) {
      if (head(items[i]) == "error") r.diagnostic += items[i].list.size() > 1 ? items[i].list[1].atom : "error";
      continue;
    }
    const std::string& a = items[i].atom;
    if (a == "sat" || a == "unsat" || a == "unknown") break;
  }
  if (i == items.size()) {
    r.status = SatStatus::unknown;
    if (r.diagnostic.empty()) r.diagnostic = "no check-sat answer in solver output";
    return r;
  }
  const std::string& a = items[i].atom;
  r.status = a == "sat" ? SatStatus::sat : a == "unsat" ? SatStatus::unsat : SatStatus::unknown;
  if (r.status == SatStatus::sat)
    for (std::size_t j = i + 1; j < items.size(); ++j) collect_definitions(items[j], r.model);
  return r;
}

SolverResult run_solver(const std::string& script, const SolverConfig& config) {
  static const bool sigpipe_ignored = [] {
    signal(SIGPIPE, SIG_IGN);
    return true;
  }();
  (void)sigpipe_ignored;
  if (config.command.empty()) throw SolverNotFound("empty solver command");

  int in[2], out[2], err[2];
  if (pipe(in) || pipe(out) || pipe(err)) throw SolverNotFound(std::string("pipe: ") + std::strerror(errno));
  auto start = std::chrono::steady_clock::now();
  pid_t pid = fork();
  if (pid < 0) throw SolverNotFound(std::string("fork: ") + std::strerror(errno));
  if (pid == 0) {
    setpgid(0, 0);
    dup2(in[0], 0);
    dup2(out[1], 1);
    dup2(err[1], 2);
    for (int fd : {in[0], in[1], out[0], out[1], err[0], err[1]}) close(fd);
    execl("/bin/sh", "sh", "-c", config.command.c_str(), static_cast<char*>(nullptr));
    _exit(127);
  }
  close(in[0]);
  close(out[1]);
  close(err[1]);
  fcntl(in[1], F_SETFL, O_NONBLOCK);

  std::string stdout_text, stderr_text;
  std::size_t written = 0;
  int to_child = in[1];
  bool out_open = true, err_open = true, timed_out = false;
  auto deadline = start + std::chrono::seconds(config.timeout_seconds);
  if (script.empty()) {
    close(to_child);
    to_child = -1;
  }
  while (out_open || err_open) {
    auto now = std::chrono::steady_clock::now();
    if (now >= deadline) {
      timed_out = true;
      break;
    }
    int wait_ms = static_cast<int>(std::chrono::duration_cast<std::chrono::milliseconds>(deadline - now).count()) + 1;
    pollfd fds[3];
    nfds_t nf = 0;
    int out_slot = -1, err_slot = -1, in_slot = -1;
    if (out_open) fds[out_slot = nf++] = {out[0], POLLIN, 0};
    if (err_open) fds[err_slot = nf++] = {err[0], POLLIN, 0};
    if (to_child >= 0) fds[in_slot = nf++] = {to_child, POLLOUT, 0};
    int rc = poll(fds, nf, wait_ms);
    if (rc < 0 && errno == EINTR) continue;
    if (rc < 0) break;
    char buf[65536];
    if (out_slot >= 0 && fds[out_slot].revents) {
      ssize_t k = read(out[0], buf, sizeof buf);
      if (k > 0) {
        stdout_text.append(buf, k);
      } else {
        out_open = false;
      }
    }
    if (err_slot >= 0 && fds[err_slot].revents) {
      ssize_t k = read(err[0], buf, sizeof buf);
      if (k > 0) {
        stderr_text.append(buf, k);
      } else {
        err_open = false;
      }
    }
    if (in_slot >= 0 && fds[in_slot].revents) {
      ssize_t k = write(to_child, script.data() + written, script.size() - written);
      if (k > 0) written += static_cast<std::size_t>(k);
      if (k < 0 && errno != EAGAIN) written = script.size();
      if (written == script.size()) {
        close(to_child);
        to_child = -1;
      }
    }
  }
  if (to_child >= 0) close(to_child);
  close(out[0]);
  close(err[0]);
  if (timed_out) kill(-pid, SIGKILL);
  int status = 0;
  waitpid(pid, &status, 0);
  double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  if (timed_out) {
    SolverResult r;
    r.status = SatStatus::unknown;
    r.diagnostic = "solver timeout after " + std::to_string(config.timeout_seconds) + " s";
    r.seconds = seconds;
    return r;
  }
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  if ((code == 127 || code == 126) && stdout_text.empty())
    throw SolverNotFound("solver command failed to start: " + config.command +
                         (stderr_text.empty() ? "" : " (" + stderr_text.substr(0, 200) + ")"));
  SolverResult r = parse_solver_output(stdout_text);
  r.seconds = seconds;
  if (r.status == SatStatus::unknown && !stderr_text.empty()) r.diagnostic += " " + stderr_text.substr(0, 200);
  return r;
}

}  // namespace past
