// Copyright (c) past contributors.
// SPDX-License-Identifier: Apache-2.0
#include "past/loopmodel/loop.hpp"

#include <fstream>
#include <sstream>

#include "past/errors.hpp"
#include "past/linalg/eigen.hpp"

namespace past {

std::string semiring_name(Semiring s) {
  switch (s) {
    case Semiring::N: return "N";
    case Semiring::Z: return "Z";
    case Semiring::Qnonneg: return "Q+";
    case Semiring::Q: return "Q";
    case Semiring::Anonneg: return "A+";
    case Semiring::A: return "A";
  }
  return "A";
}

Semiring parse_semiring(const std::string& s) {
  if (s == "N") return Semiring::N;
  if (s == "Z") return Semiring::Z;
  if (s == "Q+" || s == "Qnonneg") return Semiring::Qnonneg;
  if (s == "Q") return Semiring::Q;
  if (s == "A+" || s == "Anonneg") return Semiring::Anonneg;
  if (s == "A" || s == "R") return Semiring::A;
  throw ParseError("unknown semiring \"" + s + "\" (expected one of N, Z, Q+, Q, A+, A)");
}

bool is_nonneg(Semiring s) { return s == Semiring::N || s == Semiring::Qnonneg || s == Semiring::Anonneg; }
bool needs_rational(Semiring s) { return s != Semiring::A && s != Semiring::Anonneg; }
bool needs_integral(Semiring s) { return s == Semiring::N || s == Semiring::Z; }

bool in_semiring(const RealAlgebraic& v, Semiring s) {
  if (is_nonneg(s) && v.sign() < 0) return false;
  if (needs_rational(s) && !v.is_rational()) return false;
  if (needs_integral(s) && v.rational().get_den() != 1) return false;
  return true;
}

void check_semiring(const Loop& loop, Semiring s) {
  for (const auto* mat : {&loop.A, &loop.B}) {
    const char* name = mat == &loop.A ? "A" : "B";
    for (std::size_t i = 0; i < mat->size(); ++i)
      for (std::size_t j = 0; j < (*mat)[i].size(); ++j)
        if (!in_semiring(RealAlgebraic((*mat)[i][j]), s))
          throw SemiringViolation(std::string(name) + "[" + std::to_string(i) + "][" + std::to_string(j) +
                                  "] = " + to_string((*mat)[i][j]) + " is not in " + semiring_name(s));
  }
}

namespace {

std::string field(const std::string& name, std::size_t i) { return name + "[" + std::to_string(i) + "]"; }

std::size_t natural_field(const Json& doc, const char* key) {
  if (!doc.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  const Json& v = doc.at(key);
  if (!v.is_number_integer() || v.get<long long>() < 1)
    throw ParseError(std::string("field \"") + key + "\": expected a positive integer");
  return v.get<std::size_t>();
}

template <class Cell>
std::vector<std::vector<Cell>> matrix_field(const Json& doc, const std::string& key, std::size_t rows,
                                            std::size_t cols, Cell (*cell)(const Json&, const std::string&)) {
  if (!doc.contains(key)) throw ParseError("missing field \"" + key + "\"");
  const Json& v = doc.at(key);
  if (!v.is_array()) throw ParseError("field \"" + key + "\": expected an array of rows");
  if (v.size() != rows)
    throw ParseError("field \"" + key + "\": expected " + std::to_string(rows) + " rows, found " +
                     std::to_string(v.size()));
  std::vector<std::vector<Cell>> out(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    const Json& row = v[i];
    std::string where = field(key, i);
    if (!row.is_array()) throw ParseError(where + ": expected an array");
    if (row.size() != cols)
      throw ParseError(where + ": expected " + std::to_string(cols) + " entries, found " + std::to_string(row.size()));
    for (std::size_t j = 0; j < cols; ++j) out[i].push_back(cell(row[j], field(where, j)));
  }
  return out;
}

Rational rational_cell(const Json& j, const std::string& where) {
  if (j.is_object())
    throw ParseError(where + ": update matrices must have rational entries (algebraic entries are out of scope)");
  return rational_from_json(j, where);
}

RealAlgebraic real_cell(const Json& j, const std::string& where) { return real_from_json(j, where); }

}  // namespace

Loop parse_loop_json(const Json& doc, std::optional<Semiring> semiring_override) {
  if (!doc.is_object()) throw ParseError("loop document must be a JSON object");
  static const char* const kKeys[] = {"n", "m", "p", "semiring", "C", "A", "B"};
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    bool known = false;
    for (const char* k : kKeys) known = known || it.key() == k;
    if (!known) throw ParseError("unknown field \"" + it.key() + "\"");
  }
  Loop loop;
  loop.n = natural_field(doc, "n");
  loop.m = natural_field(doc, "m");

  if (!doc.contains("p")) throw ParseError("missing field \"p\"");
  loop.p = real_from_json(doc.at("p"), "p");
  if (loop.p.sign() < 0 || compare(loop.p, RealAlgebraic(1)) > 0)
    throw ProbabilityOutOfRange("p = " + loop.p.to_string() + " is outside [0, 1]");

  Semiring declared = Semiring::A;
  if (doc.contains("semiring")) {
    if (!doc.at("semiring").is_string()) throw ParseError("field \"semiring\": expected a string");
    try {
      declared = parse_semiring(doc.at("semiring").get<std::string>());
    } catch (const ParseError& e) {
      throw ParseError(std::string("field \"semiring\": ") + e.what());
    }
  }
  loop.semiring = semiring_override.value_or(declared);

  auto c = matrix_field<RealAlgebraic>(doc, "C", loop.m, loop.n, real_cell);
  loop.C = ExactMatrix(loop.m, loop.n);
  for (std::size_t i = 0; i < loop.m; ++i)
    for (std::size_t j = 0; j < loop.n; ++j) loop.C(i, j) = c[i][j];
  loop.A = matrix_field<Rational>(doc, "A", loop.n, loop.n, rational_cell);
  loop.B = matrix_field<Rational>(doc, "B", loop.n, loop.n, rational_cell);

  // With p in {0, 1} only one update can ever fire.
  if (loop.p.is_zero()) {
    loop.A = loop.B;
    loop.p = RealAlgebraic(Rational(1, 2));
    loop.notes.push_back("p = 0: both branches use B, p normalized to 1/2");
  } else if (loop.p == RealAlgebraic(1)) {
    loop.B = loop.A;
    loop.p = RealAlgebraic(Rational(1, 2));
    loop.notes.push_back("p = 1: both branches use A, p normalized to 1/2");
  }

  check_semiring(loop, loop.semiring);
  if (auto v = check_commuting_diagonalizable(loop.A_exact(), loop.B_exact())) {
    if (v->kind == Violation::Kind::NotCommuting) throw NotCommuting(v->message);
    throw NotDiagonalizable(v->message);
  }
  return loop;
}

Loop parse_loop(const std::string& text, std::optional<Semiring> semiring_override) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError("malformed JSON at line " + std::to_string(line) + ", column " + std::to_string(col));
  }
  return parse_loop_json(doc, semiring_override);
}

Loop load_loop_file(const std::string& path, std::optional<Semiring> semiring_override) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read loop file \"" + path + "\"");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_loop(ss.str(), semiring_override);
}

ExactVector to_exact(const std::vector<Rational>& x) {
  ExactVector v;
  v.reserve(x.size());
  for (const auto& q : x) v.emplace_back(q);
  return v;
}

ExactVector guard_values(const Loop& loop, const ExactVector& x, unsigned long j, unsigned long k) {
  if (x.size() != loop.n)
    throw DimensionMismatch("input has " + std::to_string(x.size()) + " entries, loop has n = " +
                            std::to_string(loop.n));
  RatMatrix m = rat_mul(rat_pow(loop.A, j), rat_pow(loop.B, k));
  return past::apply(loop.C, past::apply(ExactMatrix::from_rational(m), x));
}

}  // namespace past
