// Copyright (c) past contributors.
// SPDX-License-Identifier: Apache-2.0
#include "past/witness/smtlib.hpp"

#include <sstream>

namespace past {

std::string smt_rational(const Rational& q) {
  auto integer = [](const Integer& z) { return z < 0 ? "(- " + Integer(-z).get_str() + ")" : z.get_str(); };
  if (q.get_den() == 1) return integer(q.get_num());
  return "(/ " + integer(q.get_num()) + " " + q.get_den().get_str() + ")";
}

namespace {

std::string var(std::size_t k) { return "x" + std::to_string(k + 1); }

std::string sum(const std::vector<std::string>& terms) {
  if (terms.empty()) return "0";
  if (terms.size() == 1) return terms[0];
  std::string s = "(+";
  for (const auto& t : terms) s += " " + t;
  return s + ")";
}

class Emitter {
 public:
  std::string form(const RealForm& f) {
    std::vector<std::string> terms;
    for (std::size_t k = 0; k < f.size(); ++k) {
      if (f[k].is_zero()) continue;
      if (f[k].is_rational() && f[k].rational() == 1) {
        terms.push_back(var(k));
      } else {
        terms.push_back("(* " + coeff(f[k]) + " " + var(k) + ")");
      }
    }
    return sum(terms);
  }

  // Fresh t with t >= 0 and t^2 = Re(g)^2 + Im(g)^2.
  std::string modulus(const LinearForm& g) {
    std::string t = "t" + std::to_string(++t_count_);
    std::string re = form(real_part(g)), im = form(imag_part(g));
    decls_ << "(declare-fun " << t << " () Real)\n";
    decls_ << "(assert (>= " << t << " 0))\n";
    std::string rhs = "(* " + re + " " + re + ")";
    if (!is_zero_form(imag_part(g))) rhs = "(+ " + rhs + " (* " + im + " " + im + "))";
    decls_ << "(assert (= (* " << t << " " << t << ") " << rhs << "))\n";
    return t;
  }

  std::string declarations() const { return decls_.str(); }

 private:
  std::string coeff(const RealAlgebraic& v) {
    if (v.is_rational()) return smt_rational(v.rational());
    for (std::size_t i = 0; i < aux_.size(); ++i)
      if (aux_[i] == v) return "s" + std::to_string(i + 1);
    aux_.push_back(v);
    std::string s = "s" + std::to_string(aux_.size());
    IntPolynomial p = v.poly();
    std::vector<std::string> terms;
    for (int e = 0; e <= p.degree(); ++e) {
      const Integer& c = p.coeffs()[e];
      if (c == 0) continue;
      std::string power;
      for (int r = 0; r < e; ++r) power += " " + s;
      std::string cs = smt_rational(Rational(c));
      if (e == 0) {
        terms.push_back(cs);
      } else {
        terms.push_back("(*" + (c == 1 ? std::string() : " " + cs) + power + ")");
      }
    }
    DyadicInterval iv = canonical_interval(v);
    decls_ << "(declare-fun " << s << " () Real)\n";
    decls_ << "(assert (= " << sum(terms) << " 0))\n";
    decls_ << "(assert (and (<= " << smt_rational(iv.lo) << " " << s << ") (<= " << s << " "
           << smt_rational(iv.hi) << ")))\n";
    return s;
  }

  std::vector<RealAlgebraic> aux_;
  std::size_t t_count_ = 0;
  std::ostringstream decls_;
};

std::vector<std::string> formula_atoms(Emitter& em, const WitnessFormula& f) {
  std::vector<std::string> atoms;
  for (const auto& k : f.constraints) {
    std::vector<std::string> ts;
    for (const auto& g : k.positivity.moduli) ts.push_back(em.modulus(g));
    atoms.push_back("(> " + em.form(k.positivity.lhs) + " " + sum(ts) + ")");
    for (const auto& e : k.equalities) atoms.push_back("(= " + em.form(e) + " 0)");
  }
  return atoms;
}

std::string header(std::size_t n) {
  std::ostringstream os;
  os << "(set-option :produce-models true)\n(set-logic QF_NRA)\n";
  for (std::size_t k = 0; k < n; ++k) os << "(declare-fun " << var(k) << " () Real)\n";
  return os.str();
}

std::string nonneg(std::size_t n) {
  std::string s;
  for (std::size_t k = 0; k < n; ++k) s += "(assert (>= " + var(k) + " 0))\n";
  return s;
}

std::string junction(const char* op, const std::vector<std::string>& parts) {
  if (parts.size() == 1) return parts[0];
  std::string s = std::string("(") + op;
  for (const auto& p : parts) s += "\n  " + p;
  return s + ")";
}

const char* kFooter = "(check-sat)\n(get-model)\n";

}  // namespace

std::string emit_smtlib(const WitnessFormula& f, const std::vector<Pin>& pins) {
  Emitter em;
  std::ostringstream body;
  for (const auto& a : formula_atoms(em, f)) body << "(assert " << a << ")\n";
  if (f.nonneg) body << nonneg(f.n);
  for (const auto& pin : pins) body << "(assert (= " << var(pin.index) << " " << smt_rational(pin.value) << "))\n";
  return header(f.n) + em.declarations() + body.str() + kFooter;
}

std::string emit_smtlib_union(const std::vector<WitnessFormula>& fs, std::size_t n) {
  Emitter em;
  std::vector<std::string> disjuncts;
  for (const auto& f : fs) disjuncts.push_back(junction("and", formula_atoms(em, f)));
  std::ostringstream body;
  body << "(assert " << (disjuncts.empty() ? std::string("false") : junction("or", disjuncts)) << ")\n";
  if (!fs.empty() && fs[0].nonneg) body << nonneg(n);
  return header(n) + em.declarations() + body.str() + kFooter;
}

}  // namespace past
