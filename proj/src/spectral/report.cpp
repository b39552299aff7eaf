// Copyright (c) past contributors.
// SPDX-License-Identifier: Apache-2.0
#include "past/spectral/report.hpp"

#include <sstream>

namespace past {

namespace {

Rational round_to(const Rational& q, long prec, bool up) {
  Rational scaled = q * pow2(prec);
  return Rational(up ? ceil_of(scaled) : floor_of(scaled)) * pow2(-prec);
}

// Enclosure of exp(x), rounded outward to 2^-prec.
DyadicInterval exp_bounds(const Rational& x, long prec) {
  Integer mag = ceil_of(abs(x));
  long s = static_cast<long>(bit_length(mag)) + 1;
  Rational y = x * pow2(-s);  // |y| <= 1/2
  Rational term = 1, sum = 1;
  const int terms = static_cast<int>(prec / 2 + 8);
  for (int k = 1; k <= terms; ++k) {
    term = term * y / k;
    sum += term;
  }
  // Tail after `terms` terms: at most 2 |next term|.
  Rational tail = 2 * abs(term * y / (terms + 1));
  DyadicInterval e{round_to(sum - tail, prec + 2 * s, false), round_to(sum + tail, prec + 2 * s, true)};
  for (long i = 0; i < s; ++i)
    e = DyadicInterval{round_to(e.lo * e.lo, prec + 2 * s, false), round_to(e.hi * e.hi, prec + 2 * s, true)};
  return e;
}

std::string index_list(const std::vector<std::size_t>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i] + 1);
  return s + "}";
}

Json index_json(const std::vector<std::size_t>& v) {
  Json a = Json::array();
  for (auto i : v) a.push_back(i + 1);
  return a;
}

std::string form_text(const LinearForm& f) {
  std::string s;
  for (std::size_t k = 0; k < f.size(); ++k) {
    if (f[k].is_zero()) continue;
    s += (s.empty() ? "" : " + ") + std::string("(") + f[k].to_string() + ")*x" + std::to_string(k + 1);
  }
  return s.empty() ? "0" : s;
}

}  // namespace

std::string decimal(const Rational& q, int digits, bool round_up) {
  Integer scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  Rational scaled = q * scale;
  Integer v = round_up ? ceil_of(scaled) : floor_of(scaled);
  bool neg = v < 0;
  Integer a = abs(v);
  std::string s = a.get_str();
  if (digits > 0) {
    if (s.size() <= static_cast<std::size_t>(digits)) s = std::string(digits + 1 - s.size(), '0') + s;
    s.insert(s.size() - digits, ".");
  }
  return (neg ? "-" : "") + s;
}

DyadicInterval inner_enclosure(const GroupKey& k, const RealAlgebraic& p, int digits) {
  if (auto exact = exact_inner(k, p)) return exact->enclosure(4L * digits + 8);
  long bits = 4L * digits + 16;
  while (true) {
    DyadicInterval l = log_inner_enclosure(k, p, bits);
    DyadicInterval e{exp_bounds(l.lo, bits + 8).lo, exp_bounds(l.hi, bits + 8).hi};
    Integer scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    if (e.width() * scale < 1) return e;
    bits *= 2;
  }
}

Json explain_json(const Analysis& an) {
  const int kDigits = 10;
  Json out = Json::object();
  out["n"] = an.loop.n;
  out["m"] = an.loop.m;
  out["p"] = to_json(an.loop.p);
  out["semiring"] = semiring_name(an.loop.semiring);
  Json eig = Json::array();
  for (std::size_t i = 0; i < an.sd.a.size(); ++i) {
    Json e = Json::object();
    e["index"] = i + 1;
    e["a"] = to_json(an.sd.a[i]);
    e["b"] = to_json(an.sd.b[i]);
    e["conjugate"] = an.sd.sigma[i] + 1;
    eig.push_back(e);
  }
  out["eigenpairs"] = eig;

  Json groups = Json::array();
  for (std::size_t gi = 0; gi < an.table.groups.size(); ++gi) {
    const Group& g = an.table.groups[gi];
    Json j = Json::object();
    j["group"] = gi + 1;
    j["indices"] = index_json(g.indices);
    j["mod_a"] = to_json(g.key.mod_a);
    j["mod_b"] = to_json(g.key.mod_b);
    Json inner = Json::object();
    auto exact = exact_inner(g.key, an.loop.p);
    inner["exact"] = exact ? to_json(*exact) : Json(nullptr);
    DyadicInterval enc = inner_enclosure(g.key, an.loop.p, kDigits);
    inner["enclosure"] = Json::array({decimal(enc.lo, kDigits, false), decimal(enc.hi, kDigits, true)});
    j["inner"] = inner;
    j["outer"] = to_json(g.key.outer());
    j["R"] = index_json(g.real_indices);
    j["C"] = index_json(g.complex_indices);
    groups.push_back(j);
  }
  out["groups"] = groups;
  out["excluded"] = index_json(an.table.excluded);

  Json gamma = Json::array();
  for (std::size_t c = 0; c < an.gamma.m; ++c) {
    Json row = Json::array();
    for (std::size_t i = 0; i < an.gamma.n; ++i) {
      Json coeffs = Json::array();
      for (const auto& z : an.gamma.g[c][i]) coeffs.push_back(to_json(z));
      row.push_back(coeffs);
    }
    gamma.push_back(row);
  }
  out["gamma"] = gamma;

  Json lex = Json::object();
  for (Direction d : {Direction::p, Direction::n}) {
    Json order = Json::array();
    for (auto gi : an.order(d)) order.push_back(gi + 1);
    lex[direction_name(d)] = order;
  }
  out["lex_order_ascending"] = lex;
  if (!an.loop.notes.empty()) out["notes"] = an.loop.notes;
  return out;
}

std::string explain_text(const Analysis& an) {
  const int kDigits = 10;
  std::ostringstream os;
  os << "loop: n=" << an.loop.n << " m=" << an.loop.m << " p=" << an.loop.p.to_string()
     << " semiring=" << semiring_name(an.loop.semiring) << "\n";
  for (const auto& note : an.loop.notes) os << "note: " << note << "\n";
  os << "\neigenpairs\n";
  for (std::size_t i = 0; i < an.sd.a.size(); ++i)
    os << "  " << i + 1 << ": a = " << an.sd.a[i].to_string() << ", b = " << an.sd.b[i].to_string()
       << ", conjugate " << an.sd.sigma[i] + 1 << "\n";
  os << "\ngroups  (|a|, |b|)  inner  outer  R  C\n";
  for (std::size_t gi = 0; gi < an.table.groups.size(); ++gi) {
    const Group& g = an.table.groups[gi];
    DyadicInterval enc = inner_enclosure(g.key, an.loop.p, kDigits);
    auto exact = exact_inner(g.key, an.loop.p);
    os << "  G" << gi + 1 << " " << index_list(g.indices) << "  (" << g.key.mod_a.to_string() << ", "
       << g.key.mod_b.to_string() << ")  inner in [" << decimal(enc.lo, kDigits, false) << ", "
       << decimal(enc.hi, kDigits, true) << "]";
    if (exact) os << " = " << exact->to_string();
    os << "  outer " << g.key.outer().to_string() << "  R " << index_list(g.real_indices) << "  C "
       << index_list(g.complex_indices) << "\n";
  }
  if (!an.table.excluded.empty()) os << "  excluded (zero eigenvalue): " << index_list(an.table.excluded) << "\n";
  os << "\ngamma\n";
  for (std::size_t c = 0; c < an.gamma.m; ++c)
    for (std::size_t i = 0; i < an.gamma.n; ++i)
      os << "  gamma_" << c + 1 << "," << i + 1 << "(x) = " << form_text(an.gamma.g[c][i]) << "\n";
  os << "\nlex order (ascending)\n";
  for (Direction d : {Direction::p, Direction::n}) {
    os << "  " << direction_name(d) << ":";
    for (auto gi : an.order(d)) os << " G" << gi + 1;
    os << "\n";
  }
  return os.str();
}

}  // namespace past
