// Copyright (c) past contributors.
// SPDX-License-Identifier: Apache-2.0
#include "past/exactnum/text.hpp"

#include "past/errors.hpp"

namespace past {

namespace {

Json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return Json(z.get_si());
  return Json(z.get_str());
}

Integer integer_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) {
    Rational q = parse_rational(j.get<std::string>());
    if (q.get_den() != 1) throw ParseError(where + ": expected an integer");
    return q.get_num();
  }
  throw ParseError(where + ": expected an integer");
}

}  // namespace

DyadicInterval canonical_interval(const RealAlgebraic& x) {
  if (x.is_rational()) return {x.rational(), x.rational()};
  IntPolynomial p = x.poly();
  auto chain = sturm_sequence(p);
  // Walk dyadic grids from coarse to fine; the answer depends only on x.
  long k = -static_cast<long>(bit_length(ceil_of(root_bound(p)))) - 1;
  long bits = k + 2;
  for (;; ++k) {
    Rational step = pow2(-k);
    if (bits < k + 2) bits = k + 2;
    Rational lo;
    while (true) {
      DyadicInterval e = x.enclosure(bits);
      lo = Rational(floor_of(e.lo / step)) * step;
      if (e.hi <= lo + step) break;
      bits += 4;
    }
    if (count_roots(chain, lo, lo + step) == 1) return {lo, lo + step};
  }
}

Json to_json(const RealAlgebraic& x) {
  if (x.is_rational()) return Json(to_string(x.rational()));
  IntPolynomial mp = x.poly();
  Json poly = Json::array();
  for (const auto& c : mp.coeffs()) poly.push_back(integer_json(c));
  DyadicInterval iv = canonical_interval(x);
  Json out = Json::object();
  out["poly"] = poly;
  out["interval"] = Json::array({to_string(iv.lo), to_string(iv.hi)});
  return out;
}

Json to_json(const ComplexAlgebraic& z) {
  Json out = Json::object();
  out["re"] = to_json(z.re);
  out["im"] = to_json(z.im);
  return out;
}

Rational rational_from_json(const Json& j, const std::string& where) {
  try {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
  } catch (const ParseError& e) {
    throw ParseError(where + ": " + e.what());
  }
  throw ParseError(where + ": expected a rational (string \"num/den\" or integer)");
}

RealAlgebraic real_from_json(const Json& j, const std::string& where) {
  if (!j.is_object()) return RealAlgebraic(rational_from_json(j, where));
  for (auto it = j.begin(); it != j.end(); ++it)
    if (it.key() != "poly" && it.key() != "interval")
      throw ParseError(where + ": unknown key '" + it.key() + "'");
  if (!j.contains("poly") || !j["poly"].is_array() || j["poly"].empty())
    throw ParseError(where + ": algebraic number needs a non-empty \"poly\" array");
  if (!j.contains("interval") || !j["interval"].is_array() || j["interval"].size() != 2)
    throw ParseError(where + ": algebraic number needs \"interval\": [lo, hi]");
  std::vector<Integer> coeffs;
  for (std::size_t i = 0; i < j["poly"].size(); ++i)
    coeffs.push_back(integer_from_json(j["poly"][i], where + ".poly[" + std::to_string(i) + "]"));
  Rational lo = rational_from_json(j["interval"][0], where + ".interval[0]");
  Rational hi = rational_from_json(j["interval"][1], where + ".interval[1]");
  IntPolynomial p(std::move(coeffs));
  if (p.degree() < 1) throw ParseError(where + ": defining polynomial must be non-constant");
  if (hi < lo) throw ParseError(where + ": empty interval");
  try {
    return RealAlgebraic::from_root(p, lo, hi);
  } catch (const InternalError&) {
    throw ParseError(where + ": interval does not isolate exactly one root");
  }
}

}  // namespace past
