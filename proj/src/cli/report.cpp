// Copyright (c) past contributors.
// SPDX-License-Identifier: Apache-2.0
#include "past/cli/report.hpp"

#include <sstream>

namespace past {

namespace {

std::string vector_text(const std::vector<RealAlgebraic>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].to_string();
  return s + ")";
}

}  // namespace

std::string verdict_text(const Verdict& v, const Analysis& an, const LiftCertificate* lift, bool timings) {
  std::ostringstream os;
  os << "status:    " << status_name(v.status) << "\n";
  os << "semiring:  " << semiring_name(v.semiring) << "\n";
  os << "disjuncts: " << v.disjuncts << " of " << v.disjuncts_raw << " after pruning\n";
  if (v.witness) os << "witness:   " << vector_text(*v.witness) << "\n";
  if (v.certificate) {
    os << "certificate: d = " << direction_name(v.certificate->d) << "\n";
    for (std::size_t c = 0; c < v.certificate->assignment.size(); ++c) {
      const GroupKey& k = an.table.groups[v.certificate->assignment[c]].key;
      os << "  constraint " << c + 1 << ": group (|a|, |b|) = (" << k.mod_a.to_string() << ", " << k.mod_b.to_string()
         << "), margin " << v.certificate->margins[c].to_string() << "\n";
    }
  }
  for (const auto& q : v.queries) {
    os << "  query";
    if (q.d) {
      os << " d=" << direction_name(*q.d) << " groups";
      for (auto g : q.assignment) os << " " << g + 1;
    } else {
      os << " union";
    }
    os << ": " << q.result;
    if (timings) os << " (" << q.seconds << " s)";
    os << "\n";
  }
  for (const auto& n : v.notes) os << "note: " << n << "\n";
  if (lift) {
    const auto& c = lift->constants;
    os << "lift: eps = " << to_string(c.epsilon) << ", r = " << c.r << ", l = " << c.l << ", j = " << c.j
       << ", k = " << c.k << "\n";
    os << "  y  = " << vector_text(lift->y) << "\n";
    os << "  Cy = " << vector_text(lift->guard) << "\n";
  }
  return os.str();
}

std::string run_stats_text(const RunStats& s) {
  std::ostringstream os;
  os << "runs:       " << s.runs << " (cap " << s.cap << ", seed " << s.seed << ")\n";
  os << "terminated: " << s.terminated << "\n";
  os << "survivors:  " << s.survivors << " (fraction " << to_string(s.survival_fraction) << ")\n";
  os << "mean runtime of terminated runs: "
     << (s.mean_runtime_of_terminated ? to_string(*s.mean_runtime_of_terminated) : std::string("n/a")) << "\n";
  return os.str();
}

}  // namespace past
