#include "mseg/mpi.hpp"

#include "mseg/matching.hpp"
#include "mseg/notation.hpp"

namespace mseg {

MembershipReport membership(const Multisegment& m, const Multisegment& n) {
  MembershipReport rep;
  rep.n = n;
  rep.overall = true;
  const auto& es = n.entries();
  for (std::size_t i = 0; i < es.size(); ++i) {
    if (i && es[i] == es[i - 1]) continue;
    SegmentVerdict v;
    v.segment = es[i];
    v.lc = lc(m, es[i]);
    v.rc = rc(m, es[i]);
    rep.overall = rep.overall && v.in_m();
    rep.verdicts.push_back(v);
  }
  return rep;
}

ClosureVerdict closure_check(const Multisegment& m, const Multisegment& n,
                             const LowerSetOptions& opts) {
  if (!membership(m, n).overall)
    throw error("closure check requires n in M: " + repr(n) + " fails against " + repr(m));
  PosetGraph g = lower_set(n, opts);
  ClosureVerdict verdict;
  verdict.holds = true;
  for (std::size_t i = 1; i < g.nodes.size(); ++i) {
    ++verdict.nodes_checked;
    MembershipReport rep = membership(m, g.nodes[i]);
    if (rep.overall) continue;
    for (const auto& v : rep.verdicts) {
      if (v.in_m()) continue;
      verdict.holds = false;
      verdict.counterexample = ClosureCounterexample{g.nodes[i], v.segment, v.lc, v.rc};
      return verdict;
    }
  }
  return verdict;
}

bool fastpath_unlinked_tempered(const Multisegment& m, const Multisegment& n) {
  if (!m.generic()) throw error("tempered shortcut requires mutually unlinked segments");
  for (const auto& d : m.entries())
    for (const auto& dp : n.entries())
      if (juxtaposed(d, dp)) return false;
  return true;
}

bool is_ladder(const Multisegment& m) {
  const auto& es = m.entries();  // canonical order sorts a ladder by a
  for (std::size_t i = 1; i < es.size(); ++i)
    if (es[i] != es[i - 1].shift_right()) return false;
  return true;
}

bool fastpath_speh(const Multisegment& m, const Multisegment& n) {
  if (m.empty() || !is_ladder(m)) throw error("Speh shortcut requires a ladder multisegment");
  const Segment& first = m.entries().front();
  const Segment& last = m.entries().back();
  for (const auto& d : n.entries())
    if (precedes(d, first) || precedes(last, d)) return false;
  return true;
}

nlohmann::json membership_to_json(const MembershipReport& r) {
  nlohmann::json verdicts = nlohmann::json::array();
  for (const auto& v : r.verdicts)
    verdicts.push_back({{"segment", print_segment(v.segment)},
                        {"lc", v.lc},
                        {"rc", v.rc},
                        {"in_m", v.in_m()}});
  return {{"n", print_multisegment(r.n)}, {"verdicts", verdicts}, {"overall", r.overall}};
}

nlohmann::json closure_to_json(const ClosureVerdict& v) {
  nlohmann::json j = {{"holds", v.holds}, {"nodes_checked", v.nodes_checked}};
  if (v.counterexample) {
    const auto& c = *v.counterexample;
    j["counterexample"] = {{"node", print_multisegment(c.node)},
                           {"segment", print_segment(c.segment)},
                           {"lc", c.lc},
                           {"rc", c.rc}};
  }
  return j;
}

}  // namespace mseg
