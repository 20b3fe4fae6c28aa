#pragma once
// Membership in M_pi for pi keyed by its Zelevinsky multisegment m: a
// multisegment n belongs to M_pi when every segment of n passes both
// matching conditions against m. The closure checker re-proves, instance by
// instance, that membership is inherited along intersection-union moves.

#include <optional>
#include <vector>

#include "json.hpp"
#include "mseg/core.hpp"
#include "mseg/zposet.hpp"

namespace mseg {

struct SegmentVerdict {
  Segment segment;
  bool lc = false;
  bool rc = false;
  bool in_m() const { return lc && rc; }
};

struct MembershipReport {
  Multisegment n;
  std::vector<SegmentVerdict> verdicts;  // one per distinct segment of n
  bool overall = false;
};

MembershipReport membership(const Multisegment& m, const Multisegment& n);

struct ClosureCounterexample {
  Multisegment node;
  Segment segment;
  bool lc = false;
  bool rc = false;
};

struct ClosureVerdict {
  bool holds = false;
  std::size_t nodes_checked = 0;
  std::optional<ClosureCounterexample> counterexample;
};

// Requires membership(m, n).overall; walks lower_set(n) and reports the
// first node that falls out of M_pi. A counterexample here means a solver
// bug, so it carries enough data to reproduce.
ClosureVerdict closure_check(const Multisegment& m, const Multisegment& n,
                             const LowerSetOptions& opts = {});

// Membership shortcut for the tempered case built from mutually unlinked
// segments: n passes iff no segment of n touches a segment of m end-to-start.
bool fastpath_unlinked_tempered(const Multisegment& m, const Multisegment& n);

// consecutive unit right-shifts of one segment
bool is_ladder(const Multisegment& m);

// Membership shortcut for a Speh representation with ladder multisegment m
// labeled d_1 < ... < d_r: every segment d of n must satisfy d !< d_1 and
// d_r !< d.
bool fastpath_speh(const Multisegment& m, const Multisegment& n);

nlohmann::json membership_to_json(const MembershipReport& r);
nlohmann::json closure_to_json(const ClosureVerdict& v);

}  // namespace mseg
