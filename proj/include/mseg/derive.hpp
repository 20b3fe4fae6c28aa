#pragma once
// Multisegment shadows of derivative computations: the two-sided Jacquet
// factorizations on a single segment, the subtraction rules whose outputs
// are forced to be plain multiset differences, composition and commutation
// checks for peeling chains, and the generic-case mx / eta invariants.

#include <string>
#include <vector>

#include "json.hpp"
#include "mseg/core.hpp"

namespace mseg {

enum class JacquetKind { Zelevinsky, Steinberg };

// Split [a,b] after peeling i units: Zelevinsky peels from the right end,
// ([a,b-i], [b-i+1,b]); Steinberg from the left, ([a+i,b], [a,a+i-1]).
// Boundary i = 0 or i = rel_length gives an empty factor.
std::pair<Segment, Segment> jacquet_segment(JacquetKind kind, const Segment& d, int i);

// Jacquet slices exist only at multiples of the line dimension.
bool jacquet_nonvanishing(const Segment& d, long absolute_depth);

enum class RewriteRule { SameEndSteinberg, NestedZelevinsky, Composition };

struct DerivativeRewrite {
  RewriteRule rule;
  Multisegment input;
  Multisegment peeled;
  Multisegment output;  // input == output + peeled
  std::vector<std::string> preconditions;
};

// Peel d from p when every entry of p shares d's right endpoint.
Multisegment derivative_same_end_steinberg(const Multisegment& p, const Segment& d);
// Peel d from m when every entry of m sits inside d and d occurs in m.
Multisegment derivative_nested_zelevinsky(const Multisegment& m, const Segment& d);
// Peel the submultiset n from m when all entries of m are one repeated segment.
Multisegment derivative_nested_zelevinsky(const Multisegment& m, const Multisegment& n);

// Rewrite-record variants of the three rules above.
DerivativeRewrite rewrite_same_end_steinberg(const Multisegment& p, const Segment& d);
DerivativeRewrite rewrite_nested_zelevinsky(const Multisegment& m, const Segment& d);
DerivativeRewrite rewrite_nested_zelevinsky(const Multisegment& m, const Multisegment& n);

struct ComposeResult {
  bool ok = false;
  // when !ok: the two step positions whose exchange distinguishes results
  std::pair<std::size_t, std::size_t> steps{0, 0};
  std::string detail;
};

// Verifies that peeling the chain step by step matches peeling the summed
// chain at once, across every step order reachable by swapping adjacent
// mutually-unlinked steps. Throws when a step is not a submultiset of what
// remains.
ComposeResult compose_check(const Multisegment& m, const std::vector<Multisegment>& chain);

// The generic-case mx multisegment: [a(d'), b(d)] over entries d' of n with
// a(d') <= b(d). filter_saturated additionally imposes a(d) <= a(d'), which
// keeps exactly the d-saturated outputs; the unfiltered variant is the
// closed formula that shows up alongside it. Requires n generic.
Multisegment mx_generic(const Multisegment& n, const Segment& d, bool filter_saturated = true);

// Counts indexed by the d-saturated segments [a,b], [a+1,b], ..., [b,b].
struct EtaVector {
  Segment base;
  std::vector<int> entries;  // entries[c - a(base)] counts [c, b(base)]

  int at(const Segment& sat) const;
};

EtaVector eta_generic(const Multisegment& n, const Segment& d);

// mx at the longest segment of n ending at rho; the longest one must be
// unique. Requires n generic.
Multisegment mxpt_b_generic(const Multisegment& n, const CuspidalPoint& rho);

// Endpoint pattern a(d) <= a(d') <= b(d) <= b(d') that forces a vanishing
// derivative on d-reduced input.
bool vanishing_predicate(const Segment& d, const Segment& dp);

nlohmann::json rewrite_to_json(const DerivativeRewrite& r);

}  // namespace mseg
