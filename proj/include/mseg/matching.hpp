#pragma once
// Left/right matching conditions for a multisegment against a segment.
//
// With the entries of m labeled d_1..d_r, the four index sets are
//   X  = { i : d_i < D }        Xt = { i : <-d_i < D }
//   Y  = { i : D < d_i }        Yt = { i : <-D < d_i }
// LC(m, D) holds when an injective f : X -> Xt exists with d_i < d_f(i);
// RC(m, D) when an injective f : Y -> Yt exists with d_f(i) < d_i. The
// product of the two representations is irreducible iff both hold.
//
// Indices refer to positions of Multisegment::labeling(); equal segments
// occupy distinct indices.

#include <optional>
#include <utility>
#include <vector>

#include "mseg/core.hpp"

namespace mseg {

enum class Side { LC, RC };

struct MatchingInstance {
  std::vector<Segment> labeled;
  Segment target;
  Side side;
  std::vector<int> left;   // X or Y
  std::vector<int> right;  // Xt or Yt

  bool admissible(int i, int j) const {
    return side == Side::LC ? precedes(labeled[i], labeled[j])
                            : precedes(labeled[j], labeled[i]);
  }
};

MatchingInstance make_instance(const Multisegment& m, const Segment& d, Side side);

// An injective assignment defined on all of the instance's left set,
// stored as (left index, right index) pairs sorted by left index.
struct MatchingWitness {
  std::vector<std::pair<int, int>> assignment;

  std::optional<int> image_of(int left_index) const {
    for (const auto& [l, r] : assignment)
      if (l == left_index) return r;
    return std::nullopt;
  }
  friend bool operator==(const MatchingWitness& x, const MatchingWitness& y) {
    return x.assignment == y.assignment;
  }
};

bool verify_witness(const MatchingInstance& inst, const MatchingWitness& w);

// (X, Xt) over the canonical labeling; checks the shift identity
// Xt^D = X^{->D} internally.
std::pair<std::vector<int>, std::vector<int>> lc_sets(const Multisegment& m, const Segment& d);
// (Y, Yt); checks Yt^D = Y^{<-D}.
std::pair<std::vector<int>, std::vector<int>> rc_sets(const Multisegment& m, const Segment& d);

// Maximum-bipartite-matching decision with witness extraction. Returned
// witnesses are the lexicographically smallest saturating assignment in
// left-index order.
std::optional<MatchingWitness> decide(Side side, const Multisegment& m, const Segment& d);

// Independent oracle enumerating injections in lexicographic order.
// Throws budget_error when |left| exceeds the bound.
std::optional<MatchingWitness> brute_decide(Side side, const Multisegment& m, const Segment& d,
                                            int bound = 6);

// Every valid assignment, lexicographically ordered (same bound rule).
std::vector<MatchingWitness> all_witnesses(Side side, const Multisegment& m, const Segment& d,
                                           int bound = 6);

bool lc(const Multisegment& m, const Segment& d);
bool rc(const Multisegment& m, const Segment& d);
bool is_irreducible_product(const Multisegment& m, const Segment& d);

// The constructive step behind closedness of M_pi under intersection-union:
// given dx linked-before dy and valid witnesses fx for LC(m,dx), fy for
// LC(m,dy) and fr for RC(m,dx), assemble LC witnesses for the union and the
// intersection. Inputs are re-validated; outputs are checked before return.
MatchingWitness combine_union_witness(const Multisegment& m, const Segment& dx, const Segment& dy,
                                      const MatchingWitness& fx, const MatchingWitness& fy,
                                      const MatchingWitness& fr);
MatchingWitness combine_intersection_witness(const Multisegment& m, const Segment& dx,
                                             const Segment& dy, const MatchingWitness& fx,
                                             const MatchingWitness& fy, const MatchingWitness& fr);

// The two index sets whose emptiness makes the constructions well defined.
enum class Obstruction { NSet, OSet };
std::vector<int> obstruction_set(Obstruction kind, const Multisegment& m, const Segment& dx,
                                 const Segment& dy, const MatchingWitness& fy);

// Test hook: force every left-right pair admissible inside decide() only.
// brute_decide, witness verification and the set computations stay honest,
// so the self-check suites can demonstrate that they catch a broken solver.
void set_corrupt_admissibility(bool on);
bool corrupt_admissibility();

}  // namespace mseg
