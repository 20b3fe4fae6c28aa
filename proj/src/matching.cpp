#include "mseg/matching.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <stdexcept>

namespace mseg {

namespace {

std::atomic<bool> g_corrupt{false};

}  // namespace

void set_corrupt_admissibility(bool on) { g_corrupt.store(on); }
bool corrupt_admissibility() { return g_corrupt.load(); }

MatchingInstance make_instance(const Multisegment& m, const Segment& d, Side side) {
  if (d.is_empty()) throw error("matching against the empty segment");
  MatchingInstance inst;
  inst.labeled = m.labeling();
  inst.target = d;
  inst.side = side;
  for (int i = 0; i < static_cast<int>(inst.labeled.size()); ++i) {
    const Segment& di = inst.labeled[i];
    if (side == Side::LC) {
      if (precedes(di, d)) inst.left.push_back(i);
      if (precedes(di.shift_left(), d)) inst.right.push_back(i);
    } else {
      if (precedes(d, di)) inst.left.push_back(i);
      if (precedes(d.shift_left(), di)) inst.right.push_back(i);
    }
  }
  return inst;
}

bool verify_witness(const MatchingInstance& inst, const MatchingWitness& w) {
  if (w.assignment.size() != inst.left.size()) return false;
  std::vector<int> seen_left, seen_right;
  for (const auto& [l, r] : w.assignment) {
    if (std::find(inst.left.begin(), inst.left.end(), l) == inst.left.end()) return false;
    if (std::find(inst.right.begin(), inst.right.end(), r) == inst.right.end()) return false;
    if (!inst.admissible(l, r)) return false;
    seen_left.push_back(l);
    seen_right.push_back(r);
  }
  std::sort(seen_left.begin(), seen_left.end());
  std::sort(seen_right.begin(), seen_right.end());
  if (std::adjacent_find(seen_left.begin(), seen_left.end()) != seen_left.end()) return false;
  if (std::adjacent_find(seen_right.begin(), seen_right.end()) != seen_right.end()) return false;
  return true;
}

std::pair<std::vector<int>, std::vector<int>> lc_sets(const Multisegment& m, const Segment& d) {
  MatchingInstance inst = make_instance(m, d, Side::LC);
  // shift identity: i in Xt  <=>  d_i < ->D
  Segment shifted = d.shift_right();
  std::vector<int> via_shift;
  for (int i = 0; i < static_cast<int>(inst.labeled.size()); ++i)
    if (precedes(inst.labeled[i], shifted)) via_shift.push_back(i);
  if (via_shift != inst.right) throw std::logic_error("Xt shift identity violated");
  return {inst.left, inst.right};
}

std::pair<std::vector<int>, std::vector<int>> rc_sets(const Multisegment& m, const Segment& d) {
  MatchingInstance inst = make_instance(m, d, Side::RC);
  // Yt^D = Y^{<-D}
  MatchingInstance shifted = make_instance(m, d.shift_left(), Side::RC);
  if (shifted.left != inst.right) throw std::logic_error("Yt shift identity violated");
  return {inst.left, inst.right};
}

namespace {

struct BipartiteSolver {
  // adjacency in compacted (left slot -> right slot) indices
  std::vector<std::vector<int>> adj;
  int nr = 0;

  static BipartiteSolver build(const MatchingInstance& inst, bool corrupt) {
    BipartiteSolver s;
    s.nr = static_cast<int>(inst.right.size());
    s.adj.resize(inst.left.size());
    for (std::size_t k = 0; k < inst.left.size(); ++k)
      for (int rslot = 0; rslot < s.nr; ++rslot)
        if (corrupt || inst.admissible(inst.left[k], inst.right[rslot]))
          s.adj[k].push_back(rslot);
    return s;
  }

  // Kuhn's augmenting paths over left slots in [from, nl)
  int max_matching(std::size_t from, const std::vector<char>& blocked_right) const {
    std::vector<int> match_r(nr, -1);
    int size = 0;
    std::vector<char> visited(nr);
    std::function<bool(std::size_t)> augment = [&](std::size_t k) {
      for (int r : adj[k]) {
        if (blocked_right[r] || visited[r]) continue;
        visited[r] = 1;
        if (match_r[r] < 0 || augment(static_cast<std::size_t>(match_r[r]))) {
          match_r[r] = static_cast<int>(k);
          return true;
        }
      }
      return false;
    };
    for (std::size_t k = from; k < adj.size(); ++k) {
      std::fill(visited.begin(), visited.end(), 0);
      if (augment(k)) ++size;
    }
    return size;
  }
};

}  // namespace

std::optional<MatchingWitness> decide(Side side, const Multisegment& m, const Segment& d) {
  MatchingInstance inst = make_instance(m, d, side);
  std::size_t nl = inst.left.size();
  if (nl == 0) return MatchingWitness{};
  BipartiteSolver solver = BipartiteSolver::build(inst, g_corrupt.load());
  std::vector<char> blocked(solver.nr, 0);
  if (solver.max_matching(0, blocked) < static_cast<int>(nl)) return std::nullopt;
  // lexicographically smallest saturating assignment: fix left slots in
  // order, taking the least right slot that keeps the rest feasible
  MatchingWitness w;
  for (std::size_t k = 0; k < nl; ++k) {
    bool placed = false;
    for (int r : solver.adj[k]) {
      if (blocked[r]) continue;
      blocked[r] = 1;
      if (solver.max_matching(k + 1, blocked) == static_cast<int>(nl - k - 1)) {
        w.assignment.emplace_back(inst.left[k], inst.right[r]);
        placed = true;
        break;
      }
      blocked[r] = 0;
    }
    if (!placed) throw std::logic_error("witness extraction lost feasibility");
  }
  return w;
}

namespace {

// lexicographic depth-first enumeration of injective admissible maps
bool enumerate_assignments(const MatchingInstance& inst, std::size_t k, std::vector<char>& used,
                           std::vector<std::pair<int, int>>& acc,
                           const std::function<bool(const MatchingWitness&)>& emit) {
  if (k == inst.left.size()) return emit(MatchingWitness{acc});
  for (std::size_t r = 0; r < inst.right.size(); ++r) {
    if (used[r] || !inst.admissible(inst.left[k], inst.right[r])) continue;
    used[r] = 1;
    acc.emplace_back(inst.left[k], inst.right[r]);
    bool stop = enumerate_assignments(inst, k + 1, used, acc, emit);
    acc.pop_back();
    used[r] = 0;
    if (stop) return true;
  }
  return false;
}

}  // namespace

std::optional<MatchingWitness> brute_decide(Side side, const Multisegment& m, const Segment& d,
                                            int bound) {
  MatchingInstance inst = make_instance(m, d, side);
  if (static_cast<int>(inst.left.size()) > bound)
    throw budget_error("brute matching bound exceeded: |left| = " +
                       std::to_string(inst.left.size()));
  std::optional<MatchingWitness> found;
  std::vector<char> used(inst.right.size(), 0);
  std::vector<std::pair<int, int>> acc;
  enumerate_assignments(inst, 0, used, acc, [&](const MatchingWitness& w) {
    found = w;
    return true;
  });
  return found;
}

std::vector<MatchingWitness> all_witnesses(Side side, const Multisegment& m, const Segment& d,
                                           int bound) {
  MatchingInstance inst = make_instance(m, d, side);
  if (static_cast<int>(inst.left.size()) > bound)
    throw budget_error("brute matching bound exceeded: |left| = " +
                       std::to_string(inst.left.size()));
  std::vector<MatchingWitness> out;
  std::vector<char> used(inst.right.size(), 0);
  std::vector<std::pair<int, int>> acc;
  enumerate_assignments(inst, 0, used, acc, [&](const MatchingWitness& w) {
    out.push_back(w);
    return false;
  });
  return out;
}

bool lc(const Multisegment& m, const Segment& d) { return decide(Side::LC, m, d).has_value(); }
bool rc(const Multisegment& m, const Segment& d) { return decide(Side::RC, m, d).has_value(); }

bool is_irreducible_product(const Multisegment& m, const Segment& d) {
  return lc(m, d) && rc(m, d);
}

namespace {

void require_linked_before(const Segment& dx, const Segment& dy) {
  if (relation(dx, dy) != SegmentRelation::LinkedBefore)
    throw error("expected " + repr(dx) + " linked-before " + repr(dy));
}

void require_valid(const MatchingInstance& inst, const MatchingWitness& w, const char* name) {
  if (!verify_witness(inst, w))
    throw error(std::string("invalid ") + name + " witness for target " + repr(inst.target));
}

bool member(const std::vector<int>& v, int i) {
  return std::find(v.begin(), v.end(), i) != v.end();
}

}  // namespace

MatchingWitness combine_union_witness(const Multisegment& m, const Segment& dx, const Segment& dy,
                                      const MatchingWitness& fx, const MatchingWitness& fy,
                                      const MatchingWitness& fr) {
  require_linked_before(dx, dy);
  MatchingInstance ix = make_instance(m, dx, Side::LC);
  MatchingInstance iy = make_instance(m, dy, Side::LC);
  MatchingInstance irx = make_instance(m, dx, Side::RC);
  require_valid(ix, fx, "LC(dx)");
  require_valid(iy, fy, "LC(dy)");
  require_valid(irx, fr, "RC(dx)");

  Segment u = union_intersection(dx, dy).first;
  MatchingInstance iu = make_instance(m, u, Side::LC);
  MatchingWitness w;
  for (int i : iu.left) {
    // indices seen by dx reuse fx, the remaining ones are seen by dy
    std::optional<int> img = member(ix.left, i) ? fx.image_of(i) : fy.image_of(i);
    if (!img) throw std::logic_error("union case split missed index " + std::to_string(i));
    w.assignment.emplace_back(i, *img);
  }
  if (!verify_witness(iu, w))
    throw std::logic_error("combined union witness failed verification for " + repr(u));
  return w;
}

MatchingWitness combine_intersection_witness(const Multisegment& m, const Segment& dx,
                                             const Segment& dy, const MatchingWitness& fx,
                                             const MatchingWitness& fy,
                                             const MatchingWitness& fr) {
  require_linked_before(dx, dy);
  Segment inter = union_intersection(dx, dy).second;
  if (inter.is_empty()) throw error("intersection of " + repr(dx) + " and " + repr(dy) +
                                    " is empty");
  MatchingInstance ix = make_instance(m, dx, Side::LC);
  MatchingInstance iy = make_instance(m, dy, Side::LC);
  MatchingInstance irx = make_instance(m, dx, Side::RC);
  require_valid(ix, fx, "LC(dx)");
  require_valid(iy, fy, "LC(dy)");
  require_valid(irx, fr, "RC(dx)");

  MatchingInstance ii = make_instance(m, inter, Side::LC);
  MatchingWitness w;
  for (int i : ii.left) {
    std::optional<int> img = member(ix.left, i) ? fx.image_of(i) : fy.image_of(i);
    if (!img) throw std::logic_error("intersection case split missed index " + std::to_string(i));
    w.assignment.emplace_back(i, *img);
  }
  if (!verify_witness(ii, w))
    throw std::logic_error("combined intersection witness failed verification for " +
                           repr(inter));
  return w;
}

std::vector<int> obstruction_set(Obstruction kind, const Multisegment& m, const Segment& dx,
                                 const Segment& dy, const MatchingWitness& fy) {
  require_linked_before(dx, dy);
  MatchingInstance iy = make_instance(m, dy, Side::LC);
  require_valid(iy, fy, "LC(dy)");
  std::vector<int> out;
  for (int i : iy.left) {
    const Segment& di = iy.labeled[i];
    const Segment& img = iy.labeled[*fy.image_of(i)];
    bool in;
    if (kind == Obstruction::NSet) {
      in = dx.a_point().before(img.a_point()) && di.contains(dx) &&
           !(dx.a_point() == di.a_point());
    } else {
      in = dx.a_point().before_eq(di.a_point()) && di.b_point().before(dx.b_point()) &&
           dx.b_point().before(img.b_point());
    }
    if (in) out.push_back(i);
  }
  return out;
}

}  // namespace mseg
