#pragma once
// Segment and multisegment algebra over cuspidal lines.
//
// A cuspidal line is a Z-torsor of unramified twists nu^k.rho of a fixed
// base point; a segment [a,b] is a contiguous exponent interval on one line
// and a multisegment is a finite multiset of nonempty segments kept in a
// canonical order. Points on distinct lines never compare, link or touch.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace mseg {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct budget_error : error {
  using error::error;
};

struct parse_error : error {
  parse_error(const std::string& what, std::size_t pos) : error(what), position(pos) {}
  std::size_t position;
};

// A line carries its own dual so that segments stay self-contained values.
// Lines compare by id; the default (unnamed) line is self-dual with dim 1.
struct Line {
  std::string id;
  int dim = 1;  // scales absolute lengths only, never linkedness
  std::string dual_id;
  int dual_dim = 1;

  static Line standard() { return Line{"", 1, "", 1}; }
  bool self_dual() const { return dual_id == id; }
  Line dual() const { return Line{dual_id, dual_dim, id, dim}; }

  friend bool operator==(const Line& x, const Line& y) { return x.id == y.id; }
  friend bool operator!=(const Line& x, const Line& y) { return x.id != y.id; }
  friend bool operator<(const Line& x, const Line& y) { return x.id < y.id; }
};

// The point nu^exp.rho on a line.
struct CuspidalPoint {
  Line line;
  int exp = 0;

  // strictly below: same line and a positive integer apart
  bool before(const CuspidalPoint& q) const { return line == q.line && exp < q.exp; }
  bool before_eq(const CuspidalPoint& q) const { return line == q.line && exp <= q.exp; }

  friend bool operator==(const CuspidalPoint& p, const CuspidalPoint& q) {
    return p.line == q.line && p.exp == q.exp;
  }
  friend bool operator!=(const CuspidalPoint& p, const CuspidalPoint& q) { return !(p == q); }
  friend bool operator<(const CuspidalPoint& p, const CuspidalPoint& q) {
    if (p.line != q.line) return p.line < q.line;
    return p.exp < q.exp;
  }
};

// Closed interval [a,b] of exponents on a line; a <= b when nonempty. The
// empty segment is a distinguished sentinel: it can come out of an
// intersection or a boundary slice but is never stored in a Multisegment.
class Segment {
 public:
  Segment() : line_(Line::standard()), a_(0), b_(-1) {}  // the empty segment
  Segment(Line line, int a, int b);
  static Segment empty();
  static Segment point(Line line, int exp) { return Segment(std::move(line), exp, exp); }

  bool is_empty() const { return b_ < a_; }
  const Line& line() const { return line_; }
  int a() const { return a_; }
  int b() const { return b_; }
  CuspidalPoint a_point() const { return {line_, a_}; }
  CuspidalPoint b_point() const { return {line_, b_}; }

  int rel_length() const { return is_empty() ? 0 : b_ - a_ + 1; }
  long abs_length() const { return static_cast<long>(rel_length()) * line_.dim; }

  Segment shift_left() const;   // [a-1, b-1]
  Segment shift_right() const;  // [a+1, b+1]
  Segment dual() const;         // [-b, -a] on the dual line

  bool contains(const Segment& other) const;  // non-strict, empty contained in all

  friend bool operator==(const Segment& x, const Segment& y) {
    if (x.is_empty() || y.is_empty()) return x.is_empty() && y.is_empty();
    return x.line_ == y.line_ && x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator!=(const Segment& x, const Segment& y) { return !(x == y); }
  // canonical order: (line, a, b); empties sort first
  friend bool operator<(const Segment& x, const Segment& y);

 private:
  Line line_;
  int a_, b_;
};

enum class SegmentRelation {
  Equal,
  Contains,
  ContainedIn,
  UnlinkedDisjoint,
  LinkedBefore,
  LinkedAfter,
  DifferentLine,
};

const char* to_string(SegmentRelation r);

// Exactly one variant applies to any ordered pair of nonempty segments.
SegmentRelation relation(const Segment& d1, const Segment& d2);

// linked: union is a segment and neither contains the other
bool linked(const Segment& d1, const Segment& d2);
// the strict precedence d1 < d2: linked and a(d1) < a(d2)
bool precedes(const Segment& d1, const Segment& d2);
// meeting end-to-start with no overlap
bool juxtaposed(const Segment& d1, const Segment& d2);
// inner is base-saturated: same line, b(inner) = b(base), a(base) <= a(inner)
bool saturated(const Segment& inner, const Segment& base);
// b-dominance: b(d) < b(d') or (b(d) = b(d') and a(d) <= a(d'))
bool leq_b(const Segment& d, const Segment& dp);
// a-dominance: a(d) < a(d') or (a(d) = a(d') and b(d) <= b(d'))
bool leq_a(const Segment& d, const Segment& dp);

// (union, intersection) of a linked pair; the intersection may be empty.
// Rejects pairs that are not linked.
std::pair<Segment, Segment> union_intersection(const Segment& d1, const Segment& d2);

std::string repr(const Segment& s);
std::string repr(const CuspidalPoint& p);

// Finite multiset of nonempty segments; entries kept sorted in canonical
// order, so equality is plain vector equality. Constructors drop empty
// segments.
class Multisegment {
 public:
  Multisegment() = default;
  explicit Multisegment(std::vector<Segment> entries);

  const std::vector<Segment>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  Multisegment plus(const Multisegment& other) const;
  Multisegment plus(const Segment& s) const;
  // multiset difference; throws with the offending segment on underflow
  Multisegment minus(const Multisegment& other) const;
  Multisegment minus(const Segment& s) const;
  bool contains_sub(const Multisegment& other) const;
  std::size_t count(const Segment& s) const;

  // csupp: the support multiset of cuspidal points, sorted
  std::vector<CuspidalPoint> support() const;
  // segments whose right end is the given point
  Multisegment slice_b(const CuspidalPoint& rho) const;
  // no two entries linked
  bool generic() const;
  // every entry is base-saturated
  bool saturated(const Segment& base) const;

  long total_rel_length() const;
  long total_abs_length() const;

  // labeling with b(d_1) never strictly below b(d_2) for consecutive
  // entries: per line b descends, ties broken by canonical order
  std::vector<Segment> labeling() const;

  Multisegment dual() const;

  friend bool operator==(const Multisegment& x, const Multisegment& y) {
    return x.entries_ == y.entries_;
  }
  friend bool operator!=(const Multisegment& x, const Multisegment& y) { return !(x == y); }
  friend bool operator<(const Multisegment& x, const Multisegment& y);

 private:
  std::vector<Segment> entries_;
};

std::string repr(const Multisegment& m);

std::size_t hash_value(const Segment& s);
std::size_t hash_value(const Multisegment& m);

struct MultisegmentHash {
  std::size_t operator()(const Multisegment& m) const { return hash_value(m); }
};

}  // namespace mseg
