#include "mseg/core.hpp"

#include <algorithm>

namespace mseg {

Segment::Segment(Line line, int a, int b) : line_(std::move(line)), a_(a), b_(b) {
  if (b < a) throw error("segment endpoints reversed: b < a");
}

Segment Segment::empty() { return Segment(); }

Segment Segment::shift_left() const {
  if (is_empty()) throw error("shift of the empty segment");
  return Segment(line_, a_ - 1, b_ - 1);
}

Segment Segment::shift_right() const {
  if (is_empty()) throw error("shift of the empty segment");
  return Segment(line_, a_ + 1, b_ + 1);
}

Segment Segment::dual() const {
  if (is_empty()) return Segment::empty();
  return Segment(line_.dual(), -b_, -a_);
}

bool Segment::contains(const Segment& other) const {
  if (other.is_empty()) return true;
  if (is_empty()) return false;
  return line_ == other.line_ && a_ <= other.a_ && other.b_ <= b_;
}

bool operator<(const Segment& x, const Segment& y) {
  if (x.is_empty() || y.is_empty()) return x.is_empty() && !y.is_empty();
  if (x.line_ != y.line_) return x.line_ < y.line_;
  if (x.a_ != y.a_) return x.a_ < y.a_;
  return x.b_ < y.b_;
}

const char* to_string(SegmentRelation r) {
  switch (r) {
    case SegmentRelation::Equal: return "equal";
    case SegmentRelation::Contains: return "contains";
    case SegmentRelation::ContainedIn: return "contained-in";
    case SegmentRelation::UnlinkedDisjoint: return "unlinked-disjoint";
    case SegmentRelation::LinkedBefore: return "linked-before";
    case SegmentRelation::LinkedAfter: return "linked-after";
    case SegmentRelation::DifferentLine: return "different-line";
  }
  return "?";
}

SegmentRelation relation(const Segment& d1, const Segment& d2) {
  if (d1.is_empty() || d2.is_empty()) throw error("relation of an empty segment");
  if (d1.line() != d2.line()) return SegmentRelation::DifferentLine;
  if (d1 == d2) return SegmentRelation::Equal;
  if (d1.contains(d2)) return SegmentRelation::Contains;
  if (d2.contains(d1)) return SegmentRelation::ContainedIn;
  // union contiguous <=> the gap between them is at most adjacency
  if (std::max(d1.a(), d2.a()) > std::min(d1.b(), d2.b()) + 1)
    return SegmentRelation::UnlinkedDisjoint;
  return d1.a() < d2.a() ? SegmentRelation::LinkedBefore : SegmentRelation::LinkedAfter;
}

bool linked(const Segment& d1, const Segment& d2) {
  SegmentRelation r = relation(d1, d2);
  return r == SegmentRelation::LinkedBefore || r == SegmentRelation::LinkedAfter;
}

bool precedes(const Segment& d1, const Segment& d2) {
  return relation(d1, d2) == SegmentRelation::LinkedBefore;
}

bool juxtaposed(const Segment& d1, const Segment& d2) {
  if (d1.is_empty() || d2.is_empty()) return false;
  if (d1.line() != d2.line()) return false;
  return d1.b() + 1 == d2.a() || d2.b() + 1 == d1.a();
}

bool saturated(const Segment& inner, const Segment& base) {
  if (inner.is_empty() || base.is_empty()) return false;
  return inner.line() == base.line() && inner.b() == base.b() && base.a() <= inner.a();
}

bool leq_b(const Segment& d, const Segment& dp) {
  if (d.is_empty() || dp.is_empty()) throw error("leq_b of an empty segment");
  if (d.line() != dp.line()) return false;
  return d.b() < dp.b() || (d.b() == dp.b() && d.a() <= dp.a());
}

bool leq_a(const Segment& d, const Segment& dp) {
  if (d.is_empty() || dp.is_empty()) throw error("leq_a of an empty segment");
  if (d.line() != dp.line()) return false;
  return d.a() < dp.a() || (d.a() == dp.a() && d.b() <= dp.b());
}

std::pair<Segment, Segment> union_intersection(const Segment& d1, const Segment& d2) {
  SegmentRelation r = relation(d1, d2);
  if (r != SegmentRelation::LinkedBefore && r != SegmentRelation::LinkedAfter)
    throw error("union_intersection requires a linked pair, got " + std::string(to_string(r)) +
                ": " + repr(d1) + ", " + repr(d2));
  Segment u(d1.line(), std::min(d1.a(), d2.a()), std::max(d1.b(), d2.b()));
  int ia = std::max(d1.a(), d2.a());
  int ib = std::min(d1.b(), d2.b());
  Segment i = ia <= ib ? Segment(d1.line(), ia, ib) : Segment::empty();
  return {u, i};
}

std::string repr(const Segment& s) {
  if (s.is_empty()) return "(empty)";
  std::string out = "[" + std::to_string(s.a());
  if (s.b() != s.a()) out += "," + std::to_string(s.b());
  out += "]";
  if (!s.line().id.empty()) out += "_" + s.line().id;
  return out;
}

std::string repr(const CuspidalPoint& p) {
  std::string out = "nu^" + std::to_string(p.exp);
  out += p.line.id.empty() ? "" : "_" + p.line.id;
  return out;
}

Multisegment::Multisegment(std::vector<Segment> entries) {
  entries_.reserve(entries.size());
  for (auto& s : entries)
    if (!s.is_empty()) entries_.push_back(std::move(s));
  std::sort(entries_.begin(), entries_.end());
}

Multisegment Multisegment::plus(const Multisegment& other) const {
  std::vector<Segment> merged;
  merged.reserve(entries_.size() + other.entries_.size());
  std::merge(entries_.begin(), entries_.end(), other.entries_.begin(), other.entries_.end(),
             std::back_inserter(merged));
  Multisegment out;
  out.entries_ = std::move(merged);
  return out;
}

Multisegment Multisegment::plus(const Segment& s) const {
  if (s.is_empty()) return *this;
  Multisegment out = *this;
  out.entries_.insert(std::upper_bound(out.entries_.begin(), out.entries_.end(), s), s);
  return out;
}

Multisegment Multisegment::minus(const Multisegment& other) const {
  Multisegment out = *this;
  for (const auto& s : other.entries_) {
    auto it = std::find(out.entries_.begin(), out.entries_.end(), s);
    if (it == out.entries_.end())
      throw error("multiset subtraction underflow at segment " + repr(s));
    out.entries_.erase(it);
  }
  return out;
}

Multisegment Multisegment::minus(const Segment& s) const {
  if (s.is_empty()) return *this;
  Multisegment sub;
  sub.entries_.push_back(s);
  return minus(sub);
}

bool Multisegment::contains_sub(const Multisegment& other) const {
  auto it = entries_.begin();
  for (const auto& s : other.entries_) {
    it = std::find(it, entries_.end(), s);
    if (it == entries_.end()) return false;
    ++it;
  }
  return true;
}

std::size_t Multisegment::count(const Segment& s) const {
  return static_cast<std::size_t>(std::count(entries_.begin(), entries_.end(), s));
}

std::vector<CuspidalPoint> Multisegment::support() const {
  std::vector<CuspidalPoint> pts;
  for (const auto& s : entries_)
    for (int e = s.a(); e <= s.b(); ++e) pts.push_back({s.line(), e});
  std::sort(pts.begin(), pts.end());
  return pts;
}

Multisegment Multisegment::slice_b(const CuspidalPoint& rho) const {
  std::vector<Segment> keep;
  for (const auto& s : entries_)
    if (s.b_point() == rho) keep.push_back(s);
  return Multisegment(std::move(keep));
}

bool Multisegment::generic() const {
  for (std::size_t i = 0; i < entries_.size(); ++i)
    for (std::size_t j = i + 1; j < entries_.size(); ++j)
      if (linked(entries_[i], entries_[j])) return false;
  return true;
}

bool Multisegment::saturated(const Segment& base) const {
  for (const auto& s : entries_)
    if (!mseg::saturated(s, base)) return false;
  return true;
}

long Multisegment::total_rel_length() const {
  long t = 0;
  for (const auto& s : entries_) t += s.rel_length();
  return t;
}

long Multisegment::total_abs_length() const {
  long t = 0;
  for (const auto& s : entries_) t += s.abs_length();
  return t;
}

std::vector<Segment> Multisegment::labeling() const {
  std::vector<Segment> out = entries_;
  std::sort(out.begin(), out.end(), [](const Segment& x, const Segment& y) {
    if (x.line() != y.line()) return x.line() < y.line();
    if (x.b() != y.b()) return x.b() > y.b();
    return x.a() < y.a();
  });
  return out;
}

Multisegment Multisegment::dual() const {
  std::vector<Segment> out;
  out.reserve(entries_.size());
  for (const auto& s : entries_) out.push_back(s.dual());
  return Multisegment(std::move(out));
}

bool operator<(const Multisegment& x, const Multisegment& y) {
  return std::lexicographical_compare(x.entries_.begin(), x.entries_.end(), y.entries_.begin(),
                                      y.entries_.end());
}

std::string repr(const Multisegment& m) {
  if (m.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < m.entries().size(); ++i) {
    if (i) out += "+";
    out += repr(m.entries()[i]);
  }
  return out;
}

std::size_t hash_value(const Segment& s) {
  std::size_t h = 1469598103934665603ull;
  auto mix = [&h](std::size_t v) {
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  };
  for (char c : s.line().id) mix(static_cast<std::size_t>(c));
  mix(static_cast<std::size_t>(s.a() + (1 << 20)));
  mix(static_cast<std::size_t>(s.b() + (1 << 20)));
  return h;
}

std::size_t hash_value(const Multisegment& m) {
  std::size_t h = 14695981039346656037ull;
  for (const auto& s : m.entries())
    h ^= hash_value(s) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

}  // namespace mseg
