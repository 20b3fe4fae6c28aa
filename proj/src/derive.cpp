#include "mseg/derive.hpp"

#include <algorithm>

#include "mseg/notation.hpp"

namespace mseg {

std::pair<Segment, Segment> jacquet_segment(JacquetKind kind, const Segment& d, int i) {
  if (d.is_empty()) throw error("jacquet factorization of the empty segment");
  if (i < 0 || i > d.rel_length())
    throw error("jacquet depth " + std::to_string(i) + " out of range for " + repr(d));
  const Line& line = d.line();
  auto piece = [&](int lo, int hi) {
    return hi < lo ? Segment::empty() : Segment(line, lo, hi);
  };
  if (kind == JacquetKind::Zelevinsky)
    return {piece(d.a(), d.b() - i), piece(d.b() - i + 1, d.b())};
  return {piece(d.a() + i, d.b()), piece(d.a(), d.a() + i - 1)};
}

bool jacquet_nonvanishing(const Segment& d, long absolute_depth) {
  if (d.is_empty()) throw error("jacquet factorization of the empty segment");
  return absolute_depth % d.line().dim == 0;
}

Multisegment derivative_same_end_steinberg(const Multisegment& p, const Segment& d) {
  if (p.count(d) == 0)
    throw error("peeled segment " + repr(d) + " does not occur in " + repr(p));
  for (const auto& s : p.entries())
    if (!(s.b_point() == d.b_point()))
      throw error("right endpoints differ: " + repr(s) + " vs " + repr(d));
  return p.minus(d);
}

Multisegment derivative_nested_zelevinsky(const Multisegment& m, const Segment& d) {
  if (m.count(d) == 0)
    throw error("peeled segment " + repr(d) + " does not occur in " + repr(m));
  for (const auto& s : m.entries())
    if (!d.contains(s)) throw error("entry " + repr(s) + " not contained in " + repr(d));
  return m.minus(d);
}

Multisegment derivative_nested_zelevinsky(const Multisegment& m, const Multisegment& n) {
  for (const auto& s : m.entries())
    if (s != m.entries().front())
      throw error("entries of " + repr(m) + " are not all equal");
  if (!m.contains_sub(n))
    throw error(repr(n) + " is not a submultiset of " + repr(m));
  return m.minus(n);
}

namespace {

DerivativeRewrite record(RewriteRule rule, Multisegment input, Multisegment peeled,
                         Multisegment output, std::vector<std::string> pre) {
  return DerivativeRewrite{rule, std::move(input), std::move(peeled), std::move(output),
                           std::move(pre)};
}

}  // namespace

DerivativeRewrite rewrite_same_end_steinberg(const Multisegment& p, const Segment& d) {
  Multisegment out = derivative_same_end_steinberg(p, d);
  return record(RewriteRule::SameEndSteinberg, p, Multisegment({d}), out,
                {"all right endpoints equal " + repr(d.b_point()), repr(d) + " occurs in input"});
}

DerivativeRewrite rewrite_nested_zelevinsky(const Multisegment& m, const Segment& d) {
  Multisegment out = derivative_nested_zelevinsky(m, d);
  return record(RewriteRule::NestedZelevinsky, m, Multisegment({d}), out,
                {"all entries contained in " + repr(d), repr(d) + " occurs in input"});
}

DerivativeRewrite rewrite_nested_zelevinsky(const Multisegment& m, const Multisegment& n) {
  Multisegment out = derivative_nested_zelevinsky(m, n);
  return record(RewriteRule::NestedZelevinsky, m, n, out,
                {"all entries equal", repr(n) + " is a submultiset"});
}

namespace {

bool steps_unlinked(const Multisegment& x, const Multisegment& y) {
  for (const auto& s : x.entries())
    for (const auto& t : y.entries())
      if (linked(s, t)) return false;
  return true;
}

// permutations reachable from the identity by swapping adjacent steps that
// are mutually unlinked
void reachable_orders(const std::vector<Multisegment>& chain, std::vector<std::size_t> order,
                      std::vector<std::vector<std::size_t>>& out) {
  if (std::find(out.begin(), out.end(), order) != out.end()) return;
  out.push_back(order);
  for (std::size_t k = 0; k + 1 < order.size(); ++k) {
    if (!steps_unlinked(chain[order[k]], chain[order[k + 1]])) continue;
    std::vector<std::size_t> swapped = order;
    std::swap(swapped[k], swapped[k + 1]);
    reachable_orders(chain, std::move(swapped), out);
  }
}

}  // namespace

ComposeResult compose_check(const Multisegment& m, const std::vector<Multisegment>& chain) {
  Multisegment total;
  for (std::size_t k = 0; k < chain.size(); ++k) total = total.plus(chain[k]);
  Multisegment whole;
  try {
    whole = m.minus(total);
  } catch (const error& e) {
    throw error("chain sum not peelable: " + std::string(e.what()));
  }

  std::vector<std::size_t> identity(chain.size());
  for (std::size_t k = 0; k < chain.size(); ++k) identity[k] = k;
  std::vector<std::vector<std::size_t>> orders;
  reachable_orders(chain, identity, orders);

  for (const auto& order : orders) {
    Multisegment cur = m;
    for (std::size_t k = 0; k < order.size(); ++k) {
      try {
        cur = cur.minus(chain[order[k]]);
      } catch (const error& e) {
        throw error("step " + std::to_string(order[k] + 1) + " not peelable: " +
                    std::string(e.what()));
      }
    }
    if (cur != whole) {
      ComposeResult r;
      r.ok = false;
      r.steps = {order.empty() ? 0 : order.front(), order.empty() ? 0 : order.back()};
      r.detail = "order yields " + repr(cur) + " instead of " + repr(whole);
      return r;
    }
  }
  ComposeResult r;
  r.ok = true;
  return r;
}

Multisegment mx_generic(const Multisegment& n, const Segment& d, bool filter_saturated) {
  if (!n.generic()) throw error("mx requires a generic multisegment");
  if (d.is_empty()) throw error("mx against the empty segment");
  std::vector<Segment> out;
  for (const auto& dp : n.entries()) {
    if (!dp.a_point().before_eq(d.b_point())) continue;
    if (filter_saturated && !d.a_point().before_eq(dp.a_point())) continue;
    out.emplace_back(d.line(), dp.a(), d.b());
  }
  return Multisegment(std::move(out));
}

int EtaVector::at(const Segment& sat) const {
  if (!saturated(sat, base)) return 0;
  return entries[static_cast<std::size_t>(sat.a() - base.a())];
}

EtaVector eta_generic(const Multisegment& n, const Segment& d) {
  Multisegment mx = mx_generic(n, d, true);
  EtaVector eta;
  eta.base = d;
  eta.entries.assign(static_cast<std::size_t>(d.rel_length()), 0);
  for (const auto& s : mx.entries()) eta.entries[static_cast<std::size_t>(s.a() - d.a())]++;
  return eta;
}

Multisegment mxpt_b_generic(const Multisegment& n, const CuspidalPoint& rho) {
  if (!n.generic()) throw error("mxpt requires a generic multisegment");
  Multisegment slice = n.slice_b(rho);
  if (slice.empty()) throw error("no segment ends at " + repr(rho));
  const Segment* longest = &slice.entries().front();
  for (const auto& s : slice.entries())
    if (s.rel_length() > longest->rel_length()) longest = &s;
  for (const auto& s : slice.entries())
    if (s.rel_length() == longest->rel_length() && s != *longest)
      throw error("longest segment ending at " + repr(rho) + " is ambiguous: " + repr(*longest) +
                  " vs " + repr(s));
  return mx_generic(n, *longest, true);
}

bool vanishing_predicate(const Segment& d, const Segment& dp) {
  if (d.is_empty() || dp.is_empty()) return false;
  return d.a_point().before_eq(dp.a_point()) && dp.a_point().before_eq(d.b_point()) &&
         d.b_point().before_eq(dp.b_point());
}

nlohmann::json rewrite_to_json(const DerivativeRewrite& r) {
  const char* rule = r.rule == RewriteRule::SameEndSteinberg ? "same-end-steinberg"
                     : r.rule == RewriteRule::NestedZelevinsky ? "nested-zelevinsky"
                                                               : "composition";
  return {{"rule", rule},
          {"input", print_multisegment(r.input)},
          {"peeled", print_multisegment(r.peeled)},
          {"output", print_multisegment(r.output)},
          {"preconditions", r.preconditions}};
}

}  // namespace mseg
