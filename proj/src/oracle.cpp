#include "mseg/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "mseg/derive.hpp"
#include "mseg/matching.hpp"
#include "mseg/mpi.hpp"
#include "mseg/zposet.hpp"

namespace mseg {

Window Window::acceptance() { return Window{}; }

Window Window::widened() {
  Window w;
  w.hi = 5;
  return w;
}

std::string Window::describe() const {
  std::ostringstream os;
  os << "[" << lo << "," << hi << "] x<=" << max_segments << " len<=" << max_len
     << " lines=" << lines;
  if (max_total_abs >= 0) os << " abs<=" << max_total_abs;
  return os.str();
}

nlohmann::json Window::to_json() const {
  return {{"lines", lines},     {"lo", lo},
          {"hi", hi},           {"max_segments", max_segments},
          {"max_len", max_len}, {"max_total_abs", max_total_abs}};
}

Window window_from_string(const std::string& text) {
  Window w;
  std::vector<int> parts;
  std::string cur;
  std::istringstream is(text);
  while (std::getline(is, cur, ':')) parts.push_back(std::stoi(cur));
  if (parts.size() < 4 || parts.size() > 5)
    throw error("window must be lo:hi:maxseg:maxlen[:lines], got '" + text + "'");
  w.lo = parts[0];
  w.hi = parts[1];
  w.max_segments = parts[2];
  w.max_len = parts[3];
  if (parts.size() == 5) w.lines = parts[4];
  if (w.lo > w.hi) throw error("window has lo > hi");
  if (w.max_segments < 0 || w.max_len < 1 || w.lines < 1 || w.lines > 2)
    throw error("window bounds out of range");
  return w;
}

std::vector<Line> window_lines(const Window& w) {
  std::vector<Line> out{Line::standard()};
  if (w.lines >= 2) out.push_back(Line{"q", 1, "q", 1});
  return out;
}

LineTable window_table(const Window& w) {
  LineTable t = LineTable::standard();
  for (const auto& l : window_lines(w))
    if (!l.id.empty()) t.declare(l, 0);
  return t;
}

std::vector<Segment> enumerate_segments(const Window& w) {
  if (w.lo > w.hi) throw error("window has lo > hi");
  std::vector<Segment> out;
  for (const auto& line : window_lines(w))
    for (int a = w.lo; a <= w.hi; ++a)
      for (int b = a; b <= std::min(w.hi, a + w.max_len - 1); ++b)
        out.emplace_back(line, a, b);
  return out;
}

std::vector<Multisegment> enumerate_multisegments(const Window& w) {
  std::vector<Segment> segs = enumerate_segments(w);
  std::vector<Multisegment> out;
  out.emplace_back();
  std::vector<Segment> stack;
  std::function<void(std::size_t)> grow = [&](std::size_t from) {
    if (static_cast<int>(stack.size()) >= w.max_segments) return;
    for (std::size_t i = from; i < segs.size(); ++i) {
      stack.push_back(segs[i]);
      Multisegment m(stack);
      if (w.max_total_abs < 0 || m.total_abs_length() <= w.max_total_abs) {
        if (out.size() >= w.enum_budget)
          throw budget_error("enumeration budget exceeded (" + std::to_string(w.enum_budget) +
                             ")");
        out.push_back(std::move(m));
        grow(i);
      }
      stack.pop_back();
    }
  };
  grow(0);
  std::sort(out.begin(), out.end(), [](const Multisegment& x, const Multisegment& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x < y;
  });
  return out;
}

nlohmann::json Report::to_json() const {
  nlohmann::json vs = nlohmann::json::array();
  for (const auto& v : violations) vs.push_back({{"description", v.description}, {"repro", v.repro}});
  return {{"schema_version", 1}, {"suite", suite},       {"window", window.to_json()},
          {"checked", checked},  {"violations", vs},     {"wall_time_ms", wall_ms},
          {"advisory", advisory}};
}

namespace {

struct Sink {
  long long checked = 0;
  std::vector<Violation> violations;

  void flag(std::string description, std::vector<std::string> repro) {
    violations.push_back(Violation{std::move(description), std::move(repro)});
  }
};

void merge_into(Sink& global, Sink& local) {
  global.checked += local.checked;
  global.violations.insert(global.violations.end(), local.violations.begin(),
                           local.violations.end());
}

// shard [0, n) across workers; bodies fill a thread-local sink
template <typename Body>
void sharded(long long n, bool parallel, Sink& sink, const Body& body) {
#ifdef MSEG_HAVE_OPENMP
#pragma omp parallel if (parallel)
  {
    Sink local;
#pragma omp for schedule(dynamic, 16) nowait
    for (long long i = 0; i < n; ++i) body(i, local);
#pragma omp critical
    merge_into(sink, local);
  }
#else
  (void)parallel;
  Sink local;
  for (long long i = 0; i < n; ++i) body(i, local);
  merge_into(sink, local);
#endif
}

std::string side_name(Side s) { return s == Side::LC ? "LC" : "RC"; }

// greedy shrinking: drop whole segments first, then pull endpoints inwards,
// keeping the predicate (the violation) alive
std::vector<Multisegment> minimize(std::vector<Multisegment> inst,
                                   const std::function<bool(const std::vector<Multisegment>&)>& bad) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t which = 0; which < inst.size(); ++which) {
      const auto& entries = inst[which].entries();
      for (std::size_t i = 0; i < entries.size(); ++i) {
        auto cand = inst;
        cand[which] = cand[which].minus(entries[i]);
        if (bad(cand)) {
          inst = cand;
          changed = true;
          break;
        }
      }
      if (changed) break;
    }
  }
  changed = true;
  while (changed) {
    changed = false;
    for (std::size_t which = 0; which < inst.size() && !changed; ++which) {
      const auto& entries = inst[which].entries();
      for (std::size_t i = 0; i < entries.size() && !changed; ++i) {
        const Segment& s = entries[i];
        for (int variant = 0; variant < 2 && !changed; ++variant) {
          if (s.rel_length() == 1) continue;
          Segment t = variant == 0 ? Segment(s.line(), s.a() + 1, s.b())
                                   : Segment(s.line(), s.a(), s.b() - 1);
          auto cand = inst;
          cand[which] = cand[which].minus(s).plus(t);
          if (bad(cand)) {
            inst = cand;
            changed = true;
          }
        }
      }
    }
  }
  return inst;
}

// ---- core ----------------------------------------------------------------

void suite_core(const Window& w, const SuiteOptions& opts, Sink& sink) {
  std::vector<Segment> segs = enumerate_segments(w);
  long long n = static_cast<long long>(segs.size()) * segs.size();
  sharded(n, opts.parallel, sink, [&](long long idx, Sink& local) {
    const Segment& s = segs[idx / segs.size()];
    const Segment& t = segs[idx % segs.size()];
    ++local.checked;
    auto fail = [&](const std::string& what) {
      local.flag(what, {print_segment(s), print_segment(t)});
    };
    SegmentRelation r = relation(s, t);
    // recompute the classification from raw endpoints
    SegmentRelation expect;
    if (s.line() != t.line())
      expect = SegmentRelation::DifferentLine;
    else if (s == t)
      expect = SegmentRelation::Equal;
    else if (s.a() <= t.a() && t.b() <= s.b())
      expect = SegmentRelation::Contains;
    else if (t.a() <= s.a() && s.b() <= t.b())
      expect = SegmentRelation::ContainedIn;
    else if (std::max(s.a(), t.a()) > std::min(s.b(), t.b()) + 1)
      expect = SegmentRelation::UnlinkedDisjoint;
    else
      expect = s.a() < t.a() ? SegmentRelation::LinkedBefore : SegmentRelation::LinkedAfter;
    if (r != expect) fail("relation variant mismatch");
    if (linked(s, t) != linked(t, s)) fail("linked not symmetric");
    if (linked(s, s)) fail("linked not irreflexive");
    if ((r == SegmentRelation::LinkedBefore) !=
        (relation(t, s) == SegmentRelation::LinkedAfter))
      fail("before/after not mirrored");
    if (r == SegmentRelation::LinkedBefore && !(s.a() < t.a() && s.b() < t.b()))
      fail("precedence endpoint law");
    if (linked(s, t)) {
      auto [u, i] = union_intersection(s, t);
      if (s.rel_length() + t.rel_length() != u.rel_length() + i.rel_length())
        fail("length conservation");
    }
    if (precedes(s, t) != precedes(t.dual(), s.dual())) fail("dual order reversal");
    if (!(s.shift_left().dual() == s.dual().shift_right())) fail("shift-dual interplay");
    if (!(s.dual().dual() == s)) fail("dual involution");
  });

  std::vector<Multisegment> mults = enumerate_multisegments(w);
  sharded(static_cast<long long>(mults.size()), opts.parallel, sink,
          [&](long long idx, Sink& local) {
            const Multisegment& m = mults[idx];
            ++local.checked;
            std::vector<Segment> lab = m.labeling();
            Multisegment back(lab);
            if (back != m)
              local.flag("labeling is not a permutation", {print_multisegment(m)});
            for (std::size_t i = 0; i + 1 < lab.size(); ++i)
              if (lab[i].line() == lab[i + 1].line() && lab[i].b() < lab[i + 1].b())
                local.flag("labeling has a rising right end", {print_multisegment(m)});
            if (!(m.dual().dual() == m))
              local.flag("multisegment dual not involutive", {print_multisegment(m)});
          });
}

// ---- parser ----------------------------------------------------------------

void suite_parser(const Window& w, const SuiteOptions& opts, Sink& sink) {
  std::vector<Multisegment> mults = enumerate_multisegments(w);
  sharded(static_cast<long long>(mults.size()), opts.parallel, sink,
          [&](long long idx, Sink& local) {
            const Multisegment& m = mults[idx];
            ++local.checked;
            LineTable table = window_table(w);
            std::string text = print_multisegment(m);
            Multisegment round = parse_multisegment(text, table);
            if (round != m) local.flag("parse(print(m)) != m", {text});
            if (m.empty()) return;
            // a deliberately non-canonical spelling must still canonicalize
            std::string scrambled;
            const auto& es = m.entries();
            for (std::size_t i = es.size(); i-- > 0;) {
              const Segment& s = es[i];
              scrambled += "[" + std::to_string(s.a()) + "," + std::to_string(s.b()) + "]";
              if (!s.line().id.empty()) scrambled += "_" + s.line().id;
              if (i) scrambled += " + ";
            }
            Multisegment reparsed = parse_multisegment(scrambled, table);
            if (print_multisegment(reparsed) != text)
              local.flag("print(parse(s)) not canonical", {scrambled});
          });
}

// ---- hall -------------------------------------------------------------------

void suite_hall(const Window& w, const SuiteOptions& opts, Sink& sink) {
  std::vector<Segment> segs = enumerate_segments(w);
  std::vector<Multisegment> mults = enumerate_multisegments(w);
  long long n = static_cast<long long>(mults.size()) * segs.size() * 2;
  sharded(n, opts.parallel, sink, [&](long long idx, Sink& local) {
    Side side = idx % 2 ? Side::RC : Side::LC;
    long long rest = idx / 2;
    const Segment& d = segs[rest % segs.size()];
    const Multisegment& m = mults[rest / segs.size()];
    ++local.checked;
    try {
      // the set accessors assert the shift identities internally
      if (side == Side::LC)
        (void)lc_sets(m, d);
      else
        (void)rc_sets(m, d);
    } catch (const std::logic_error& e) {
      local.flag(std::string("set identity violated: ") + e.what(),
                 {print_multisegment(m), print_segment(d), side_name(side)});
      return;
    }
    MatchingInstance inst = make_instance(m, d, side);
    if (static_cast<int>(inst.left.size()) > w.brute_bound) return;
    auto fast = decide(side, m, d);
    auto slow = brute_decide(side, m, d, w.brute_bound);
    auto repro = [&] {
      return std::vector<std::string>{print_multisegment(m), print_segment(d),
                                      side_name(side)};
    };
    if (fast.has_value() != slow.has_value()) {
      // shrink against the honest mismatch
      auto bad = [&](const std::vector<Multisegment>& cand) {
        try {
          return decide(side, cand[0], d).has_value() !=
                 brute_decide(side, cand[0], d, w.brute_bound).has_value();
        } catch (const budget_error&) {
          return false;
        }
      };
      auto small = minimize({m}, bad);
      local.flag("decide and brute verdicts differ (" + side_name(side) + ")",
                 {print_multisegment(small[0]), print_segment(d), side_name(side)});
      return;
    }
    if (fast && !verify_witness(inst, *fast))
      local.flag("decide returned an invalid witness", repro());
    if (side == Side::LC) {
      // a non-target member of Xt \ X pins one endpoint of the target
      for (int i : inst.right) {
        if (std::find(inst.left.begin(), inst.left.end(), i) != inst.left.end()) continue;
        const Segment& di = inst.labeled[i];
        if (di == d) continue;
        bool first = di.b() == d.b() && di.a() < d.a() && di.line() == d.line();
        bool second = di.a() == d.a() && di.b() < d.b() && di.line() == d.line();
        if (!first && !second)
          local.flag("Xt\\X dichotomy failed at " + print_segment(di), repro());
      }
    }
  });
}

// ---- duality ----------------------------------------------------------------

void suite_duality(const Window& w, const SuiteOptions& opts, Sink& sink) {
  std::vector<Segment> segs = enumerate_segments(w);
  std::vector<Multisegment> mults = enumerate_multisegments(w);
  long long n = static_cast<long long>(mults.size()) * segs.size();
  sharded(n, opts.parallel, sink, [&](long long idx, Sink& local) {
    const Segment& d = segs[idx % segs.size()];
    const Multisegment& m = mults[idx / segs.size()];
    ++local.checked;
    Multisegment md = m.dual();
    Segment dd = d.dual();
    auto repro = [&] {
      return std::vector<std::string>{print_multisegment(m), print_segment(d)};
    };
    if (lc(m, d) != rc(md, dd)) local.flag("LC(m,d) != RC(m~,d~)", repro());
    if (rc(m, d) != lc(md, dd)) local.flag("RC(m,d) != LC(m~,d~)", repro());
    if (is_irreducible_product(m, d) != is_irreducible_product(md, dd))
      local.flag("irreducibility not dual invariant", repro());
  });
}

// ---- witness ---------------------------------------------------------------

void suite_witness(const Window& w, const SuiteOptions& opts, Sink& sink) {
  std::vector<Segment> segs = enumerate_segments(w);
  std::vector<std::pair<Segment, Segment>> pairs;
  for (const auto& dx : segs)
    for (const auto& dy : segs)
      if (relation(dx, dy) == SegmentRelation::LinkedBefore) pairs.emplace_back(dx, dy);
  std::vector<Multisegment> mults = enumerate_multisegments(w);
  long long n = static_cast<long long>(mults.size()) * pairs.size();
  sharded(n, opts.parallel, sink, [&](long long idx, Sink& local) {
    const auto& [dx, dy] = pairs[idx % pairs.size()];
    const Multisegment& m = mults[idx / pairs.size()];
    ++local.checked;
    auto fx = decide(Side::LC, m, dx);
    auto fy = decide(Side::LC, m, dy);
    auto fr = decide(Side::RC, m, dx);
    if (!fx || !fy || !fr) return;  // hypotheses not met, nothing to assemble
    auto repro = [&] {
      return std::vector<std::string>{print_multisegment(m), print_segment(dx),
                                      print_segment(dy)};
    };
    auto [u, inter] = union_intersection(dx, dy);
    try {
      MatchingWitness wu = combine_union_witness(m, dx, dy, *fx, *fy, *fr);
      if (!verify_witness(make_instance(m, u, Side::LC), wu))
        local.flag("combined union witness invalid", repro());
      if (!decide(Side::LC, m, u))
        local.flag("construction and matching disagree on the union", repro());
    } catch (const std::exception& e) {
      local.flag(std::string("union construction failed: ") + e.what(), repro());
    }
    if (!inter.is_empty()) {
      try {
        MatchingWitness wi = combine_intersection_witness(m, dx, dy, *fx, *fy, *fr);
        if (!verify_witness(make_instance(m, inter, Side::LC), wi))
          local.flag("combined intersection witness invalid", repro());
        if (!decide(Side::LC, m, inter))
          local.flag("construction and matching disagree on the intersection", repro());
      } catch (const std::exception& e) {
        local.flag(std::string("intersection construction failed: ") + e.what(), repro());
      }
    }
    // the two defining sets must vanish for every valid choice of fy
    for (const auto& any_fy : all_witnesses(Side::LC, m, dy, w.brute_bound)) {
      if (!obstruction_set(Obstruction::NSet, m, dx, dy, any_fy).empty())
        local.flag("N obstruction set nonempty", repro());
      if (!obstruction_set(Obstruction::OSet, m, dx, dy, any_fy).empty())
        local.flag("O obstruction set nonempty", repro());
    }
  });
}

// ---- rightmatch --------------------------------------------------------------

void suite_rightmatch(const Window& w, const SuiteOptions& opts, Sink& sink) {
  std::vector<Segment> segs = enumerate_segments(w);
  std::vector<std::pair<Segment, Segment>> pairs;
  for (const auto& dx : segs)
    for (const auto& dy : segs)
      if (relation(dx, dy) == SegmentRelation::LinkedBefore) pairs.emplace_back(dx, dy);
  std::vector<Multisegment> mults = enumerate_multisegments(w);
  long long n = static_cast<long long>(mults.size()) * pairs.size();
  sharded(n, opts.parallel, sink, [&](long long idx, Sink& local) {
    const auto& [dx, dy] = pairs[idx % pairs.size()];
    const Multisegment& m = mults[idx / pairs.size()];
    ++local.checked;
    MatchingInstance irx = make_instance(m, dx, Side::RC);
    MatchingInstance ily = make_instance(m, dy, Side::LC);
    for (const auto& fr : all_witnesses(Side::RC, m, dx, w.brute_bound)) {
      for (int ip : irx.left) {
        if (std::find(ily.right.begin(), ily.right.end(), ip) == ily.right.end()) continue;
        int img = *fr.image_of(ip);
        if (std::find(ily.left.begin(), ily.left.end(), img) == ily.left.end())
          local.flag("right-matching image left X(dy)",
                     {print_multisegment(m), print_segment(dx), print_segment(dy)});
      }
    }
  });
}

// ---- closure ------------------------------------------------------------------

void suite_closure(const Window& w, const SuiteOptions& opts, Sink& sink) {
  // every segment a lower-set node can mention lives in the exponent range,
  // so one widened segment pool indexes all verdict tables
  Window pool_w = w;
  pool_w.max_len = w.hi - w.lo + 1;
  std::vector<Segment> pool = enumerate_segments(pool_w);
  std::map<Segment, int> pool_index;
  for (std::size_t i = 0; i < pool.size(); ++i) pool_index[pool[i]] = static_cast<int>(i);
  auto seg_id = [&](const Segment& s) { return pool_index.at(s); };

  std::vector<Multisegment> mults = enumerate_multisegments(w);

  // lower sets and their per-node distinct segment ids, one BFS per n
  struct NodePlan {
    std::vector<int> own;                      // distinct ids of n itself
    std::vector<std::pair<std::size_t, std::vector<int>>> below;  // node -> ids
  };
  std::vector<NodePlan> plans(mults.size());
  std::vector<PosetGraph> graphs(mults.size());
  Sink prep;
  sharded(static_cast<long long>(mults.size()), opts.parallel, prep,
          [&](long long idx, Sink&) {
            const Multisegment& nmult = mults[idx];
            PosetGraph g = lower_set_serial(nmult);
            NodePlan plan;
            auto distinct_ids = [&](const Multisegment& node) {
              std::vector<int> ids;
              for (const auto& s : node.entries()) {
                int id = seg_id(s);
                if (std::find(ids.begin(), ids.end(), id) == ids.end()) ids.push_back(id);
              }
              return ids;
            };
            plan.own = distinct_ids(g.nodes[0]);
            for (std::size_t k = 1; k < g.nodes.size(); ++k)
              plan.below.emplace_back(k, distinct_ids(g.nodes[k]));
            plans[idx] = std::move(plan);
            graphs[idx] = std::move(g);
          });

  sharded(static_cast<long long>(mults.size()), opts.parallel, sink,
          [&](long long mi, Sink& local) {
            const Multisegment& m = mults[mi];
            std::vector<char> ok(pool.size());
            for (std::size_t si = 0; si < pool.size(); ++si)
              ok[si] = is_irreducible_product(m, pool[si]) ? 1 : 0;
            bool flagged = false;  // one minimized repro per m keeps corrupted runs bounded
            for (std::size_t ni = 0; ni < mults.size(); ++ni) {
              ++local.checked;
              const NodePlan& plan = plans[ni];
              bool member = true;
              for (int id : plan.own) member = member && ok[id];
              if (!member) continue;
              for (const auto& [node_idx, ids] : plan.below) {
                for (int id : ids) {
                  if (ok[id] || flagged) continue;
                  flagged = true;
                  auto bad = [&](const std::vector<Multisegment>& cand) {
                    if (!membership(cand[0], cand[1]).overall) return false;
                    try {
                      return !closure_check(cand[0], cand[1]).holds;
                    } catch (const budget_error&) {
                      return false;
                    }
                  };
                  auto small = minimize({m, mults[ni]}, bad);
                  local.flag(
                      "closure violated at node " +
                          print_multisegment(graphs[ni].nodes[node_idx]) + " segment " +
                          print_segment(pool[id]),
                      {print_multisegment(small[0]), print_multisegment(small[1])});
                }
              }
            }
          });
}

// ---- poset ---------------------------------------------------------------------

void suite_poset(const Window& w, const SuiteOptions& opts, Sink& sink) {
  std::vector<Multisegment> mults = enumerate_multisegments(w);
  sharded(static_cast<long long>(mults.size()), opts.parallel, sink,
          [&](long long idx, Sink& local) {
            const Multisegment& m = mults[idx];
            ++local.checked;
            auto repro = [&] { return std::vector<std::string>{print_multisegment(m)}; };
            PosetGraph g = lower_set(m, LowerSetOptions{100000, opts.parallel});
            PosetGraph ref = lower_set_serial(m);
            if (g.nodes != ref.nodes || g.edges.size() != ref.edges.size())
              local.flag("parallel and serial lower sets differ", repro());
            long abs_len = m.total_abs_length();
            auto supp = m.support();
            std::vector<char> has_out(g.nodes.size(), 0);
            for (const auto& e : g.edges) {
              has_out[e.parent] = 1;
              if (!std::lexicographical_compare(length_vector(g.nodes[e.parent]).begin(),
                                                length_vector(g.nodes[e.parent]).end(),
                                                length_vector(g.nodes[e.child]).begin(),
                                                length_vector(g.nodes[e.child]).end()))
                local.flag("edge does not raise the length vector", repro());
            }
            for (std::size_t k = 0; k < g.nodes.size(); ++k) {
              if (g.nodes[k].total_abs_length() != abs_len)
                local.flag("absolute length not conserved", repro());
              if (g.nodes[k].support() != supp) local.flag("support not conserved", repro());
              if (!has_out[k] != g.nodes[k].generic())
                local.flag("minimal nodes are not exactly the generic ones", repro());
            }
          });
}

// ---- derive -----------------------------------------------------------------------

void suite_derive(const Window& w, const SuiteOptions& opts, Sink& sink) {
  std::vector<Segment> segs = enumerate_segments(w);
  std::vector<Multisegment> mults = enumerate_multisegments(w);

  sharded(static_cast<long long>(segs.size()), opts.parallel, sink,
          [&](long long idx, Sink& local) {
            const Segment& d = segs[idx];
            for (int i = 0; i <= d.rel_length(); ++i) {
              for (JacquetKind kind : {JacquetKind::Zelevinsky, JacquetKind::Steinberg}) {
                ++local.checked;
                auto [lhs, rhs] = jacquet_segment(kind, d, i);
                auto repro = [&] {
                  return std::vector<std::string>{print_segment(d), std::to_string(i)};
                };
                if (lhs.rel_length() != d.rel_length() - i || rhs.rel_length() != i)
                  local.flag("jacquet part sizes wrong", repro());
                Multisegment both(std::vector<Segment>{lhs, rhs});
                if (both.support() != Multisegment({d}).support())
                  local.flag("jacquet does not partition the support", repro());
              }
            }
          });

  sharded(static_cast<long long>(mults.size()), opts.parallel, sink,
          [&](long long idx, Sink& local) {
            const Multisegment& m = mults[idx];
            auto repro = [&] { return std::vector<std::string>{print_multisegment(m)}; };
            const auto& es = m.entries();

            bool same_end = !m.empty();
            for (const auto& s : es) same_end = same_end && s.b_point() == es[0].b_point();
            if (same_end) {
              for (std::size_t i = 0; i < es.size(); ++i) {
                if (i && es[i] == es[i - 1]) continue;
                ++local.checked;
                DerivativeRewrite r = rewrite_same_end_steinberg(m, es[i]);
                if (r.output.plus(r.peeled) != r.input)
                  local.flag("same-end rewrite breaks the subtraction law", repro());
              }
            }
            for (std::size_t i = 0; i < es.size(); ++i) {
              if (i && es[i] == es[i - 1]) continue;
              bool nested = true;
              for (const auto& s : es) nested = nested && es[i].contains(s);
              if (!nested) continue;
              ++local.checked;
              DerivativeRewrite r = rewrite_nested_zelevinsky(m, es[i]);
              if (r.output.plus(r.peeled) != r.input)
                local.flag("nested rewrite breaks the subtraction law", repro());
            }
            bool constant = true;
            for (const auto& s : es) constant = constant && s == es[0];
            if (constant && !m.empty()) {
              for (std::size_t k = 0; k <= es.size(); ++k) {
                ++local.checked;
                Multisegment sub(std::vector<Segment>(es.begin(), es.begin() + k));
                DerivativeRewrite r = rewrite_nested_zelevinsky(m, sub);
                if (r.output.plus(r.peeled) != r.input)
                  local.flag("multi nested rewrite breaks the subtraction law", repro());
              }
            }

            // singleton peeling chains from subsets of m, length <= 3
            std::vector<std::vector<std::size_t>> subsets{{}};
            for (std::size_t i = 0; i < es.size(); ++i) {
              std::size_t existing = subsets.size();
              for (std::size_t s = 0; s < existing; ++s) {
                if (subsets[s].size() >= 3) continue;
                auto ext = subsets[s];
                ext.push_back(i);
                subsets.push_back(std::move(ext));
              }
            }
            for (const auto& sub : subsets) {
              if (sub.empty()) continue;
              ++local.checked;
              std::vector<Multisegment> chain;
              for (std::size_t i : sub) chain.push_back(Multisegment({es[i]}));
              ComposeResult res = compose_check(m, chain);
              if (!res.ok) local.flag("compose_check failed: " + res.detail, repro());
            }

            if (m.generic()) {
              for (const auto& d : segs) {
                ++local.checked;
                Multisegment mx = mx_generic(m, d, true);
                for (const auto& s : mx.entries())
                  if (!saturated(s, d))
                    local.flag("mx output not saturated", {print_multisegment(m),
                                                           print_segment(d)});
                EtaVector eta = eta_generic(m, d);
                long total = 0;
                for (int c = d.a(); c <= d.b(); ++c) {
                  Segment sat(d.line(), c, d.b());
                  total += eta.at(sat);
                  if (static_cast<std::size_t>(eta.at(sat)) != mx.count(sat))
                    local.flag("eta disagrees with mx multiplicity",
                               {print_multisegment(m), print_segment(d)});
                }
                if (total != static_cast<long>(mx.size()))
                  local.flag("eta total disagrees with mx size",
                             {print_multisegment(m), print_segment(d)});
              }
            }
          });
}

// ---- mxmodes (advisory) -------------------------------------------------------

void suite_mxmodes(const Window& w, const SuiteOptions& opts, Sink& sink) {
  std::vector<Segment> segs = enumerate_segments(w);
  std::vector<Multisegment> mults = enumerate_multisegments(w);
  long long n = static_cast<long long>(mults.size()) * segs.size();
  sharded(n, opts.parallel, sink, [&](long long idx, Sink& local) {
    const Segment& d = segs[idx % segs.size()];
    const Multisegment& m = mults[idx / segs.size()];
    if (!m.generic()) return;
    ++local.checked;
    Multisegment filtered = mx_generic(m, d, true);
    Multisegment literal = mx_generic(m, d, false);
    if (filtered != literal)
      local.flag("mx modes diverge: filtered " + print_multisegment(filtered) + " vs literal " +
                     print_multisegment(literal),
                 {print_multisegment(m), print_segment(d)});
  });
}

struct ScopedCorruption {
  explicit ScopedCorruption(bool on) : prev_(corrupt_admissibility()) {
    set_corrupt_admissibility(on || prev_);
  }
  ~ScopedCorruption() { set_corrupt_admissibility(prev_); }
  bool prev_;
};

}  // namespace

std::vector<std::string> suite_names() {
  return {"core",   "parser",     "hall",    "duality", "witness",
          "rightmatch", "closure", "poset",   "derive",  "mxmodes"};
}

Report run_suite(const std::string& id, const Window& w, const SuiteOptions& opts) {
  using Runner = void (*)(const Window&, const SuiteOptions&, Sink&);
  static const std::map<std::string, Runner> registry = {
      {"core", suite_core},       {"parser", suite_parser},
      {"hall", suite_hall},       {"duality", suite_duality},
      {"witness", suite_witness}, {"rightmatch", suite_rightmatch},
      {"closure", suite_closure}, {"poset", suite_poset},
      {"derive", suite_derive},   {"mxmodes", suite_mxmodes}};
  auto it = registry.find(id);
  if (it == registry.end()) throw error("unknown suite '" + id + "'");

  Report rep;
  rep.suite = id;
  rep.window = w;
  rep.advisory = id == "mxmodes";
  Sink sink;
  auto start = std::chrono::steady_clock::now();
  {
    ScopedCorruption guard(opts.corrupt);
    it->second(w, opts, sink);
  }
  auto stop = std::chrono::steady_clock::now();
  rep.checked = sink.checked;
  std::sort(sink.violations.begin(), sink.violations.end());
  sink.violations.erase(std::unique(sink.violations.begin(), sink.violations.end()),
                        sink.violations.end());
  rep.violations = std::move(sink.violations);
  rep.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();
  return rep;
}

}  // namespace mseg
