#include "mseg/zposet.hpp"

#include <algorithm>
#include <unordered_map>

#include "mseg/notation.hpp"

#ifdef MSEG_HAVE_OPENMP
#include <omp.h>
#endif

namespace mseg {

std::vector<IuMove> iu_moves(const Multisegment& m) {
  const auto& es = m.entries();
  std::vector<IuMove> out;
  std::vector<Multisegment> seen;
  for (std::size_t i = 0; i < es.size(); ++i) {
    for (std::size_t j = i + 1; j < es.size(); ++j) {
      if (j > i + 1 && es[j] == es[j - 1]) continue;  // same value pair again
      if (!linked(es[i], es[j])) continue;
      auto [u, inter] = union_intersection(es[i], es[j]);
      Multisegment result = m.minus(es[i]).minus(es[j]).plus(u);
      if (!inter.is_empty()) result = result.plus(inter);
      if (std::find(seen.begin(), seen.end(), result) != seen.end()) continue;
      seen.push_back(result);
      bool before = precedes(es[i], es[j]);
      out.push_back(IuMove{before ? es[i] : es[j], before ? es[j] : es[i], std::move(result)});
    }
    while (i + 1 < es.size() && es[i + 1] == es[i]) ++i;  // skip duplicate lhs values
  }
  return out;
}

namespace {

PosetGraph expand(const Multisegment& root, std::size_t node_budget, bool parallel) {
  PosetGraph g;
  g.nodes.push_back(root);
  std::unordered_map<Multisegment, std::size_t, MultisegmentHash> index;
  index.emplace(root, 0);
  std::vector<std::size_t> frontier{0};
  while (!frontier.empty()) {
    std::vector<std::vector<IuMove>> moves(frontier.size());
#ifdef MSEG_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel && frontier.size() > 1)
#endif
    for (std::size_t k = 0; k < frontier.size(); ++k)
      moves[k] = iu_moves(g.nodes[frontier[k]]);
    // merge in frontier order so node ids never depend on the schedule
    std::vector<std::size_t> next;
    for (std::size_t k = 0; k < frontier.size(); ++k) {
      for (auto& mv : moves[k]) {
        auto [it, inserted] = index.emplace(mv.result, g.nodes.size());
        if (inserted) {
          if (g.nodes.size() >= node_budget)
            throw budget_error("lower set node budget exceeded (" +
                               std::to_string(node_budget) + ")");
          g.nodes.push_back(std::move(mv.result));
          next.push_back(it->second);
        }
        g.edges.push_back(PosetEdge{frontier[k], it->second, mv.lhs, mv.rhs});
      }
    }
    frontier = std::move(next);
  }
  return g;
}

}  // namespace

PosetGraph lower_set(const Multisegment& m, const LowerSetOptions& opts) {
  return expand(m, opts.node_budget, opts.parallel);
}

PosetGraph lower_set_serial(const Multisegment& m, std::size_t node_budget) {
  PosetGraph g;
  g.nodes.push_back(m);
  std::unordered_map<Multisegment, std::size_t, MultisegmentHash> index;
  index.emplace(m, 0);
  for (std::size_t head = 0; head < g.nodes.size(); ++head) {
    for (auto& mv : iu_moves(g.nodes[head])) {
      auto [it, inserted] = index.emplace(mv.result, g.nodes.size());
      if (inserted) {
        if (g.nodes.size() >= node_budget)
          throw budget_error("lower set node budget exceeded (" + std::to_string(node_budget) +
                             ")");
        g.nodes.push_back(std::move(mv.result));
      }
      g.edges.push_back(PosetEdge{head, it->second, mv.lhs, mv.rhs});
    }
  }
  return g;
}

bool leq_z(const Multisegment& m1, const Multisegment& m2, std::size_t node_budget) {
  if (m1 == m2) return true;
  // cheap pruning: moves conserve both invariants
  if (m1.total_abs_length() != m2.total_abs_length()) return false;
  if (m1.support() != m2.support()) return false;
  std::vector<Multisegment> nodes{m2};
  std::unordered_map<Multisegment, std::size_t, MultisegmentHash> index;
  index.emplace(m2, 0);
  for (std::size_t head = 0; head < nodes.size(); ++head) {
    for (auto& mv : iu_moves(nodes[head])) {
      if (mv.result == m1) return true;
      auto [it, inserted] = index.emplace(mv.result, nodes.size());
      if (inserted) {
        if (nodes.size() >= node_budget)
          throw budget_error("lower set node budget exceeded (" + std::to_string(node_budget) +
                             ")");
        nodes.push_back(std::move(mv.result));
      }
    }
  }
  return false;
}

std::vector<int> length_vector(const Multisegment& m) {
  std::vector<int> v;
  v.reserve(m.size());
  for (const auto& s : m.entries()) v.push_back(s.rel_length());
  std::sort(v.rbegin(), v.rend());
  return v;
}

std::string to_dot(const PosetGraph& g) {
  std::string out = "digraph lower_set {\n";
  for (std::size_t i = 0; i < g.nodes.size(); ++i)
    out += "  n" + std::to_string(i) + " [label=\"" + print_multisegment(g.nodes[i]) + "\"];\n";
  for (const auto& e : g.edges)
    out += "  n" + std::to_string(e.parent) + " -> n" + std::to_string(e.child) + " [label=\"" +
           print_segment(e.lhs) + " , " + print_segment(e.rhs) + "\"];\n";
  out += "}\n";
  return out;
}

nlohmann::json poset_to_json(const PosetGraph& g) {
  nlohmann::json nodes = nlohmann::json::array();
  for (const auto& n : g.nodes)
    nodes.push_back({{"text", print_multisegment(n)}, {"segments", multisegment_to_json(n)}});
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : g.edges)
    edges.push_back({{"parent", e.parent},
                     {"child", e.child},
                     {"pair", {print_segment(e.lhs), print_segment(e.rhs)}}});
  return {{"nodes", nodes}, {"edges", edges}};
}

}  // namespace mseg
