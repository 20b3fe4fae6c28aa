#pragma once
// Intersection-union moves and the Zelevinsky order.
//
// A move replaces a linked pair by its union plus, when nonempty, its
// intersection. lower_set(m) is the breadth-first closure of moves from m;
// membership of n in lower_set(m) is exactly n <=_Z m. Each move strictly
// raises the sorted-descending relative-length vector lexicographically, so
// the process terminates and the graph is acyclic.

#include <cstddef>
#include <string>
#include <vector>

#include "json.hpp"
#include "mseg/core.hpp"

namespace mseg {

struct IuMove {
  Segment lhs, rhs;  // the linked pair consumed, lhs linked-before rhs
  Multisegment result;
};

// One entry per distinct linked value pair, deduplicated by result.
std::vector<IuMove> iu_moves(const Multisegment& m);

struct PosetEdge {
  std::size_t parent, child;
  Segment lhs, rhs;
};

struct PosetGraph {
  std::vector<Multisegment> nodes;  // nodes[0] is the root
  std::vector<PosetEdge> edges;
};

struct LowerSetOptions {
  std::size_t node_budget = 100000;
  bool parallel = true;  // level-synchronous expansion, schedule independent
};

PosetGraph lower_set(const Multisegment& m, const LowerSetOptions& opts = {});
// plain queue-driven reference; produces the identical graph
PosetGraph lower_set_serial(const Multisegment& m, std::size_t node_budget = 100000);

bool leq_z(const Multisegment& m1, const Multisegment& m2, std::size_t node_budget = 100000);

// sorted-descending relative lengths; strictly lex-increases along edges
std::vector<int> length_vector(const Multisegment& m);

std::string to_dot(const PosetGraph& g);
nlohmann::json poset_to_json(const PosetGraph& g);

}  // namespace mseg
