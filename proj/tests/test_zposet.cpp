#include "doctest.h"
#include "helpers.hpp"
#include "mseg/oracle.hpp"
#include "mseg/zposet.hpp"

using namespace mseg;
using t::M;
using t::S;

TEST_CASE("intersection-union moves") {
  auto moves = iu_moves(M("[0,1]+[1,2]"));
  REQUIRE(moves.size() == 1);
  CHECK(moves[0].lhs == S("[0,1]"));
  CHECK(moves[0].rhs == S("[1,2]"));
  CHECK(moves[0].result == M("[0,2]+[1]"));

  CHECK(iu_moves(M("[0]+[2,3]")).empty());  // generic
  CHECK(iu_moves(Multisegment()).empty());

  auto jux = iu_moves(M("[0]+[1,2]"));
  REQUIRE(jux.size() == 1);
  CHECK(jux[0].result == M("[0,2]"));  // empty intersection dropped

  // multiplicity: two copies of a linked pair still give one move per result
  auto dup = iu_moves(M("[0,1]+[0,1]+[1,2]"));
  REQUIRE(dup.size() == 1);
  CHECK(dup[0].result == M("[0,1]+[0,2]+[1]"));
}

TEST_CASE("lower sets") {
  PosetGraph g = lower_set(M("[0,1]+[1,2]"));
  REQUIRE(g.nodes.size() == 2);
  CHECK(g.nodes[0] == M("[0,1]+[1,2]"));
  CHECK(g.nodes[1] == M("[0,2]+[1]"));
  REQUIRE(g.edges.size() == 1);
  CHECK(g.edges[0].parent == 0);
  CHECK(g.edges[0].child == 1);

  CHECK(lower_set(M("[0]+[2,3]")).nodes.size() == 1);
  CHECK(lower_set(Multisegment()).nodes.size() == 1);
}

TEST_CASE("zelevinsky order") {
  CHECK(leq_z(M("[0,2]+[1]"), M("[0,1]+[1,2]")));
  CHECK_FALSE(leq_z(M("[0,1]+[1,2]"), M("[0,2]+[1]")));
  CHECK(leq_z(M("[0,1]"), M("[0,1]")));
  CHECK_FALSE(leq_z(M("[0,1]"), M("[0,2]")));  // support differs
}

TEST_CASE("node budget") {
  LowerSetOptions opts;
  opts.node_budget = 1;
  CHECK_THROWS_AS(lower_set(M("[0,1]+[1,2]"), opts), budget_error);
}

TEST_CASE("parallel expansion matches the serial reference") {
  Window w;
  w.hi = 3;
  w.max_segments = 3;
  w.max_len = 4;
  for (const auto& m : enumerate_multisegments(w)) {
    PosetGraph a = lower_set(m, LowerSetOptions{100000, true});
    PosetGraph b = lower_set_serial(m);
    REQUIRE(a.nodes == b.nodes);
    REQUIRE(a.edges.size() == b.edges.size());
    for (std::size_t i = 0; i < a.edges.size(); ++i) {
      CHECK(a.edges[i].parent == b.edges[i].parent);
      CHECK(a.edges[i].child == b.edges[i].child);
    }
  }
}

TEST_CASE("length vectors strictly rise along moves") {
  Multisegment m = M("[0,2]+[1,3]+[2,4]");
  for (const auto& mv : iu_moves(m)) {
    auto parent = length_vector(m);
    auto child = length_vector(mv.result);
    CHECK(std::lexicographical_compare(parent.begin(), parent.end(), child.begin(),
                                       child.end()));
  }
}

TEST_CASE("graph emission") {
  PosetGraph g = lower_set(M("[0,1]+[1,2]"));
  std::string dot = to_dot(g);
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("[0,1]+[1,2]") != std::string::npos);
  nlohmann::json j = poset_to_json(g);
  CHECK(j["nodes"].size() == 2);
  CHECK(j["edges"].size() == 1);
  CHECK(j["edges"][0]["parent"] == 0);
}
