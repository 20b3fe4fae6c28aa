#include "doctest.h"
#include "helpers.hpp"
#include "mseg/core.hpp"

using namespace mseg;
using t::M;
using t::S;

TEST_CASE("segment construction and the empty sentinel") {
  CHECK_THROWS_AS(Segment(Line::standard(), 2, 0), error);
  CHECK(Segment::empty().is_empty());
  CHECK(Segment::empty().rel_length() == 0);
  CHECK(Multisegment({Segment::empty(), S("[0]")}) == M("[0]"));
}

TEST_CASE("segment relation variants") {
  CHECK(relation(S("[0,1]"), S("[1,2]")) == SegmentRelation::LinkedBefore);
  CHECK(relation(S("[1,1]"), S("[1,5]")) == SegmentRelation::ContainedIn);
  CHECK(relation(S("[1,5]"), S("[1,1]")) == SegmentRelation::Contains);
  CHECK(relation(S("[0,0]"), S("[2,3]")) == SegmentRelation::UnlinkedDisjoint);
  CHECK(relation(S("[0,1]"), S("[0,1]")) == SegmentRelation::Equal);

  Line q{"q", 1, "q", 1};
  CHECK(relation(S("[0,1]"), Segment(q, 0, 1)) == SegmentRelation::DifferentLine);
}

TEST_CASE("linked precedence implies both endpoints grow") {
  CHECK(precedes(S("[0,1]"), S("[1,2]")));
  CHECK_FALSE(precedes(S("[1,2]"), S("[0,1]")));
  CHECK(relation(S("[1,2]"), S("[0,1]")) == SegmentRelation::LinkedAfter);
  // juxtaposed pairs are linked
  CHECK(precedes(S("[0]"), S("[1,2]")));
}

TEST_CASE("union and intersection of linked pairs") {
  auto [u1, i1] = union_intersection(S("[0,1]"), S("[1,2]"));
  CHECK(u1 == S("[0,2]"));
  CHECK(i1 == S("[1]"));
  auto [u2, i2] = union_intersection(S("[0,1]"), S("[2,3]"));
  CHECK(u2 == S("[0,3]"));
  CHECK(i2.is_empty());
  CHECK_THROWS_AS(union_intersection(S("[0,0]"), S("[0,1]")), error);
}

TEST_CASE("shift is a plain translation") {
  CHECK(S("[1,5]").shift_left() == S("[0,4]"));
  CHECK(S("[0]").shift_left() == Segment(Line::standard(), -1, -1));
  Line rho{"rho", 2, "rho", 2};
  CHECK(Segment(rho, 3, 4).shift_left() == Segment(rho, 2, 3));
}

TEST_CASE("duals negate and swap endpoints on the dual line") {
  Line rho{"rho", 1, "rhov", 1};
  Line rhov{"rhov", 1, "rho", 1};
  Segment d(rho, 0, 2);
  CHECK(d.dual() == Segment(rhov, -2, 0));
  CHECK(d.dual().dual() == d);

  Multisegment m = M("[0]+[1,5]");
  CHECK(m.dual().dual() == m);
  Multisegment pair = M("[0,1]+[1,2]");
  CHECK(pair.dual() == Multisegment({Segment(Line::standard(), -1, 0),
                                     Segment(Line::standard(), -2, -1)}));
}

TEST_CASE("relative and absolute lengths") {
  Line rho{"rho", 2, "rho", 2};
  Segment d(rho, 0, 2);
  CHECK(d.rel_length() == 3);
  CHECK(d.abs_length() == 6);
  CHECK(Multisegment().total_rel_length() == 0);
  CHECK(Multisegment().total_abs_length() == 0);
  CHECK(M("[0]+[1,5]").total_abs_length() == 6);
}

TEST_CASE("juxtaposed means end-to-start") {
  CHECK(juxtaposed(S("[0,1]"), S("[2,3]")));
  CHECK(juxtaposed(S("[2,3]"), S("[0,1]")));
  CHECK_FALSE(juxtaposed(S("[0,1]"), S("[1,2]")));
  Line q{"q", 1, "q", 1};
  CHECK_FALSE(juxtaposed(S("[0,1]"), Segment(q, 2, 3)));
}

TEST_CASE("saturation pins the right end") {
  CHECK(saturated(S("[2,4]"), S("[1,4]")));
  CHECK_FALSE(saturated(S("[1,3]"), S("[1,4]")));
  CHECK_FALSE(saturated(S("[0,4]"), S("[1,4]")));
}

TEST_CASE("multiset algebra") {
  Multisegment m = M("[0,1]+[-1,0]+[0]+[-1,1]");
  CHECK(m.minus(M("[0]")) == M("[0,1]+[-1,0]+[-1,1]"));
  CHECK_THROWS_WITH_AS(static_cast<void>(m.minus(M("[7]"))),
                       "multiset subtraction underflow at segment [7]", error);
  CHECK_FALSE(M("[0]+[1,5]").generic());
  CHECK(M("[0]+[2,3]").generic());
  CHECK(M("[0,2]+[1,2]+[0]").slice_b(CuspidalPoint{Line::standard(), 2}) == M("[0,2]+[1,2]"));
  CHECK(M("[2,4]+[3,4]").saturated(S("[1,4]")));
  CHECK_FALSE(M("[2,4]+[1,3]").saturated(S("[1,4]")));
  CHECK(m.plus(M("[0]")).count(S("[0]")) == 2);
}

TEST_CASE("b and a dominance orders") {
  CHECK(leq_b(S("[0,2]"), S("[1,2]")));
  CHECK_FALSE(leq_b(S("[0,2]"), S("[0,1]")));
  CHECK(leq_b(S("[0,2]"), S("[0,2]")));
  CHECK(leq_a(S("[1,3]"), S("[1,5]")));
  CHECK(leq_a(S("[1,3]"), S("[1,3]")));
  CHECK_FALSE(leq_a(S("[1,3]"), S("[0,5]")));
}

TEST_CASE("labeling never lets the right end rise") {
  auto lab = M("[0,1]+[1,2]").labeling();
  REQUIRE(lab.size() == 2);
  CHECK(lab[0] == S("[1,2]"));
  CHECK(lab[1] == S("[0,1]"));

  auto dup = M("[0]+[0]").labeling();
  CHECK(dup == std::vector<Segment>{S("[0]"), S("[0]")});

  // two lines: only same-line neighbours are constrained
  Line q{"q", 1, "q", 1};
  Multisegment mixed({S("[0,3]"), Segment(q, 0, 1), Segment(q, 1, 2), S("[2,2]")});
  auto lab2 = mixed.labeling();
  for (std::size_t i = 0; i + 1 < lab2.size(); ++i)
    CHECK_FALSE(lab2[i].b_point().before(lab2[i + 1].b_point()));
  CHECK(Multisegment(lab2) == mixed);
}

TEST_CASE("support is a point multiset") {
  auto supp = M("[0,1]+[1]").support();
  REQUIRE(supp.size() == 3);
  CHECK(supp[0] == CuspidalPoint{Line::standard(), 0});
  CHECK(supp[1] == CuspidalPoint{Line::standard(), 1});
  CHECK(supp[2] == CuspidalPoint{Line::standard(), 1});
}

TEST_CASE("derivative-chain fixtures stay consistent under the algebra") {
  // the four-segment example and the multisegments its peelings produce
  Multisegment m = M("[0,1]+[-1,0]+[0]+[-1,1]");
  Multisegment n1 = M("[0,1]+[-1,0]+[-1,1]");
  Multisegment n2 = M("[0,1]+[-1]+[0]+[-1,1]");
  CHECK(m.minus(M("[0]")) == n1);
  CHECK(m.minus(M("[-1,0]")).plus(M("[-1]")) == n2);
  CHECK(n1.total_abs_length() == m.total_abs_length() - 1);
  CHECK(n2.total_abs_length() == m.total_abs_length() - 1);

  Multisegment m3 = M("[0,1]+[-1,0]+[-1,0]");
  CHECK(m.minus(M("[0]+[-1,1]")).plus(M("[-1,0]")) == m3);
  CHECK(m3.count(S("[-1,0]")) == 2);
}
