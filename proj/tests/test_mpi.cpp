#include "doctest.h"
#include "helpers.hpp"
#include "mseg/mpi.hpp"
#include "mseg/oracle.hpp"

using namespace mseg;
using t::M;
using t::S;

TEST_CASE("membership reports") {
  MembershipReport r1 = membership(M("[0,1]"), M("[-1,1]+[0,2]"));
  CHECK(r1.overall);
  REQUIRE(r1.verdicts.size() == 2);
  for (const auto& v : r1.verdicts) CHECK(v.in_m());

  MembershipReport r2 = membership(M("[0]+[1,5]"), M("[1]"));
  CHECK_FALSE(r2.overall);
  REQUIRE(r2.verdicts.size() == 1);
  CHECK_FALSE(r2.verdicts[0].lc);

  CHECK(membership(M("[0]+[1,5]"), Multisegment()).overall);

  // distinct segments only, one verdict per value
  CHECK(membership(M("[0,1]"), M("[3]+[3]")).verdicts.size() == 1);
}

TEST_CASE("closure check on the worked fixture") {
  ClosureVerdict v = closure_check(M("[0,1]"), M("[-1,1]+[0,2]"));
  CHECK(v.holds);
  CHECK(v.nodes_checked == 1);  // the lower set adds [-1,2]+[0,1]

  ClosureVerdict triv = closure_check(M("[0,1]"), M("[3]+[5]"));
  CHECK(triv.holds);
  CHECK(triv.nodes_checked == 0);

  CHECK_THROWS_AS(closure_check(M("[0]+[1,5]"), M("[1]")), error);
}

TEST_CASE("membership is dual invariant on a small window") {
  Window w;
  w.hi = 2;
  w.max_segments = 2;
  w.max_len = 3;
  auto mults = enumerate_multisegments(w);
  for (const auto& m : mults)
    for (const auto& n : mults)
      CHECK(membership(m, n).overall == membership(m.dual(), n.dual()).overall);
}

TEST_CASE("unlinked tempered shortcut") {
  CHECK(fastpath_unlinked_tempered(M("[0]+[2,3]"), M("[5,6]")));
  CHECK_FALSE(fastpath_unlinked_tempered(M("[0]"), M("[1,2]")));
  CHECK(fastpath_unlinked_tempered(M("[0]+[2,3]"), Multisegment()));
  CHECK_THROWS_AS(fastpath_unlinked_tempered(M("[0,1]+[1,2]"), M("[5]")), error);
}

TEST_CASE("speh shortcut") {
  CHECK(is_ladder(M("[0,1]+[1,2]")));
  CHECK(is_ladder(M("[2,4]")));
  CHECK_FALSE(is_ladder(M("[0]+[0,1]")));

  CHECK_FALSE(fastpath_speh(M("[0,1]+[1,2]"), M("[3,4]")));  // [1,2] < [3,4]
  CHECK(fastpath_speh(M("[0,1]+[1,2]"), M("[1]")));          // contained, never strict
  CHECK(fastpath_speh(M("[0,1]+[1,2]"), Multisegment()));
  CHECK_THROWS_AS(fastpath_speh(M("[0]+[0,1]"), M("[5]")), error);
  CHECK_THROWS_AS(fastpath_speh(Multisegment(), M("[5]")), error);
}

TEST_CASE("json serialization") {
  nlohmann::json j = membership_to_json(membership(M("[0]+[1,5]"), M("[1]")));
  CHECK(j["overall"] == false);
  CHECK(j["verdicts"][0]["lc"] == false);
  CHECK(j["verdicts"][0]["rc"] == true);

  nlohmann::json c = closure_to_json(closure_check(M("[0,1]"), M("[-1,1]+[0,2]")));
  CHECK(c["holds"] == true);
  CHECK(c["nodes_checked"] == 1);
}
