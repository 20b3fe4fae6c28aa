#include "doctest.h"
#include "helpers.hpp"
#include "mseg/notation.hpp"

using namespace mseg;
using t::M;
using t::S;

TEST_CASE("parsing the basic grammar") {
  CHECK(M("[0]+[1,5]") == Multisegment({S("[0,0]"), S("[1,5]")}));
  CHECK(M("0") == Multisegment());
  CHECK(M("[-1,0] + [0 , 1]") == Multisegment({S("[-1,0]"), S("[0,1]")}));
  CHECK(M("[0]+[0]").count(S("[0]")) == 2);
}

TEST_CASE("parse errors carry a position") {
  LineTable table = LineTable::standard();
  CHECK_THROWS_AS(parse_multisegment("[2,0]", table), parse_error);
  CHECK_THROWS_AS(parse_multisegment("[0]+", table), parse_error);
  CHECK_THROWS_AS(parse_multisegment("[0] junk", table), parse_error);
  CHECK_THROWS_AS(parse_multisegment("[0]_nosuchline", table), parse_error);
  CHECK_THROWS_AS(parse_multisegment("", table), parse_error);
  try {
    parse_multisegment("[0]+[2,1]", table);
    FAIL("expected parse_error");
  } catch (const parse_error& e) {
    CHECK(e.position == 4);
  }
}

TEST_CASE("printing is canonical and round-trips") {
  CHECK(print_multisegment(Multisegment({S("[1,5]"), S("[0,0]")})) == "[0]+[1,5]");
  CHECK(print_multisegment(Multisegment()) == "0");

  LineTable table = LineTable::standard();
  Multisegment m = parse_multisegment("@line rho dim=2\n[3,4]_rho", table);
  CHECK(print_multisegment(m) == "[3,4]_rho");
  CHECK(parse_multisegment(print_multisegment(m), table) == m);
}

TEST_CASE("line declarations") {
  LineTable table = LineTable::standard();
  Multisegment m = parse_multisegment("@line rho dim=2 dual=sigma\n"
                                      "@line sigma dim=2 dual=rho\n"
                                      "[0,1]_rho+[2]_sigma",
                                      table);
  CHECK(m.size() == 2);
  CHECK(m.entries()[0].line().dim == 2);
  CHECK(m.entries()[0].dual().line().id == "sigma");
  CHECK(m.total_abs_length() == 6);

  // identical redeclaration is fine, conflicting is not
  CHECK_NOTHROW(parse_multisegment("@line rho dim=2 dual=sigma\n0", table));
  CHECK_THROWS_AS(parse_multisegment("@line rho dim=3 dual=sigma\n0", table), parse_error);
  // a dual must point back
  LineTable fresh = LineTable::standard();
  CHECK_THROWS_AS(parse_multisegment("@line a dual=b\n@line b dual=b\n0", fresh), parse_error);
  LineTable fresh2 = LineTable::standard();
  CHECK_THROWS_AS(parse_multisegment("@line a dual=b\n0", fresh2), parse_error);
  LineTable fresh3 = LineTable::standard();
  CHECK_THROWS_AS(parse_multisegment("@line a dim=0\n0", fresh3), parse_error);
}

TEST_CASE("json mirror") {
  Multisegment m = M("[0]+[0]+[1,5]");
  nlohmann::json j = multisegment_to_json(m);
  REQUIRE(j.size() == 2);
  CHECK(j[0]["mult"] == 2);
  CHECK(j[1]["a"] == 1);
  CHECK(j[1]["b"] == 5);
  LineTable table = LineTable::standard();
  CHECK(multisegment_from_json(j, table) == m);
}
