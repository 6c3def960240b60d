#include "doctest.h"
#include "pgt/catalog.hpp"

using namespace pgt;

TEST_CASE("permutation composition is left-to-right") {
  Permutation a = parse_cycles("(1 2)", 3);
  Permutation b = parse_cycles("(2 3)", 3);
  // apply a first, then b: 1 -> 2 -> 3
  CHECK(compose(a, b).apply(0) == 2);
  CHECK(compose(a, b.inverse()).is_identity() == false);
  CHECK(compose(a, a).is_identity());
}

TEST_CASE("conjugation moves fixed points as expected") {
  Permutation g = parse_cycles("(1 2)", 4);
  Permutation h = parse_cycles("(1 3)", 4);
  // g^h = h^-1 g h maps the support of g through h
  CHECK(cycle_string(conjugate(g, h)) == "(2 3)");
}

TEST_CASE("cycle parsing round-trips") {
  for (const char* s : {"(1 2)", "(1 2 3)", "(1 2)(3 4)", "()"}) {
    Permutation p = parse_cycles(s, 4);
    CHECK(parse_cycles(cycle_string(p), 4) == p);
  }
}

TEST_CASE("cycle parsing reports position of errors") {
  CHECK_THROWS_AS(parse_cycles("(1 2", 4), parse_error);
  CHECK_THROWS_AS(parse_cycles("(1 5)", 4), parse_error);
  CHECK_THROWS_AS(parse_cycles("(1 2)(2 3)", 4), parse_error);
  CHECK_THROWS_AS(parse_cycles("", 4), parse_error);
  try {
    parse_cycles("(1 9)", 4, 3, 0);
    CHECK(false);
  } catch (const parse_error& e) {
    CHECK(e.line() == 3);
    CHECK(std::string(e.what()).find("9") != std::string::npos);
  }
}

TEST_CASE("group orders match the classical formulas") {
  CHECK(symmetric(4).order() == 24);
  CHECK(symmetric(7).order() == 5040);
  CHECK(alternating(5).order() == 60);
  CHECK(alternating(6).order() == 360);
  CHECK(dihedral(6).order() == 12);
  CHECK(cyclic(30).order() == 30);
  CHECK(psl2(7).order() == 168);
  CHECK(psl2(8).order() == 504);
  CHECK(psl2(9).order() == 360);
  CHECK(psl2(11).order() == 660);
  CHECK(heisenberg(3).order() == 27);
  CHECK(heisenberg(5).order() == 125);
  CHECK(sl2_3().order() == 24);
}

TEST_CASE("membership agrees with full enumeration") {
  for (const auto& name : catalog_names()) {
    PermGroup g = catalog_group(name);
    if (g.order() > 1000) continue;
    auto elems = g.elements(100000);
    CHECK(elems.size() == g.order());
    for (const auto& e : elems) CHECK(g.contains(e));
    // a permutation outside the group is rejected
    if (name == "A5") CHECK(!g.contains(parse_cycles("(1 2)", g.degree())));
  }
}

TEST_CASE("regenerating a group from its elements is stable") {
  for (const char* name : {"S4", "A5", "D6", "SL(2,3)"}) {
    PermGroup g = catalog_group(name);
    PermGroup h(g.degree(), g.elements(100000));
    CHECK(h.order() == g.order());
    for (const auto& e : g.elements(100000)) CHECK(h.contains(e));
  }
}

TEST_CASE("elements respects the enumeration budget") {
  CHECK_THROWS_AS(symmetric(7).elements(100), resource_error);
  try {
    symmetric(7).elements(100);
  } catch (const resource_error& e) {
    CHECK(e.budget() == "enumeration_limit");
  }
}
