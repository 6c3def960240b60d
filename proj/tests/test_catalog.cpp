#include "doctest.h"
#include "pgt/catalog.hpp"
#include "pgt/gf.hpp"

using namespace pgt;

TEST_CASE("catalog is deterministic") {
  for (const auto& name : catalog_names()) {
    PermGroup a = catalog_group(name);
    PermGroup b = catalog_group(name);
    CHECK(a.degree() == b.degree());
    CHECK(a.generators().size() == b.generators().size());
    for (std::size_t i = 0; i < a.generators().size(); ++i)
      CHECK(a.generators()[i] == b.generators()[i]);
  }
}

TEST_CASE("unknown catalog names report the known list") {
  try {
    catalog_group("M11");
    CHECK(false);
  } catch (const error& e) {
    std::string msg = e.what();
    CHECK(msg.find("M11") != std::string::npos);
    CHECK(msg.find("S4") != std::string::npos);
    CHECK(msg.find("L2(11)") != std::string::npos);
  }
}

TEST_CASE("psl2 orders follow q(q-1)(q+1)/gcd(2,q-1)") {
  for (int q : {4, 5, 7, 8, 9, 11}) {
    std::uint64_t expected =
        std::uint64_t(q) * (q - 1) * (q + 1) / std::gcd(2, q - 1);
    CHECK(psl2(q).order() == expected);
  }
}

TEST_CASE("finite field arithmetic sanity") {
  // GF(8): multiplicative group is cyclic of order 7
  GaloisField f(8);
  int g = f.primitive_element();
  int x = g;
  int steps = 1;
  while (x != 1) {
    x = f.mul(x, g);
    ++steps;
  }
  CHECK(steps == 7);
  // GF(9): Frobenius x -> x^3 is additive
  GaloisField f9(9);
  for (int a = 0; a < 9; ++a)
    for (int b = 0; b < 9; ++b)
      CHECK(f9.pow(f9.add(a, b), 3) ==
            f9.add(f9.pow(a, 3), f9.pow(b, 3)));
}

TEST_CASE("group files parse and round-trip") {
  PermGroup g = parse_group_file("degree: 3\ngens: (1 2 3), (1 2)\n");
  CHECK(g.order() == 6);  // S3
  PermGroup h = parse_group_file(print_group_file("s3", g));
  CHECK(h.order() == 6);
  // comments and multi-line generator lists
  PermGroup k = parse_group_file(
      "name: klein  # a comment\ndegree: 4\ngens:\n(1 2)(3 4)\n(1 3)(2 4)\n");
  CHECK(k.order() == 4);
}

TEST_CASE("group file errors carry line numbers") {
  CHECK_THROWS_AS(parse_group_file("gens: (1 2)\n"), parse_error);
  try {
    parse_group_file("degree: 3\ngens:\n(1 2)\n(1 4)\n");
    CHECK(false);
  } catch (const parse_error& e) {
    CHECK(e.line() == 4);
  }
  try {
    parse_group_file("degree: x\n");
    CHECK(false);
  } catch (const parse_error& e) {
    CHECK(e.line() == 1);
  }
}

TEST_CASE("subgroup specifiers resolve") {
  auto ctx = make_context(catalog_group("S4"));
  CHECK(resolve_subgroup(ctx, "sylow:2").order() == 8);
  CHECK(resolve_subgroup(ctx, "sylow:5").is_trivial());
  CHECK(resolve_subgroup(ctx, "cyclic:(1 2 3 4)").order() == 4);
  CHECK(resolve_subgroup(ctx, "gens:(1 2);(3 4)").order() == 4);
  CHECK(resolve_subgroup(ctx, "hall:2,3").order() == 24);
  CHECK_THROWS_AS(resolve_subgroup(ctx, "cyclic:(1 2 3 4 5)"), error);
  auto a5 = make_context(catalog_group("A5"));
  CHECK_THROWS_AS(resolve_subgroup(a5, "hall:3,5"), error);
}

TEST_CASE("dihedral groups act on n points with the reflection fixing 1") {
  for (int n = 3; n <= 12; ++n) {
    PermGroup d = catalog_group("D" + std::to_string(n));
    CHECK(d.degree() == n);
    CHECK(d.order() == std::uint64_t(2 * n));
  }
}
