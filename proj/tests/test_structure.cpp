#include "doctest.h"
#include "pgt/catalog.hpp"
#include "pgt/classify.hpp"
#include "pgt/isomorphism.hpp"

using namespace pgt;

namespace {

ContextPtr ctx_of(const char* name) {
  return make_context(catalog_group(name));
}

Subgroup by_gens(const ContextPtr& ctx, const std::string& gens) {
  return resolve_subgroup(ctx, "gens:" + gens);
}

}  // namespace

TEST_CASE("normalizer examples") {
  auto a4 = ctx_of("A4");
  CHECK(normalizer(a4->full(), by_gens(a4, "(1 2 3)")).order() == 3);
  auto s4 = ctx_of("S4");
  auto syl2 = sylow_subgroup(s4->full(), 2);
  CHECK(normalizer(s4->full(), syl2).members() == syl2.members());
}

TEST_CASE("center examples") {
  CHECK(center(ctx_of("S4")->full()).is_trivial());
  CHECK(center(ctx_of("H27")->full()).order() == 3);
}

TEST_CASE("derived series of S4") {
  auto series = derived_series(ctx_of("S4")->full());
  std::vector<std::uint64_t> orders;
  for (const auto& s : series) orders.push_back(s.order());
  CHECK(orders == std::vector<std::uint64_t>{24, 12, 4, 1});
}

TEST_CASE("p-core examples") {
  auto s4 = ctx_of("S4")->full();
  auto o2 = p_core(s4, 2);
  CHECK(o2.order() == 4);
  CHECK(is_normal(s4, o2));
  CHECK(p_core(ctx_of("L2(7)")->full(), 2).is_trivial());
}

TEST_CASE("fitting subgroup of S4 is the Klein four-group") {
  auto s4 = ctx_of("S4")->full();
  auto f = fitting(s4);
  CHECK(f.order() == 4);
  CHECK(is_nilpotent(f));
  CHECK(f.members() == p_core(s4, 2).members());
}

TEST_CASE("sylow subgroups have the full prime power order") {
  auto s4 = ctx_of("S4")->full();
  CHECK(sylow_subgroup(s4, 2).order() == 8);
  CHECK(sylow_subgroup(s4, 3).order() == 3);
  CHECK(sylow_subgroup(s4, 5).is_trivial());  // 5 does not divide 24
  auto l27 = ctx_of("L2(7)")->full();
  CHECK(sylow_subgroup(l27, 7).order() == 7);
}

TEST_CASE("quotient of S4 by the Klein four-group is S3") {
  auto s4 = ctx_of("S4")->full();
  auto q = quotient(s4, p_core(s4, 2));
  CHECK(q.image_full().order() == 6);
  CHECK(isomorphic(q.image_full(), ctx_of("S3")->full()));
}

TEST_CASE("exponent of the Heisenberg groups is p") {
  CHECK(exponent(ctx_of("H27")->full()) == 3);
  CHECK(exponent(ctx_of("H125")->full()) == 5);
}

TEST_CASE("elem order and index helpers") {
  auto s4 = ctx_of("S4")->full();
  CHECK(index(s4, sylow_subgroup(s4, 2)) == 3);
  CHECK(prime_set(s4).primes() == std::vector<int>{2, 3});
}
