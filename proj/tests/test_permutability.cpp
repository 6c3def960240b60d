#include "doctest.h"
#include "pgt/catalog.hpp"
#include "pgt/oracles.hpp"
#include "pgt/permutability.hpp"

using namespace pgt;

namespace {

ContextPtr ctx_of(const char* name) {
  return make_context(catalog_group(name));
}

}  // namespace

TEST_CASE("permutizer examples in A4") {
  auto a4 = ctx_of("A4");
  auto g = a4->full();
  auto c2 = resolve_subgroup(a4, "gens:(1 2)(3 4)");
  CHECK(permutizer(g, c2).permutizer.order() == 4);  // the Klein four-group
  auto c3 = resolve_subgroup(a4, "gens:(1 2 3)");
  auto p = permutizer(g, c3).permutizer;
  CHECK(p.members() == c3.members());
  CHECK(p.members() == normalizer(g, c3).members());
}

TEST_CASE("permutizer of the whole group is the whole group") {
  auto g = ctx_of("S4")->full();
  CHECK(permutizer(g, g).permutizer.members() == g.members());
}

TEST_CASE("permutizer contains the normalizer") {
  for (const char* name : {"S4", "A5", "D6", "SL(2,3)", "H27"}) {
    auto ctx = ctx_of(name);
    auto g = ctx->full();
    for (const auto& cs : ctx->cyclic_subgroups()) {
      Subgroup h(ctx, cs.members);
      auto p = permutizer(g, h).permutizer;
      CHECK(normalizer(g, h).members().is_subset_of(p.members()));
      CHECK(h.members().is_subset_of(p.members()));
    }
  }
}

TEST_CASE("permutability examples") {
  auto s4 = ctx_of("S4")->full();
  CHECK(is_permutable(s4, sylow_subgroup(s4, 2)));
  auto a5 = ctx_of("A5")->full();
  CHECK(!is_permutable(a5, sylow_subgroup(a5, 2)));
}

TEST_CASE("strong permutability reports the smallest failing overgroup") {
  auto l211 = ctx_of("L2(11)")->full();
  auto v = is_strongly_permutable(l211, sylow_subgroup(l211, 2));
  CHECK(!v.holds);
  REQUIRE(v.failing_overgroup.has_value());
  CHECK(v.failing_overgroup->order() == 60);
}

TEST_CASE("strong permutability holds for S3 and S4 Sylow 2") {
  for (const char* name : {"S3", "S4"}) {
    auto g = ctx_of(name)->full();
    CHECK(is_strongly_permutable(g, sylow_subgroup(g, 2)).holds);
  }
}

TEST_CASE("quasinormal is strictly stronger than strongly permutable") {
  auto s4 = ctx_of("S4");
  auto lat = SubgroupLattice::build(s4->full());
  auto syl2 = sylow_subgroup(s4->full(), 2);
  CHECK(is_strongly_permutable(s4->full(), syl2).holds);
  CHECK(!is_quasinormal(lat, syl2));
  // normal subgroups are quasinormal
  CHECK(is_quasinormal(lat, p_core(s4->full(), 2)));
}

TEST_CASE("permutizer agrees with the all-elements oracle on small groups") {
  for (const auto& name : catalog_names()) {
    auto ctx = make_context(catalog_group(name));
    if (ctx->size() > 60) continue;
    auto g = ctx->full();
    for (const auto& cs : ctx->cyclic_subgroups()) {
      Subgroup h(ctx, cs.members);
      CHECK(permutizer(g, h).permutizer.members() ==
            oracle::permutizer(g, h).members());
    }
  }
}

TEST_CASE("permutes_with is symmetric") {
  auto s4 = ctx_of("S4");
  auto lat = SubgroupLattice::build(s4->full());
  for (const auto& a : lat.nodes())
    for (const auto& b : lat.nodes())
      CHECK(permutes_with(a, b) == permutes_with(b, a));
}
