#include "doctest.h"
#include "pgt/catalog.hpp"
#include "pgt/oracles.hpp"

using namespace pgt;

namespace {

ContextPtr ctx_of(const char* name) {
  return make_context(catalog_group(name));
}

}  // namespace

TEST_CASE("S3 lattice has six nodes") {
  auto lat = SubgroupLattice::build(ctx_of("S3")->full());
  CHECK(lat.nodes().size() == 6);
}

TEST_CASE("S4 has thirty subgroups") {
  auto lat = SubgroupLattice::build(ctx_of("S4")->full());
  CHECK(lat.nodes().size() == 30);
}

TEST_CASE("lattice node count matches the pairwise-join oracle") {
  for (const auto& name : catalog_names()) {
    auto ctx = make_context(catalog_group(name));
    if (ctx->size() > 60) continue;
    auto lat = SubgroupLattice::build(ctx->full());
    CHECK(lat.nodes().size() == oracle::subgroup_count(ctx));
  }
}

TEST_CASE("lattice nodes are closed and deterministic") {
  auto ctx = ctx_of("A5");
  auto lat1 = SubgroupLattice::build(ctx->full());
  auto lat2 = SubgroupLattice::build(ctx->full());
  REQUIRE(lat1.nodes().size() == lat2.nodes().size());
  for (std::size_t i = 0; i < lat1.nodes().size(); ++i)
    CHECK(lat1.nodes()[i].members() == lat2.nodes()[i].members());
}

TEST_CASE("overgroups of C3 in A4") {
  auto a4 = ctx_of("A4");
  auto c3 = resolve_subgroup(a4, "gens:(1 2 3)");
  auto over = overgroups(a4->full(), c3);
  REQUIRE(over.size() == 2);
  CHECK(over[0].order() == 3);
  CHECK(over[1].order() == 12);
}

TEST_CASE("hall subgroups") {
  auto a5 = SubgroupLattice::build(ctx_of("A5")->full());
  CHECK(hall_subgroups(a5, PrimeSet({3, 5})).empty());
  auto s3 = SubgroupLattice::build(ctx_of("S3")->full());
  CHECK(hall_subgroups(s3, PrimeSet({3})).size() == 1);
}

TEST_CASE("frattini subgroups") {
  CHECK(frattini(SubgroupLattice::build(ctx_of("S4")->full())).is_trivial());
  CHECK(frattini(SubgroupLattice::build(ctx_of("C4")->full())).order() == 2);
}

TEST_CASE("lattice budgets are enforced with named errors") {
  auto big = make_context(catalog_group("S5"),
                          Budgets{.lattice_max_order = 100});
  CHECK_THROWS_AS(SubgroupLattice::build(big->full()), resource_error);
  try {
    SubgroupLattice::build(big->full());
  } catch (const resource_error& e) {
    CHECK(e.budget() == "lattice_max_order");
  }
}

TEST_CASE("cover edges connect only nested nodes") {
  auto lat = SubgroupLattice::build(ctx_of("S4")->full());
  for (auto [a, b] : lat.cover_edges()) {
    CHECK(lat.nodes()[a].members().is_subset_of(lat.nodes()[b].members()));
    CHECK(lat.nodes()[a].order() < lat.nodes()[b].order());
  }
}
