#include "doctest.h"
#include "pgt/catalog.hpp"
#include "pgt/chains.hpp"
#include "pgt/oracles.hpp"

using namespace pgt;

namespace {

ContextPtr ctx_of(const char* name) {
  return make_context(catalog_group(name));
}

}  // namespace

TEST_CASE("chain certificate for an order-2 subgroup of A4") {
  auto a4 = ctx_of("A4");
  auto g = a4->full();
  auto c2 = resolve_subgroup(a4, "gens:(1 2)(3 4)");
  auto chain = p_subnormal_chain(g, c2);
  REQUIRE(chain.has_value());
  std::vector<std::uint64_t> orders;
  for (const auto& l : chain->links) orders.push_back(l.order());
  CHECK(orders == std::vector<std::uint64_t>{2, 4, 12});  // indices 2, 3
  CHECK(validate_chain(*chain));
}

TEST_CASE("validate_chain rejects composite indices") {
  auto a4 = ctx_of("A4");
  auto c3 = resolve_subgroup(a4, "gens:(1 2 3)");
  SubnormalChain bad{{c3, a4->full()}};  // index 4
  ChainFault fault = ChainFault::none;
  CHECK(!validate_chain(bad, &fault));
  CHECK(fault == ChainFault::index_not_prime);
}

TEST_CASE("validate_chain rejects non-nested links") {
  auto a4 = ctx_of("A4");
  auto c3 = resolve_subgroup(a4, "gens:(1 2 3)");
  auto v4 = p_core(a4->full(), 2);
  SubnormalChain bad{{c3, v4}};
  ChainFault fault = ChainFault::none;
  CHECK(!validate_chain(bad, &fault));
  CHECK(fault == ChainFault::not_nested);
}

TEST_CASE("sweep of A4 fails exactly on the four C3 subgroups") {
  auto lat = SubgroupLattice::build(ctx_of("A4")->full());
  int failing = 0;
  for (const auto& [h, psn] : p_subnormal_sweep(lat)) {
    if (psn) continue;
    ++failing;
    CHECK(h.order() == 3);
  }
  CHECK(failing == 4);
}

TEST_CASE("Sylow 3 of L2(7) is not P-subnormal") {
  auto g = ctx_of("L2(7)")->full();
  CHECK(!is_p_subnormal(g, sylow_subgroup(g, 3)));
}

TEST_CASE("P-subnormality is transitive along chains") {
  auto s4 = ctx_of("S4");
  auto g = s4->full();
  auto chain = p_subnormal_chain(g, resolve_subgroup(s4, "cyclic:(1 2)"));
  REQUIRE(chain.has_value());
  // every suffix of a valid chain certifies its own head
  for (std::size_t i = 0; i + 1 < chain->links.size(); ++i)
    CHECK(is_p_subnormal(g, chain->links[i]));
}

TEST_CASE("chain verdicts agree with the exhaustive lattice oracle") {
  for (const auto& name : catalog_names()) {
    auto ctx = make_context(catalog_group(name));
    if (ctx->size() > 60) continue;
    auto g = ctx->full();
    auto lat = SubgroupLattice::build(g);
    PsnMemo memo(g);
    for (const auto& h : lat.nodes())
      CHECK(memo.verdict(h) == oracle::is_p_subnormal(lat, g, h));
  }
}

TEST_CASE("produced chains always re-validate") {
  auto ctx = ctx_of("S4");
  auto g = ctx->full();
  auto lat = SubgroupLattice::build(g);
  for (const auto& h : lat.nodes()) {
    auto chain = p_subnormal_chain(g, h);
    if (chain) {
      CHECK(validate_chain(*chain));
      CHECK(chain->links.front().members() == h.members());
      CHECK(chain->links.back().members() == g.members());
    }
  }
}
