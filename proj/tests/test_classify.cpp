#include "doctest.h"
#include "pgt/catalog.hpp"
#include "pgt/classify.hpp"

using namespace pgt;

namespace {

Subgroup full(const char* name) {
  return make_context(catalog_group(name))->full();
}

}  // namespace

TEST_CASE("solubility and nilpotency basics") {
  CHECK(is_soluble(full("S4")));
  CHECK(!is_soluble(full("A5")));
  CHECK(is_nilpotent(full("H27")));
  CHECK(!is_nilpotent(full("S3")));
}

TEST_CASE("supersolubility examples") {
  CHECK(is_supersoluble(full("S3")));
  CHECK(is_supersoluble(full("D6")));
  CHECK(!is_supersoluble(full("S4")));
  CHECK(!is_supersoluble(full("A4")));
}

TEST_CASE("supersoluble-type Sylow towers") {
  CHECK(has_sylow_tower_supersoluble(full("S3")));
  CHECK(!has_sylow_tower_supersoluble(full("S4")));
  CHECK(!has_sylow_tower_supersoluble(full("A4")));
}

TEST_CASE("minimal non-supersoluble groups") {
  CHECK(is_minimal_non_supersoluble(full("A4")));
  CHECK(is_minimal_non_supersoluble(full("SL(2,3)")));
  CHECK(!is_minimal_non_supersoluble(full("S4")));
  CHECK(!is_minimal_non_supersoluble(full("S3")));
}

TEST_CASE("Schmidt groups") {
  auto s3 = full("S3");
  auto st = schmidt_structure(s3);
  REQUIRE(st.has_value());
  CHECK(st->p == 3);
  CHECK(st->q == 2);
  CHECK(st->supersoluble);
  auto a4 = schmidt_structure(full("A4"));
  REQUIRE(a4.has_value());
  CHECK(!a4->supersoluble);
  CHECK(!schmidt_structure(full("S4")).has_value());
  CHECK(!schmidt_structure(full("C6")).has_value());
}

TEST_CASE("wU and vU membership") {
  CHECK(!in_wU(full("S4")));
  CHECK(!in_vU(full("A4")));
  CHECK(in_wU(full("S3")));
  CHECK(in_vU(full("S3")));
  // supersoluble groups lie in both classes
  for (const char* n : {"D6", "C12", "H27"}) {
    CHECK(in_wU(full(n)));
    CHECK(in_vU(full(n)));
  }
}

TEST_CASE("supersoluble residuals") {
  auto res_a4 = supersoluble_residual(SubgroupLattice::build(full("A4")));
  CHECK(res_a4.order() == 4);
  CHECK(supersoluble_residual(SubgroupLattice::build(full("S3"))).is_trivial());
  auto q8 = supersoluble_residual(SubgroupLattice::build(full("SL(2,3)")));
  CHECK(q8.order() == 8);
}

TEST_CASE("r-solubility") {
  auto l27 = full("L2(7)");
  CHECK(!is_r_soluble(l27, 2));
  CHECK(is_r_soluble(full("S4"), 2));
  CHECK(is_r_soluble(full("A5"), 7));  // 7 does not divide 60
}

TEST_CASE("simplicity of the catalog PSL groups") {
  for (const char* n : {"A5", "L2(4)", "L2(5)", "L2(7)", "L2(8)", "L2(9)",
                        "L2(11)"})
    CHECK(is_simple(full(n)));
  CHECK(!is_simple(full("S4")));
  CHECK(!is_simple(full("C6")));
  CHECK(is_simple(full("C7")));  // prime order counts as simple
}

TEST_CASE("classification report is internally consistent") {
  for (const char* n : {"S4", "A4", "S3", "SL(2,3)", "L2(7)"}) {
    auto r = classify_group(full(n), n);
    // containment chain: nilpotent => supersoluble => wU => vU => soluble
    if (r.nilpotent) CHECK(r.supersoluble);
    if (r.supersoluble) CHECK(r.in_wU);
    if (r.in_wU) CHECK(r.in_vU);
    if (r.in_vU) CHECK(r.soluble);
    if (r.supersoluble) CHECK(r.sylow_tower_supersoluble);
  }
}
