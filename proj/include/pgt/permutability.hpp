#pragma once

#include <optional>
#include <vector>

#include "pgt/lattice.hpp"

namespace pgt {

// HK = KH decided by literal element-set equality. The two product sets
// have equal size by the product formula, but both inclusions are compared
// anyway.
inline bool permutes_with(const Subgroup& h, const Subgroup& k) {
  if (h.ctx() != k.ctx()) throw error("permutes_with: ambient mismatch");
  const auto& ctx = *h.ctx();
  Bitset hk = product_bitset(ctx, h.members(), k.members());
  Bitset kh = product_bitset(ctx, k.members(), h.members());
  return hk == kh;
}

// P_U(H) together with the cyclic witnesses that produced it.
struct PermutizerReport {
  Subgroup ambient;     // U
  Subgroup target;      // H
  Subgroup permutizer;  // P_U(H)
  // One canonical generator per distinct cyclic subgroup <x> of U with
  // <x>H = H<x>.
  std::vector<int> witnesses;
};

// P_U(H) = <x in U | <x>H = H<x>>. Iterates one generator per distinct
// cyclic subgroup of U; <x> determines the product set, so this is
// equivalent to ranging over all elements.
inline PermutizerReport permutizer(const Subgroup& u, const Subgroup& h) {
  require_nested(u, h, "permutizer");
  const auto& ctx = *u.ctx();
  std::vector<int> witnesses;
  std::vector<int> seeds = h.generator_indices();
  for (const auto& cs : ctx.cyclic_subgroups()) {
    if (!cs.members.is_subset_of(u.members())) continue;
    bool witness;
    if (cs.members.is_subset_of(h.members())) {
      witness = true;  // elements of H always permute with H
    } else {
      Bitset xh = product_bitset(ctx, cs.members, h.members());
      Bitset hx = product_bitset(ctx, h.members(), cs.members);
      witness = (xh == hx);
    }
    if (witness) {
      witnesses.push_back(cs.gen);
      if (!cs.members.is_subset_of(h.members())) seeds.push_back(cs.gen);
    }
  }
  PermutizerReport rep{u, h, subgroup_generated(u.ctx(), seeds),
                       std::move(witnesses)};
  return rep;
}

// Permutable in the sense P_G(H) = G. (Distinct from the classical usage
// "permutable = quasinormal"; that notion is exposed as is_quasinormal.)
inline bool is_permutable(const Subgroup& g, const Subgroup& h) {
  return permutizer(g, h).permutizer.order() == g.order();
}

struct StrongPermVerdict {
  bool holds = false;
  std::optional<Subgroup> failing_overgroup;  // smallest U with P_U(H) != U
  std::size_t checked_overgroups = 0;
};

// P_U(H) = U for every H <= U <= G. Overgroups are checked in increasing
// order of |U| so a failure report names a minimal-order counterexample.
inline StrongPermVerdict is_strongly_permutable(const Subgroup& g,
                                                const Subgroup& h) {
  require_nested(g, h, "is_strongly_permutable");
  StrongPermVerdict v;
  for (const Subgroup& u : overgroups(g, h)) {
    ++v.checked_overgroups;
    if (!is_permutable(u, h)) {
      v.failing_overgroup = u;
      return v;
    }
  }
  v.holds = true;
  return v;
}

// H permutes with every subgroup of the ambient of `lat`.
inline bool is_quasinormal(const SubgroupLattice& lat, const Subgroup& h) {
  for (const auto& k : lat.nodes())
    if (!permutes_with(h, k)) return false;
  return true;
}

inline bool is_quasinormal(const Subgroup& g, const Subgroup& h) {
  require_nested(g, h, "is_quasinormal");
  return is_quasinormal(SubgroupLattice::build(g), h);
}

}  // namespace pgt
