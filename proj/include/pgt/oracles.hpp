#pragma once

#include <set>

#include "pgt/lattice.hpp"
#include "pgt/permutability.hpp"
#include "pgt/quotient.hpp"

// Definition-literal reference implementations. These deliberately avoid the
// shortcuts taken by the production code (cyclic-subgroup deduplication,
// capped closures, memoized ascent) so the two can be checked against each
// other. They are slow on purpose and only meant for small groups.

namespace pgt::oracle {

// P_U(H) generated from every element of U whose cyclic subgroup permutes
// with H, one element at a time, no deduplication.
inline Subgroup permutizer(const Subgroup& u, const Subgroup& h) {
  require_nested(u, h, "oracle permutizer");
  const auto& ctx = *u.ctx();
  std::vector<int> seeds = h.generator_indices();
  for (int x : u.members().indices()) {
    Subgroup cyc = subgroup_generated(u.ctx(), {x});
    Bitset xh = product_bitset(ctx, cyc.members(), h.members());
    Bitset hx = product_bitset(ctx, h.members(), cyc.members());
    if (xh == hx) seeds.push_back(x);
  }
  return subgroup_generated(u.ctx(), seeds);
}

inline bool is_permutable(const Subgroup& u, const Subgroup& h) {
  return oracle::permutizer(u, h).members() == u.members();
}

// Overgroups of h inside u, read off the full lattice of the ambient group.
inline std::vector<Subgroup> overgroups(const SubgroupLattice& lat,
                                        const Subgroup& u, const Subgroup& h) {
  std::vector<Subgroup> out;
  for (const auto& n : lat.nodes())
    if (h.members().is_subset_of(n.members()) &&
        n.members().is_subset_of(u.members()))
      out.push_back(n);
  return out;
}

inline bool is_strongly_permutable(const SubgroupLattice& lat,
                                   const Subgroup& g, const Subgroup& h) {
  for (const auto& u : overgroups(lat, g, h))
    if (!oracle::is_permutable(u, h)) return false;
  return true;
}

// P-subnormality by exhaustive chain search over the lattice: from k, try
// every lattice node one prime-index step above it.
inline bool is_p_subnormal(const SubgroupLattice& lat, const Subgroup& g,
                           const Subgroup& h) {
  require_nested(g, h, "oracle is_p_subnormal");
  std::set<Bitset> seen;
  std::vector<Bitset> stack{h.members()};
  seen.insert(h.members());
  while (!stack.empty()) {
    Bitset k = std::move(stack.back());
    stack.pop_back();
    if (k == g.members()) return true;
    std::uint64_t ko = k.count();
    for (const auto& n : lat.nodes()) {
      if (!k.is_subset_of(n.members())) continue;
      if (!n.members().is_subset_of(g.members())) continue;
      if (!is_prime(n.order() / ko)) continue;
      if (seen.insert(n.members()).second) stack.push_back(n.members());
    }
  }
  return false;
}

// All subgroups as the fixpoint of pairwise joins, seeded with the trivial
// subgroup and every cyclic subgroup. Independent of the production lattice
// algorithm's iteration strategy.
inline std::size_t subgroup_count(const ContextPtr& ctx) {
  std::set<Bitset> found;
  Bitset triv(ctx->size());
  triv.set(ctx->identity_index());
  found.insert(triv);
  for (const auto& cs : ctx->cyclic_subgroups()) found.insert(cs.members);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Bitset> snapshot(found.begin(), found.end());
    for (std::size_t i = 0; i < snapshot.size(); ++i)
      for (std::size_t j = i + 1; j < snapshot.size(); ++j) {
        if (snapshot[i].is_subset_of(snapshot[j]) ||
            snapshot[j].is_subset_of(snapshot[i]))
          continue;
        std::vector<int> seeds;
        for (int x : snapshot[i].indices()) seeds.push_back(x);
        for (int x : snapshot[j].indices()) seeds.push_back(x);
        if (found.insert(closure(*ctx, seeds)).second) grew = true;
      }
  }
  return found.size();
}

// Huppert's criterion: a nontrivial group is supersoluble iff every maximal
// subgroup has prime index. Used only as a cross-check for the production
// normal-prime-order-subgroup recursion.
inline bool huppert_supersoluble(const SubgroupLattice& lat) {
  const Subgroup& g = lat.ambient();
  if (g.order() == 1) return true;
  for (const auto& m : lat.maximal_subgroups())
    if (!is_prime(g.order() / m.order())) return false;
  return true;
}

}  // namespace pgt::oracle
