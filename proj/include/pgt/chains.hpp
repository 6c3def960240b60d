#pragma once

#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

#include "pgt/lattice.hpp"

namespace pgt {

// Certificate H = H_0 < H_1 < ... < H_n = G with every index prime.
// Unit-index steps are normalized away; links are strictly increasing.
struct SubnormalChain {
  std::vector<Subgroup> links;
};

enum class ChainFault {
  none,
  empty,
  not_nested,
  index_not_prime,
};

// Re-checks every inclusion and the primality of every index,
// independently of how the chain was found.
inline bool validate_chain(const SubnormalChain& chain,
                           ChainFault* fault = nullptr) {
  auto fail = [&](ChainFault f) {
    if (fault) *fault = f;
    return false;
  };
  if (chain.links.empty()) return fail(ChainFault::empty);
  for (std::size_t i = 0; i + 1 < chain.links.size(); ++i) {
    const Subgroup& a = chain.links[i];
    const Subgroup& b = chain.links[i + 1];
    if (a.ctx() != b.ctx() || !a.members().is_subset_of(b.members()))
      return fail(ChainFault::not_nested);
    if (!is_prime(b.order() / a.order()))
      return fail(ChainFault::index_not_prime);
  }
  if (fault) *fault = ChainFault::none;
  return true;
}

namespace detail {

// Distinct subgroups <K,x> of prime index over K inside U. A prime-index
// overgroup M of K has K maximal in M, so M = <K,x> for any x in M \ K;
// single-element extensions therefore cover all chain steps. Join closures
// are capped at |K| times the largest prime that could still divide the
// index.
inline std::vector<Bitset> prime_step_successors(const Subgroup& u,
                                                 const Subgroup& k) {
  const auto& ctx = *u.ctx();
  std::uint64_t idx = u.order() / k.order();
  std::uint64_t cap = 0;
  for (int p : prime_factors(idx)) cap = std::max<std::uint64_t>(cap, p);
  cap *= k.order();
  std::vector<Bitset> out;
  std::unordered_map<Bitset, char, BitsetHash> seen;
  for (const auto& cs : ctx.cyclic_subgroups()) {
    if (!cs.members.is_subset_of(u.members())) continue;
    if (cs.members.is_subset_of(k.members())) continue;
    std::vector<int> gens = k.generator_indices();
    gens.push_back(cs.gen);
    auto j = closure_capped(ctx, gens, cap);
    if (!j) continue;
    std::uint64_t jo = j->count();
    if (jo == k.order() || !is_prime(jo / k.order()) || jo % k.order() != 0)
      continue;
    if (!j->is_subset_of(u.members())) continue;
    if (seen.emplace(*j, 1).second) out.push_back(std::move(*j));
  }
  std::sort(out.begin(), out.end(),
            [](const Bitset& a, const Bitset& b) {
              if (a.count() != b.count()) return a.count() < b.count();
              return a < b;
            });
  return out;
}

}  // namespace detail

// Shared verdict memo for P-subnormality relative to one fixed ambient.
// Never reuse across ambients.
class PsnMemo {
public:
  explicit PsnMemo(Subgroup ambient) : ambient_(std::move(ambient)) {}

  const Subgroup& ambient() const { return ambient_; }

  bool verdict(const Subgroup& h) {
    require_nested(ambient_, h, "is_p_subnormal");
    return verdict_bits(h.members());
  }

private:
  bool verdict_bits(const Bitset& k) {
    auto it = memo_.find(k);
    if (it != memo_.end()) return it->second;
    bool v = false;
    if (k == ambient_.members()) {
      v = true;
    } else {
      memo_.emplace(k, false);  // placeholder; ascent is strictly increasing
      for (const Bitset& j :
           detail::prime_step_successors(ambient_, Subgroup(ambient_.ctx(), k)))
        if (verdict_bits(j)) {
          v = true;
          break;
        }
    }
    memo_[k] = v;
    return v;
  }

  Subgroup ambient_;
  std::unordered_map<Bitset, bool, BitsetHash> memo_;
};

// Decide P-subnormality of H in G and produce a certificate chain if one
// exists. The chain returned is the first found breadth-first (shortest
// chain, ties broken by canonical subgroup order).
inline std::optional<SubnormalChain> p_subnormal_chain(const Subgroup& g,
                                                       const Subgroup& h) {
  require_nested(g, h, "is_p_subnormal");
  if (h.members() == g.members()) return SubnormalChain{{g}};
  std::vector<Bitset> frontier{h.members()};
  std::unordered_map<Bitset, Bitset, BitsetHash> parent;
  parent.emplace(h.members(), h.members());
  while (!frontier.empty()) {
    std::vector<Bitset> next;
    for (const Bitset& k : frontier) {
      for (Bitset& j :
           detail::prime_step_successors(g, Subgroup(g.ctx(), k))) {
        if (parent.count(j)) continue;
        parent.emplace(j, k);
        if (j == g.members()) {
          SubnormalChain chain;
          Bitset cur = j;
          while (true) {
            chain.links.emplace_back(g.ctx(), cur);
            const Bitset& p = parent.at(cur);
            if (p == cur) break;
            cur = p;
          }
          std::reverse(chain.links.begin(), chain.links.end());
          return chain;
        }
        next.push_back(std::move(j));
      }
    }
    frontier = std::move(next);
  }
  return std::nullopt;
}

inline bool is_p_subnormal(const Subgroup& g, const Subgroup& h) {
  PsnMemo memo(g);
  return memo.verdict(h);
}

// Verdict for every lattice node, with one shared memo.
inline std::vector<std::pair<Subgroup, bool>> p_subnormal_sweep(
    const SubgroupLattice& lat) {
  PsnMemo memo(lat.ambient());
  std::vector<std::pair<Subgroup, bool>> out;
  for (const auto& n : lat.nodes()) out.emplace_back(n, memo.verdict(n));
  return out;
}

}  // namespace pgt
