#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pgt/chains.hpp"
#include "pgt/permutability.hpp"
#include "pgt/quotient.hpp"

namespace pgt {

inline bool is_soluble(const Subgroup& g) {
  return derived_series(g).back().is_trivial();
}

inline bool is_nilpotent(const Subgroup& g) {
  for (int p : prime_set(g).primes())
    if (!is_normal(g, sylow_subgroup(g, p))) return false;
  return true;
}

namespace detail {

inline bool is_supersoluble_impl(const Subgroup& g,
                                 std::map<std::string, bool>& memo) {
  if (g.order() == 1) return true;
  auto it = memo.find(g.fingerprint());
  if (it != memo.end()) return it->second;
  // Supersoluble iff some normal prime-order subgroup exists and the
  // quotient by it is supersoluble. Quotients of supersoluble groups are
  // supersoluble, so checking the first normal prime-order subgroup found
  // is enough.
  bool result = false;
  const auto& ctx = *g.ctx();
  for (const auto& cs : ctx.cyclic_subgroups()) {
    if (!is_prime(cs.order)) continue;
    if (!cs.members.is_subset_of(g.members())) continue;
    Subgroup c(g.ctx(), cs.members);
    if (!is_normal(g, c)) continue;
    QuotientRep q = quotient(g, c);
    result = is_supersoluble_impl(q.image_full(), memo);
    break;
  }
  memo.emplace(g.fingerprint(), result);
  return result;
}

}  // namespace detail

inline bool is_supersoluble(const Subgroup& g) {
  std::map<std::string, bool> memo;
  return detail::is_supersoluble_impl(g, memo);
}

namespace detail {

// First proper nontrivial normal subgroup found as a normal closure of a
// cyclic subgroup, in canonical order; nullopt when the group is simple
// (or trivial).
inline std::optional<Subgroup> some_proper_normal(const Subgroup& g) {
  const auto& ctx = *g.ctx();
  for (const auto& cs : ctx.cyclic_subgroups()) {
    if (cs.order == 1) continue;
    if (!cs.members.is_subset_of(g.members())) continue;
    Subgroup n = normal_closure(g, {cs.gen});
    if (n.order() < g.order()) return n;
  }
  return std::nullopt;
}

}  // namespace detail

inline bool is_simple(const Subgroup& g) {
  return g.order() > 1 && !detail::some_proper_normal(g).has_value();
}

// Every composition factor is an r-group or an r'-group.
inline bool is_r_soluble(const Subgroup& g, int r) {
  if (!is_prime(r)) throw error(std::to_string(r) + " is not prime");
  if (g.order() % r != 0) return true;
  if (p_part(g.order(), r) == g.order()) return true;
  auto n = detail::some_proper_normal(g);
  if (!n) return false;  // simple, order divisible by r but not an r-group
  return is_r_soluble(*n, r) &&
         is_r_soluble(quotient(g, *n).image_full(), r);
}

// Iterated normal Sylow subgroups for the primes in decreasing order.
inline bool has_sylow_tower_supersoluble(const Subgroup& g) {
  if (g.order() == 1) return true;
  int r = prime_set(g).primes().back();
  Subgroup syl = sylow_subgroup(g, r);
  if (!is_normal(g, syl)) return false;
  return has_sylow_tower_supersoluble(quotient(g, syl).image_full());
}

// Structure extracted from a Schmidt group S = P x| Q: normal Sylow
// p-subgroup P, non-normal cyclic Sylow q-subgroup Q.
struct SchmidtStructure {
  Subgroup p_part;
  Subgroup q_part;
  int p = 0;
  int q = 0;
  bool supersoluble = false;
};

// Schmidt iff non-nilpotent with every maximal subgroup nilpotent
// (nilpotency is subgroup-closed, so maximal subgroups suffice).
inline std::optional<SchmidtStructure> schmidt_structure(
    const SubgroupLattice& lat, const Subgroup& s) {
  if (is_nilpotent(s)) return std::nullopt;
  for (const auto& m : lat.maximal_subgroups_of(s))
    if (!is_nilpotent(m)) return std::nullopt;
  auto primes = prime_set(s).primes();
  std::optional<Subgroup> p_sub, q_sub;
  int p = 0, q = 0;
  for (int r : primes) {
    Subgroup syl = sylow_subgroup(s, r);
    if (is_normal(s, syl)) {
      p_sub = syl;
      p = r;
    } else {
      q_sub = syl;
      q = r;
    }
  }
  if (!p_sub || !q_sub || primes.size() != 2)
    throw error("schmidt structure extraction failed");
  return SchmidtStructure{*p_sub, *q_sub, p, q, is_supersoluble(s)};
}

inline std::optional<SchmidtStructure> schmidt_structure(const Subgroup& s) {
  if (is_nilpotent(s)) return std::nullopt;
  return schmidt_structure(SubgroupLattice::build(s), s);
}

// Not supersoluble, but every maximal subgroup is (supersolubility is
// subgroup-closed, so maximal subgroups suffice).
inline bool is_minimal_non_supersoluble(const SubgroupLattice& lat,
                                        const Subgroup& g) {
  if (is_supersoluble(g)) return false;
  for (const auto& m : lat.maximal_subgroups_of(g))
    if (!is_supersoluble(m)) return false;
  return true;
}

inline bool is_minimal_non_supersoluble(const Subgroup& g) {
  if (is_supersoluble(g)) return false;
  return is_minimal_non_supersoluble(SubgroupLattice::build(g), g);
}

// All Sylow subgroups P-subnormal.
inline bool in_wU(const Subgroup& g, PsnMemo* shared_memo = nullptr) {
  PsnMemo local(g);
  PsnMemo& memo = shared_memo ? *shared_memo : local;
  for (int p : prime_set(g).primes())
    if (!memo.verdict(sylow_subgroup(g, p))) return false;
  return true;
}

// All primary (prime-power-order) cyclic subgroups P-subnormal.
inline bool in_vU(const Subgroup& g, PsnMemo* shared_memo = nullptr) {
  PsnMemo local(g);
  PsnMemo& memo = shared_memo ? *shared_memo : local;
  const auto& ctx = *g.ctx();
  for (const auto& cs : ctx.cyclic_subgroups()) {
    if (!cs.members.is_subset_of(g.members())) continue;
    if (!is_prime_power(cs.order)) continue;
    if (!memo.verdict(Subgroup(g.ctx(), cs.members))) return false;
  }
  return true;
}

// G^U: smallest normal subgroup with supersoluble quotient, computed as
// the intersection of all normal subgroups with supersoluble quotient.
inline Subgroup supersoluble_residual(const SubgroupLattice& lat) {
  const Subgroup& g = lat.ambient();
  Subgroup res = g;
  for (const auto& n : lat.normal_subgroups()) {
    if (n.contains(res)) continue;  // intersection would not shrink
    if (is_supersoluble(quotient(g, n).image_full())) res = intersect(res, n);
  }
  return res;
}

struct ClassificationReport {
  std::string group_id;
  std::uint64_t order = 0;
  PrimeSet primes;
  bool soluble = false;
  bool nilpotent = false;
  bool supersoluble = false;
  bool in_wU = false;
  bool in_vU = false;
  bool is_schmidt = false;
  bool is_min_non_supersoluble = false;
  bool sylow_tower_supersoluble = false;
  bool simple = false;
  std::map<int, bool> r_soluble;            // per prime in pi(G)
  std::map<std::string, std::string> witnesses;
};

inline ClassificationReport classify_group(const Subgroup& g,
                                           const std::string& id) {
  ClassificationReport r;
  r.group_id = id;
  r.order = g.order();
  r.primes = prime_set(g);
  r.soluble = is_soluble(g);
  r.nilpotent = is_nilpotent(g);
  r.supersoluble = is_supersoluble(g);
  r.sylow_tower_supersoluble = has_sylow_tower_supersoluble(g);
  r.simple = is_simple(g);
  for (int p : r.primes.primes()) r.r_soluble[p] = is_r_soluble(g, p);
  PsnMemo memo(g);
  for (int p : r.primes.primes()) {
    Subgroup syl = sylow_subgroup(g, p);
    if (!memo.verdict(syl)) {
      r.witnesses["wU_failing_sylow"] = "p=" + std::to_string(p) +
                                        " fingerprint=" + syl.fingerprint();
      break;
    }
  }
  r.in_wU = in_wU(g, &memo);
  r.in_vU = in_vU(g, &memo);
  SubgroupLattice lat = SubgroupLattice::build(g);
  auto schmidt = schmidt_structure(lat, g);
  r.is_schmidt = schmidt.has_value();
  if (schmidt)
    r.witnesses["schmidt"] = "p=" + std::to_string(schmidt->p) +
                             " q=" + std::to_string(schmidt->q);
  r.is_min_non_supersoluble = is_minimal_non_supersoluble(lat, g);
  return r;
}

}  // namespace pgt
