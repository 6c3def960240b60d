#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "pgt/subgroup.hpp"

namespace pgt {

// Sorted set of primes.
class PrimeSet {
public:
  PrimeSet() = default;
  explicit PrimeSet(std::vector<int> primes) : primes_(std::move(primes)) {
    std::sort(primes_.begin(), primes_.end());
    primes_.erase(std::unique(primes_.begin(), primes_.end()), primes_.end());
    for (int p : primes_)
      if (!is_prime(p)) throw error(std::to_string(p) + " is not prime");
  }
  // By value so that prime_set(g).primes() is safe in a range-for.
  std::vector<int> primes() const { return primes_; }
  bool contains(int p) const {
    return std::binary_search(primes_.begin(), primes_.end(), p);
  }
  bool empty() const { return primes_.empty(); }
  bool operator==(const PrimeSet&) const = default;

private:
  std::vector<int> primes_;
};

inline PrimeSet prime_set(const Subgroup& g) {
  return PrimeSet(prime_factors(g.order()));
}

inline void require_nested(const Subgroup& u, const Subgroup& h,
                           const char* op) {
  if (u.ctx() != h.ctx()) throw error(std::string(op) + ": ambient mismatch");
  if (!u.contains(h))
    throw error(std::string(op) + ": subgroup is not contained in ambient");
}

inline std::uint64_t index(const Subgroup& u, const Subgroup& h) {
  require_nested(u, h, "index");
  return u.order() / h.order();
}

// H^g = H decided on generators of H only; enough since conjugation is a
// bijection of a finite set.
inline bool normalizes(const GroupContext& ctx, int g, const Subgroup& h) {
  for (int x : h.generator_indices())
    if (!h.contains_index(ctx.conj(x, g))) return false;
  return true;
}

inline Subgroup normalizer(const Subgroup& u, const Subgroup& h) {
  require_nested(u, h, "normalizer");
  const auto& ctx = *u.ctx();
  Bitset r(ctx.size());
  const Bitset& um = u.members();
  for (int g = um.next(0); g >= 0; g = um.next(g + 1))
    if (normalizes(ctx, g, h)) r.set(g);
  return Subgroup(u.ctx(), std::move(r));
}

inline Subgroup centralizer(const Subgroup& u, const Subgroup& h) {
  require_nested(u, h, "centralizer");
  const auto& ctx = *u.ctx();
  Bitset r(ctx.size());
  const Bitset& um = u.members();
  const auto& hg = h.generator_indices();
  for (int g = um.next(0); g >= 0; g = um.next(g + 1)) {
    bool ok = true;
    for (int x : hg)
      if (ctx.mul(g, x) != ctx.mul(x, g)) {
        ok = false;
        break;
      }
    if (ok) r.set(g);
  }
  return Subgroup(u.ctx(), std::move(r));
}

inline Subgroup center(const Subgroup& g) { return centralizer(g, g); }

inline bool is_normal(const Subgroup& u, const Subgroup& h) {
  require_nested(u, h, "is_normal");
  for (int g : u.generator_indices())
    if (!normalizes(*u.ctx(), g, h)) return false;
  return true;
}

// Smallest subgroup of U containing the seeds and normal in U.
inline Subgroup normal_closure(const Subgroup& u, std::vector<int> seeds) {
  const auto& ctx = *u.ctx();
  const auto& ugens = u.generator_indices();
  Bitset m = closure(ctx, seeds);
  while (true) {
    std::vector<int> extra;
    for (int g : ugens)
      for (int s : seeds)
        if (int c = ctx.conj(s, g); !m.test(c)) extra.push_back(c);
    if (extra.empty()) break;
    for (int c : extra) seeds.push_back(c);
    m = closure(ctx, seeds);
  }
  return Subgroup(u.ctx(), std::move(m));
}

// Commutator subgroup [H,H]: normal closure in H of generator commutators.
inline Subgroup derived_subgroup(const Subgroup& h) {
  const auto& ctx = *h.ctx();
  const auto& gens = h.generator_indices();
  std::vector<int> comms;
  for (int a : gens)
    for (int b : gens) {
      int c = ctx.mul(ctx.mul(ctx.mul(ctx.inv(a), ctx.inv(b)), a), b);
      comms.push_back(c);
    }
  return normal_closure(h, comms);
}

inline std::vector<Subgroup> derived_series(const Subgroup& g) {
  std::vector<Subgroup> series{g};
  while (true) {
    Subgroup next = derived_subgroup(series.back());
    if (next.order() == series.back().order()) break;
    series.push_back(std::move(next));
    if (series.back().is_trivial()) break;
  }
  return series;
}

inline int exponent(const Subgroup& h) {
  const auto& ctx = *h.ctx();
  std::uint64_t e = 1;
  const Bitset& m = h.members();
  for (int i = m.next(0); i >= 0; i = m.next(i + 1))
    e = std::lcm(e, ctx.elem_order(i));
  return int(e);
}

// Sylow p-subgroup by deterministic normalizer climbing inside U: grow a
// p-subgroup by p-elements of its normalizer until the full p-part of |U|
// is reached.
inline Subgroup sylow_subgroup(const Subgroup& u, int p) {
  if (!is_prime(p)) throw error(std::to_string(p) + " is not prime");
  const auto& ctx = *u.ctx();
  std::uint64_t target = p_part(u.order(), p);
  Bitset cur(ctx.size());
  cur.set(ctx.identity_index());
  Subgroup h(u.ctx(), cur);
  while (h.order() < target) {
    Subgroup n = normalizer(u, h);
    bool grew = false;
    const Bitset& nm = n.members();
    for (int z = nm.next(0); z >= 0 && !grew; z = nm.next(z + 1)) {
      if (h.contains_index(z)) continue;
      if (p_part(ctx.elem_order(z), p) != ctx.elem_order(z)) continue;
      std::vector<int> seeds = h.generator_indices();
      seeds.push_back(z);
      auto k = closure_capped(ctx, seeds, target);
      if (k && p_part(k->count(), p) == std::uint64_t(k->count())) {
        h = Subgroup(u.ctx(), std::move(*k));
        grew = true;
      }
    }
    if (!grew)
      throw error("sylow climb stalled (internal invariant violated)");
  }
  return h;
}

// Largest normal subgroup of U inside H: intersection of the U-conjugates
// of H.
inline Subgroup core(const Subgroup& u, const Subgroup& h) {
  require_nested(u, h, "core");
  const auto& ctx = *u.ctx();
  // Orbit of H under conjugation by generators of U, intersecting as we go.
  std::vector<Bitset> seen{h.members()};
  Bitset acc = h.members();
  for (std::size_t qi = 0; qi < seen.size(); ++qi) {
    for (int g : u.generator_indices()) {
      Bitset c(ctx.size());
      const Bitset& s = seen[qi];
      for (int x = s.next(0); x >= 0; x = s.next(x + 1)) c.set(ctx.conj(x, g));
      if (std::find(seen.begin(), seen.end(), c) == seen.end()) {
        acc = acc & c;
        seen.push_back(std::move(c));
      }
    }
  }
  return Subgroup(u.ctx(), std::move(acc));
}

// O_p(U): intersection of the conjugates of one Sylow p-subgroup.
inline Subgroup p_core(const Subgroup& u, int p) {
  if (!is_prime(p)) throw error(std::to_string(p) + " is not prime");
  return core(u, sylow_subgroup(u, p));
}

// F(U): join of the p-cores over the primes dividing |U|.
inline Subgroup fitting(const Subgroup& u) {
  Subgroup f = u.ctx()->trivial();
  for (int p : prime_set(u).primes()) f = join(f, p_core(u, p));
  return f;
}

}  // namespace pgt
