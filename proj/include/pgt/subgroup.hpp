#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "pgt/context.hpp"

namespace pgt {

// A subgroup of a context's ambient group, stored as a membership bitset
// over the canonical element order. Immutable after construction.
class Subgroup {
public:
  Subgroup(ContextPtr ctx, Bitset members)
      : ctx_(std::move(ctx)), members_(std::move(members)) {
    order_ = members_.count();
    if (order_ == 0 || !members_.test(ctx_->identity_index()))
      throw error("subgroup must contain the identity");
  }

  const ContextPtr& ctx() const { return ctx_; }
  const Bitset& members() const { return members_; }
  std::uint64_t order() const { return order_; }
  bool is_trivial() const { return order_ == 1; }
  bool is_full() const { return int(order_) == ctx_->size(); }

  bool contains_index(int i) const { return members_.test(i); }
  bool contains(const Permutation& p) const {
    int i = ctx_->index_of(p);
    return i >= 0 && members_.test(i);
  }
  bool contains(const Subgroup& h) const {
    return h.members_.is_subset_of(members_);
  }

  // Deterministic small generating set: greedily absorb the smallest
  // element index not yet generated.
  const std::vector<int>& generator_indices() const {
    if (!gens_) {
      std::vector<int> gens;
      Bitset have(ctx_->size());
      have.set(ctx_->identity_index());
      while (true) {
        int next = -1;
        for (int i = members_.next(0); i >= 0; i = members_.next(i + 1)) {
          if (!have.test(i)) {
            next = i;
            break;
          }
        }
        if (next < 0) break;
        gens.push_back(next);
        // close `have` under the chosen generators
        std::vector<int> queue = have.indices();
        have.set(next);
        queue.push_back(next);
        for (std::size_t qi = 0; qi < queue.size(); ++qi)
          for (int g : gens) {
            int y = ctx_->mul(queue[qi], g);
            if (!have.test(y)) {
              have.set(y);
              queue.push_back(y);
            }
          }
      }
      gens_ = std::move(gens);
    }
    return *gens_;
  }

  std::vector<Permutation> generators() const {
    std::vector<Permutation> out;
    for (int i : generator_indices()) out.push_back(ctx_->perm(i));
    if (out.empty()) out.push_back(Permutation(ctx_->degree()));
    return out;
  }

  // Standalone PermGroup view (same degree as the ambient).
  PermGroup group() const { return PermGroup(ctx_->degree(), generators()); }

  ElementSet element_set() const {
    std::vector<Permutation> out;
    out.reserve(order_);
    for (int i = members_.next(0); i >= 0; i = members_.next(i + 1))
      out.push_back(ctx_->perm(i));
    return ElementSet(std::move(out));
  }

  const std::string& fingerprint() const {
    if (fp_.empty()) fp_ = element_set().fingerprint();
    return fp_;
  }

  bool operator==(const Subgroup& o) const {
    return ctx_ == o.ctx_ && members_ == o.members_;
  }

  // Deterministic order: by size, then bitset.
  bool operator<(const Subgroup& o) const {
    if (order_ != o.order_) return order_ < o.order_;
    return members_ < o.members_;
  }

private:
  ContextPtr ctx_;
  Bitset members_;
  std::uint64_t order_;
  mutable std::optional<std::vector<int>> gens_;
  mutable std::string fp_;
};

// Closure of a seed set under multiplication (BFS over the context).
inline Bitset closure(const GroupContext& ctx, const std::vector<int>& seeds) {
  Bitset m(ctx.size());
  m.set(ctx.identity_index());
  std::vector<int> queue{ctx.identity_index()};
  std::vector<int> gens;
  for (int s : seeds)
    if (!m.test(s)) {
      m.set(s);
      queue.push_back(s);
      gens.push_back(s);
    }
  for (std::size_t qi = 0; qi < queue.size(); ++qi)
    for (int g : gens) {
      int y = ctx.mul(queue[qi], g);
      if (!m.test(y)) {
        m.set(y);
        queue.push_back(y);
      }
    }
  return m;
}

// Closure that abandons once the result would exceed `cap` elements.
inline std::optional<Bitset> closure_capped(const GroupContext& ctx,
                                            const std::vector<int>& seeds,
                                            std::uint64_t cap) {
  Bitset m(ctx.size());
  m.set(ctx.identity_index());
  std::uint64_t count = 1;
  std::vector<int> queue{ctx.identity_index()};
  std::vector<int> gens;
  for (int s : seeds)
    if (!m.test(s)) {
      m.set(s);
      queue.push_back(s);
      gens.push_back(s);
      if (++count > cap) return std::nullopt;
    }
  for (std::size_t qi = 0; qi < queue.size(); ++qi)
    for (int g : gens) {
      int y = ctx.mul(queue[qi], g);
      if (!m.test(y)) {
        m.set(y);
        queue.push_back(y);
        if (++count > cap) return std::nullopt;
      }
    }
  return m;
}

inline Subgroup subgroup_generated(const ContextPtr& ctx,
                                   const std::vector<int>& seeds) {
  return Subgroup(ctx, closure(*ctx, seeds));
}

inline Subgroup join(const Subgroup& h, const Subgroup& k) {
  if (h.ctx() != k.ctx()) throw error("join: ambient mismatch");
  std::vector<int> seeds = h.generator_indices();
  for (int g : k.generator_indices()) seeds.push_back(g);
  return subgroup_generated(h.ctx(), seeds);
}

inline Subgroup intersect(const Subgroup& h, const Subgroup& k) {
  if (h.ctx() != k.ctx()) throw error("intersect: ambient mismatch");
  return Subgroup(h.ctx(), h.members() & k.members());
}

// Literal element-set product {hk : h in A, k in B} as a bitset.
inline Bitset product_bitset(const GroupContext& ctx, const Bitset& a,
                             const Bitset& b) {
  Bitset r(ctx.size());
  for (int i = a.next(0); i >= 0; i = a.next(i + 1))
    for (int j = b.next(0); j >= 0; j = b.next(j + 1)) r.set(ctx.mul(i, j));
  return r;
}

inline ElementSet set_product(const Subgroup& h, const Subgroup& k) {
  if (h.ctx() != k.ctx()) throw error("set_product: ambient mismatch");
  Bitset p = product_bitset(*h.ctx(), h.members(), k.members());
  std::vector<Permutation> out;
  for (int i = p.next(0); i >= 0; i = p.next(i + 1))
    out.push_back(h.ctx()->perm(i));
  return ElementSet(std::move(out));
}

inline Subgroup GroupContext::full() const {
  Bitset b(n_);
  for (int i = 0; i < n_; ++i) b.set(i);
  return Subgroup(shared_from_this(), std::move(b));
}

inline Subgroup GroupContext::trivial() const {
  Bitset b(n_);
  b.set(id_);
  return Subgroup(shared_from_this(), std::move(b));
}

inline ContextPtr make_context(const PermGroup& g, Budgets budgets = {}) {
  return GroupContext::make(g, budgets);
}

}  // namespace pgt
