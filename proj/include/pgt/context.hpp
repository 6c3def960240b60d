#pragma once

#include <memory>
#include <unordered_map>
#include <vector>

#include "pgt/base.hpp"
#include "pgt/perm_group.hpp"

namespace pgt {

class Subgroup;

// Dense algebra of one ambient group: canonical element order, index
// arithmetic, element orders and the distinct cyclic subgroups. All
// subgroup-level machinery works with element indices against a shared
// context. A full multiplication table is kept for orders up to
// `kMulTableLimit`; above that products are composed on the fly.
class GroupContext : public std::enable_shared_from_this<GroupContext> {
public:
  static constexpr int kMulTableLimit = 3000;

  static std::shared_ptr<const GroupContext> make(const PermGroup& g,
                                                  Budgets budgets = {}) {
    return std::shared_ptr<const GroupContext>(new GroupContext(g, budgets));
  }

  int size() const { return n_; }
  const PermGroup& group() const { return group_; }
  const Budgets& budgets() const { return budgets_; }
  int degree() const { return group_.degree(); }

  const Permutation& perm(int i) const { return elems_[i]; }
  const std::vector<Permutation>& elements() const { return elems_; }
  int identity_index() const { return id_; }

  int index_of(const Permutation& p) const {
    auto it = std::lower_bound(elems_.begin(), elems_.end(), p);
    if (it == elems_.end() || !(*it == p)) return -1;
    return int(it - elems_.begin());
  }

  // Index of elems_[a] followed by elems_[b].
  int mul(int a, int b) const {
    if (!mul_.empty()) return mul_[std::size_t(a) * n_ + b];
    return index_of(compose(elems_[a], elems_[b]));
  }

  int inv(int a) const { return inv_[a]; }

  // g^h = h^-1 g h, by index.
  int conj(int g, int h) const { return mul(mul(inv(h), g), h); }

  std::uint64_t elem_order(int a) const { return order_[a]; }

  struct CyclicSubgroup {
    int gen;         // canonical (smallest-index) generator
    int order;
    Bitset members;
  };

  // Distinct cyclic subgroups, deduplicated, in order of first generator.
  const std::vector<CyclicSubgroup>& cyclic_subgroups() const {
    return cyclics_;
  }

  // Cyclic subgroup index containing exactly <elems_[a]>.
  int cyclic_of(int a) const { return cyclic_of_[a]; }

  Subgroup full() const;
  Subgroup trivial() const;

private:
  GroupContext(const PermGroup& g, Budgets budgets)
      : group_(g), budgets_(budgets) {
    elems_ = g.elements(budgets.enumeration_limit);
    n_ = int(elems_.size());
    id_ = index_of(Permutation(g.degree()));
    inv_.resize(n_);
    order_.resize(n_);
    for (int i = 0; i < n_; ++i) {
      inv_[i] = index_of(elems_[i].inverse());
      order_[i] = element_order(elems_[i]);
    }
    if (n_ <= kMulTableLimit) {
      mul_.resize(std::size_t(n_) * n_);
      for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
          mul_[std::size_t(a) * n_ + b] =
              std::uint16_t(index_of(compose(elems_[a], elems_[b])));
    }
    build_cyclics();
  }

  void build_cyclics() {
    cyclic_of_.assign(n_, -1);
    std::unordered_map<Bitset, int, BitsetHash> seen;
    for (int i = 0; i < n_; ++i) {
      if (cyclic_of_[i] >= 0) continue;
      Bitset m(n_);
      std::vector<int> powers;
      int x = id_;
      do {
        m.set(x);
        powers.push_back(x);
        x = mul(x, i);
      } while (x != id_);
      auto [it, fresh] = seen.emplace(m, int(cyclics_.size()));
      if (fresh) cyclics_.push_back({i, int(powers.size()), m});
      // Assign every generator of <i>; proper powers get their own pass.
      for (int p : powers)
        if (order_[p] == order_[i]) cyclic_of_[p] = it->second;
    }
  }

  PermGroup group_;
  Budgets budgets_;
  std::vector<Permutation> elems_;
  int n_ = 0;
  int id_ = 0;
  std::vector<std::uint16_t> mul_;
  std::vector<int> inv_;
  std::vector<std::uint64_t> order_;
  std::vector<CyclicSubgroup> cyclics_;
  std::vector<int> cyclic_of_;
};

using ContextPtr = std::shared_ptr<const GroupContext>;

}  // namespace pgt
