#pragma once

#include <map>
#include <unordered_map>
#include <vector>

#include "pgt/structure.hpp"

namespace pgt {

// Full subgroup lattice of an ambient subgroup U: the closure of the cyclic
// subgroups of U under join, deduplicated by membership bitset. Nodes are
// sorted by (order, bitset) so node indices are reproducible.
class SubgroupLattice {
public:
  static SubgroupLattice build(const Subgroup& u) {
    const auto& ctx = *u.ctx();
    const auto& budgets = ctx.budgets();
    if (u.order() > budgets.lattice_max_order)
      throw resource_error(
          "lattice_max_order",
          "group order " + std::to_string(u.order()) +
              " exceeds lattice budget " +
              std::to_string(budgets.lattice_max_order));
    std::unordered_map<Bitset, int, BitsetHash> seen;
    std::vector<Bitset> nodes;
    std::vector<std::vector<int>> node_gens;
    auto add = [&](Bitset b, std::vector<int> gens) -> bool {
      auto [it, fresh] = seen.emplace(std::move(b), int(nodes.size()));
      if (!fresh) return false;
      if (nodes.size() >= budgets.lattice_max_nodes)
        throw resource_error("lattice_max_nodes",
                             "subgroup lattice exceeds node budget " +
                                 std::to_string(budgets.lattice_max_nodes));
      nodes.push_back(it->first);
      node_gens.push_back(std::move(gens));
      return true;
    };
    Bitset triv(ctx.size());
    triv.set(ctx.identity_index());
    add(triv, {});
    std::vector<int> cyc;  // cyclic subgroups inside U, by context index
    for (int c = 0; c < int(ctx.cyclic_subgroups().size()); ++c)
      if (ctx.cyclic_subgroups()[c].members.is_subset_of(u.members()))
        cyc.push_back(c);
    for (int c : cyc) {
      const auto& cs = ctx.cyclic_subgroups()[c];
      add(cs.members, {cs.gen});
    }
    // Join-closure: combine every known node with every cyclic subgroup.
    for (std::size_t qi = 0; qi < nodes.size(); ++qi) {
      for (int c : cyc) {
        const auto& cs = ctx.cyclic_subgroups()[c];
        if (cs.members.is_subset_of(nodes[qi])) continue;
        std::vector<int> gens = node_gens[qi];
        gens.push_back(cs.gen);
        Bitset j = closure(ctx, gens);
        add(std::move(j), std::move(gens));
      }
    }
    SubgroupLattice lat(u);
    for (auto& b : nodes) lat.nodes_.emplace_back(u.ctx(), std::move(b));
    std::sort(lat.nodes_.begin(), lat.nodes_.end());
    return lat;
  }

  const Subgroup& ambient() const { return ambient_; }
  const std::vector<Subgroup>& nodes() const { return nodes_; }
  std::size_t size() const { return nodes_.size(); }

  int find(const Bitset& b) const {
    for (int i = 0; i < int(nodes_.size()); ++i)
      if (nodes_[i].members() == b) return i;
    return -1;
  }

  std::vector<Subgroup> subgroups_of(const Subgroup& h) const {
    std::vector<Subgroup> out;
    for (const auto& n : nodes_)
      if (n.members().is_subset_of(h.members())) out.push_back(n);
    return out;
  }

  std::vector<Subgroup> overgroups_of(const Subgroup& h) const {
    std::vector<Subgroup> out;
    for (const auto& n : nodes_)
      if (h.members().is_subset_of(n.members())) out.push_back(n);
    return out;
  }

  // Proper subgroups maximal in `h` (defaults to the ambient's co-atoms).
  std::vector<Subgroup> maximal_subgroups_of(const Subgroup& h) const {
    std::vector<Subgroup> in = subgroups_of(h);
    std::vector<Subgroup> out;
    for (const auto& m : in) {
      if (m.order() == h.order()) continue;
      bool maximal = true;
      for (const auto& k : in) {
        if (k.order() <= m.order() || k.order() == h.order()) continue;
        if (m.members().is_subset_of(k.members())) {
          maximal = false;
          break;
        }
      }
      if (maximal) out.push_back(m);
    }
    return out;
  }

  std::vector<Subgroup> maximal_subgroups() const {
    return maximal_subgroups_of(ambient_);
  }

  std::vector<Subgroup> normal_subgroups() const {
    std::vector<Subgroup> out;
    for (const auto& n : nodes_)
      if (is_normal(ambient_, n)) out.push_back(n);
    return out;
  }

  std::vector<Subgroup> minimal_normal_subgroups() const {
    std::vector<Subgroup> normals = normal_subgroups();
    std::vector<Subgroup> out;
    for (const auto& n : normals) {
      if (n.is_trivial()) continue;
      bool minimal = true;
      for (const auto& m : normals) {
        if (m.is_trivial() || m.order() >= n.order()) continue;
        if (m.members().is_subset_of(n.members())) {
          minimal = false;
          break;
        }
      }
      if (minimal) out.push_back(n);
    }
    return out;
  }

  // Covering relations (a < b with nothing strictly between).
  std::vector<std::pair<int, int>> cover_edges() const {
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < int(nodes_.size()); ++a)
      for (int b = 0; b < int(nodes_.size()); ++b) {
        if (nodes_[a].order() >= nodes_[b].order()) continue;
        if (!nodes_[a].members().is_subset_of(nodes_[b].members())) continue;
        bool covered = true;
        for (int c = 0; c < int(nodes_.size()); ++c) {
          if (c == a || c == b) continue;
          if (nodes_[a].order() < nodes_[c].order() &&
              nodes_[c].order() < nodes_[b].order() &&
              nodes_[a].members().is_subset_of(nodes_[c].members()) &&
              nodes_[c].members().is_subset_of(nodes_[b].members())) {
            covered = false;
            break;
          }
        }
        if (covered) edges.emplace_back(a, b);
      }
    return edges;
  }

private:
  explicit SubgroupLattice(Subgroup ambient) : ambient_(std::move(ambient)) {}

  Subgroup ambient_;
  std::vector<Subgroup> nodes_;
};

// All overgroups of H in U, without building the full lattice: BFS closure
// of {<K,x> : known K, x in U \ K} starting from H. Complete because any
// U' with H < U' contains <H,x> for each x in U', and every strictly larger
// subgroup is reached by single-element extensions.
inline std::vector<Subgroup> overgroups(const Subgroup& u, const Subgroup& h) {
  require_nested(u, h, "overgroups");
  const auto& ctx = *u.ctx();
  std::unordered_map<Bitset, int, BitsetHash> seen;
  std::vector<Subgroup> out{h};
  seen.emplace(h.members(), 0);
  for (std::size_t qi = 0; qi < out.size(); ++qi) {
    Subgroup k = out[qi];
    const Bitset& um = u.members();
    for (int c = 0; c < int(ctx.cyclic_subgroups().size()); ++c) {
      const auto& cs = ctx.cyclic_subgroups()[c];
      if (!cs.members.is_subset_of(um)) continue;
      if (cs.members.is_subset_of(k.members())) continue;
      std::vector<int> gens = k.generator_indices();
      gens.push_back(cs.gen);
      Bitset j = closure(ctx, gens);
      if (seen.emplace(j, int(out.size())).second)
        out.emplace_back(u.ctx(), std::move(j));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Hall pi-subgroups: all lattice nodes whose order is the full pi-part of
// |U| (the order is then automatically coprime to its index).
inline std::vector<Subgroup> hall_subgroups(const SubgroupLattice& lat,
                                            const PrimeSet& pi) {
  std::uint64_t target = 1;
  for (int p : pi.primes()) target *= p_part(lat.ambient().order(), p);
  std::vector<Subgroup> out;
  for (const auto& n : lat.nodes())
    if (n.order() == target) out.push_back(n);
  return out;
}

// Frattini subgroup: intersection of the maximal subgroups.
inline Subgroup frattini(const SubgroupLattice& lat) {
  Subgroup phi = lat.ambient();
  for (const auto& m : lat.maximal_subgroups()) phi = intersect(phi, m);
  return phi;
}

inline Subgroup frattini_of(const SubgroupLattice& lat, const Subgroup& h) {
  Subgroup phi = h;
  for (const auto& m : lat.maximal_subgroups_of(h)) phi = intersect(phi, m);
  return phi;
}

}  // namespace pgt
