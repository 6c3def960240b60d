#pragma once

#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "pgt/base.hpp"
#include "pgt/permutation.hpp"

namespace pgt {

// Canonically sorted list of permutations with a fingerprint over the list.
// Equality of fingerprints plus lists is set equality.
class ElementSet {
public:
  ElementSet() = default;
  explicit ElementSet(std::vector<Permutation> elems) : elems_(std::move(elems)) {
    std::sort(elems_.begin(), elems_.end());
    elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
  }

  const std::vector<Permutation>& elements() const { return elems_; }
  std::size_t size() const { return elems_.size(); }
  bool contains(const Permutation& p) const {
    return std::binary_search(elems_.begin(), elems_.end(), p);
  }

  // 128-bit FNV-style digest of the sorted image tables, rendered as hex.
  std::string fingerprint() const {
    std::uint64_t h1 = 0xcbf29ce484222325ULL;
    std::uint64_t h2 = 0x84222325cbf29ce4ULL;
    auto mix = [&](std::uint64_t v) {
      detail::fnv1a(h1, v);
      h2 ^= v + 0x9e3779b97f4a7c15ULL + (h2 << 6) + (h2 >> 2);
    };
    for (const auto& p : elems_) {
      mix(std::uint64_t(p.degree()));
      for (int v : p.images()) mix(std::uint64_t(v));
    }
    char buf[33];
    std::snprintf(buf, sizeof buf, "%016llx%016llx",
                  (unsigned long long)h1, (unsigned long long)h2);
    return std::string(buf);
  }

  bool operator==(const ElementSet&) const = default;

private:
  std::vector<Permutation> elems_;
};

// Finitely generated permutation group with a deterministic Schreier-Sims
// stabilizer chain. Each base point is the first point moved by the strong
// generator that created its level; transversals are built by BFS in
// generator order, so the chain (and everything derived from it) is
// reproducible.
class PermGroup {
public:
  PermGroup(int degree, std::vector<Permutation> gens)
      : degree_(degree), gens_(std::move(gens)) {
    if (degree < 1) throw error("group degree must be positive");
    for (const auto& g : gens_)
      if (g.degree() != degree) throw error("generator degree mismatch");
    for (const auto& g : gens_) {
      if (g.is_identity()) continue;
      auto [residue, lv] = sift(g, 0);
      if (!residue.is_identity()) {
        add_strong(residue, lv);
        close(lv);
      }
    }
  }

  explicit PermGroup(std::vector<Permutation> gens)
      : PermGroup(gens.empty()
                      ? throw error("degree required for empty generator list")
                      : gens.front().degree(),
                  std::move(gens)) {}

  int degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return gens_; }

  std::uint64_t order() const {
    std::uint64_t o = 1;
    for (const auto& lv : levels_) o *= lv.transversal.size();
    return o;
  }

  bool is_trivial() const { return levels_.empty(); }

  bool contains(const Permutation& g) const {
    if (g.degree() != degree_) return false;
    return sift(g, 0).first.is_identity();
  }

  // All elements in canonical (lexicographic) order. Guarded by the
  // enumeration budget; never silently truncates.
  std::vector<Permutation> elements(
      std::uint64_t bound = Budgets{}.enumeration_limit) const {
    if (order() > bound)
      throw resource_error("enumeration_limit",
                           "group order " + std::to_string(order()) +
                               " exceeds enumeration bound " +
                               std::to_string(bound));
    std::set<Permutation> out;
    std::vector<Permutation> queue{Permutation(degree_)};
    out.insert(queue.front());
    while (!queue.empty()) {
      Permutation x = std::move(queue.back());
      queue.pop_back();
      for (const auto& g : gens_) {
        Permutation y = compose(x, g);
        if (out.insert(y).second) queue.push_back(std::move(y));
      }
    }
    return std::vector<Permutation>(out.begin(), out.end());
  }

  ElementSet element_set(
      std::uint64_t bound = Budgets{}.enumeration_limit) const {
    return ElementSet(elements(bound));
  }

  // Base points of the stabilizer chain (diagnostics and determinism tests).
  std::vector<int> base() const {
    std::vector<int> b;
    for (const auto& lv : levels_) b.push_back(lv.base);
    return b;
  }

private:
  struct Level {
    int base = 0;
    // Strong generators usable at this level: they fix the base points of
    // every earlier level. A generator inserted at level k appears in the
    // lists of all levels <= k, so each orbit is taken under the full
    // stabilizer, not just the generators discovered at that level.
    std::vector<Permutation> gens;
    std::map<int, Permutation> transversal;     // orbit point -> coset rep
  };

  // Returns (residue, level reached). The residue is identity iff g is in
  // the group certified by the chain so far.
  std::pair<Permutation, std::size_t> sift(Permutation g, std::size_t from) const {
    for (std::size_t lv = from; lv < levels_.size(); ++lv) {
      if (g.is_identity()) return {g, lv};
      int p = g.apply(levels_[lv].base);
      auto it = levels_[lv].transversal.find(p);
      if (it == levels_[lv].transversal.end()) return {g, lv};
      g = compose(g, it->second.inverse());
    }
    return {g, levels_.size()};
  }

  // g fixes the base points of all levels before lv; register it as a
  // strong generator for every level it is usable at.
  void add_strong(const Permutation& g, std::size_t lv) {
    if (lv == levels_.size()) levels_.push_back(Level{g.first_moved(), {}, {}});
    for (std::size_t j = 0; j <= lv; ++j) levels_[j].gens.push_back(g);
  }

  // Re-establish the Schreier condition at levels start, start-1, ..., 0.
  // Whenever a Schreier generator fails to sift past some deeper level, the
  // residue becomes a new strong generator there and processing restarts at
  // that level. Terminates because every insertion grows a stabilizer.
  void close(std::size_t start) {
    std::size_t i = start;
    while (true) {
      rebuild_orbit(i);
      bool restarted = false;
      std::vector<int> points;
      for (const auto& [p, u] : levels_[i].transversal) points.push_back(p);
      const std::size_t ngens = levels_[i].gens.size();
      for (std::size_t pi = 0; pi < points.size() && !restarted; ++pi) {
        for (std::size_t si = 0; si < ngens && !restarted; ++si) {
          const int p = points[pi];
          Permutation u = levels_[i].transversal.at(p);
          Permutation s = levels_[i].gens[si];
          Permutation v = levels_[i].transversal.at(s.apply(p));
          Permutation schreier = compose(compose(u, s), v.inverse());
          auto [residue, at] = sift(std::move(schreier), i + 1);
          if (!residue.is_identity()) {
            add_strong(residue, at);
            i = at;
            restarted = true;
          }
        }
      }
      if (restarted) continue;
      if (i == 0) return;
      --i;
    }
  }

  void rebuild_orbit(std::size_t lv) {
    Level& L = levels_[lv];
    L.transversal.clear();
    L.transversal.emplace(L.base, Permutation(degree_));
    std::vector<int> queue{L.base};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      int p = queue[qi];
      Permutation u = L.transversal.at(p);
      for (const auto& s : L.gens) {
        int q = s.apply(p);
        if (!L.transversal.count(q)) {
          L.transversal.emplace(q, compose(u, s));
          queue.push_back(q);
        }
      }
    }
  }

  int degree_;
  std::vector<Permutation> gens_;
  std::vector<Level> levels_;
};

inline PermGroup group_from_generators(const std::vector<Permutation>& gens,
                                       std::optional<int> degree = {}) {
  if (gens.empty()) {
    if (!degree) throw error("degree required for empty generator list");
    return PermGroup(*degree, {});
  }
  return PermGroup(gens.front().degree(), gens);
}

}  // namespace pgt
