#pragma once

#include <vector>

#include "pgt/subgroup.hpp"

namespace pgt {

namespace detail {

// Dense local copy of a small group, index space 0..n-1.
struct LocalGroup {
  int n = 0;
  int id = 0;
  std::vector<int> mul;     // n*n
  std::vector<int> order;

  explicit LocalGroup(const Subgroup& h) {
    const auto& ctx = *h.ctx();
    std::vector<int> idx = h.members().indices();
    n = int(idx.size());
    std::vector<int> pos(ctx.size(), -1);
    for (int i = 0; i < n; ++i) pos[idx[i]] = i;
    mul.resize(std::size_t(n) * n);
    order.resize(n);
    for (int i = 0; i < n; ++i) {
      order[i] = int(ctx.elem_order(idx[i]));
      for (int j = 0; j < n; ++j)
        mul[std::size_t(i) * n + j] = pos[ctx.mul(idx[i], idx[j])];
      if (idx[i] == ctx.identity_index()) id = i;
    }
  }

  int times(int a, int b) const { return mul[std::size_t(a) * n + b]; }

  // Greedy small generating set.
  std::vector<int> small_gens() const {
    std::vector<int> gens;
    std::vector<char> have(n, 0);
    have[id] = 1;
    int have_count = 1;
    while (have_count < n) {
      int next = -1;
      for (int i = 0; i < n; ++i)
        if (!have[i]) {
          next = i;
          break;
        }
      gens.push_back(next);
      std::vector<int> queue;
      for (int i = 0; i < n; ++i)
        if (have[i]) queue.push_back(i);
      have[next] = 1;
      ++have_count;
      queue.push_back(next);
      for (std::size_t qi = 0; qi < queue.size(); ++qi)
        for (int g : gens) {
          int y = times(queue[qi], g);
          if (!have[y]) {
            have[y] = 1;
            ++have_count;
            queue.push_back(y);
          }
        }
    }
    return gens;
  }
};

// Grow the partial map from the images chosen for the first `k` generators.
// Returns false on any conflict. `phi` maps A-indices to B-indices (-1 =
// undefined).
inline bool close_partial_map(const LocalGroup& a, const LocalGroup& b,
                              const std::vector<int>& gens,
                              const std::vector<int>& images, std::size_t k,
                              std::vector<int>& phi) {
  std::fill(phi.begin(), phi.end(), -1);
  std::vector<char> used(b.n, 0);
  phi[a.id] = b.id;
  used[b.id] = 1;
  std::vector<int> domain{a.id};
  for (std::size_t i = 0; i < k; ++i) {
    int x = gens[i], y = images[i];
    if (phi[x] >= 0) {
      if (phi[x] != y) return false;
    } else {
      if (used[y]) return false;
      phi[x] = y;
      used[y] = 1;
      domain.push_back(x);
    }
  }
  for (std::size_t qi = 0; qi < domain.size(); ++qi)
    for (std::size_t i = 0; i < k; ++i) {
      int x = a.times(domain[qi], gens[i]);
      int y = b.times(phi[domain[qi]], images[i]);
      if (phi[x] >= 0) {
        if (phi[x] != y) return false;
      } else {
        if (used[y]) return false;
        phi[x] = y;
        used[y] = 1;
        domain.push_back(x);
      }
    }
  return true;
}

inline bool iso_search(const LocalGroup& a, const LocalGroup& b,
                       const std::vector<int>& gens,
                       std::vector<int>& images, std::size_t k,
                       std::vector<int>& phi) {
  if (k == gens.size()) {
    if (!close_partial_map(a, b, gens, images, k, phi)) return false;
    for (int x = 0; x < a.n; ++x)
      if (phi[x] < 0) return false;
    // Full multiplication check on the completed bijection.
    for (int x = 0; x < a.n; ++x)
      for (int y = 0; y < a.n; ++y)
        if (phi[a.times(x, y)] != b.times(phi[x], phi[y])) return false;
    return true;
  }
  for (int cand = 0; cand < b.n; ++cand) {
    if (b.order[cand] != a.order[gens[k]]) continue;
    images[k] = cand;
    if (!close_partial_map(a, b, gens, images, k + 1, phi)) continue;
    if (iso_search(a, b, gens, images, k + 1, phi)) return true;
  }
  return false;
}

}  // namespace detail

// Generator-image backtracking isomorphism test, admissible for orders up
// to 64 (a single order-24 identification is all the harness needs).
inline bool isomorphic(const Subgroup& a, const Subgroup& b) {
  if (a.order() != b.order()) return false;
  if (a.order() > 64)
    throw error("isomorphism test limited to order <= 64");
  detail::LocalGroup la(a), lb(b);
  std::vector<int> gens = la.small_gens();
  if (gens.empty()) return true;  // both trivial
  std::vector<int> images(gens.size(), -1);
  std::vector<int> phi(la.n, -1);
  return detail::iso_search(la, lb, gens, images, 0, phi);
}

}  // namespace pgt
