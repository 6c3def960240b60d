#pragma once

#include <algorithm>
#include <compare>
#include <numeric>
#include <vector>

#include "pgt/base.hpp"

namespace pgt {

// A bijection on the points 0..degree-1 in image-table form. Points are
// 0-based internally; parsing/printing (catalog module) speaks 1-based
// cycle notation.
class Permutation {
public:
  explicit Permutation(int degree) : img_(degree) {
    if (degree < 1) throw error("permutation degree must be positive");
    std::iota(img_.begin(), img_.end(), 0);
  }

  // `images[i]` is the image of point i (0-based); must be a bijection.
  static Permutation from_images(std::vector<int> images) {
    if (images.empty()) throw error("permutation degree must be positive");
    std::vector<char> seen(images.size(), 0);
    for (int v : images) {
      if (v < 0 || v >= int(images.size()) || seen[v])
        throw error("image table is not a bijection");
      seen[v] = 1;
    }
    Permutation p(int(images.size()));
    p.img_ = std::move(images);
    return p;
  }

  int degree() const { return int(img_.size()); }
  int apply(int i) const { return img_[i]; }
  const std::vector<int>& images() const { return img_; }

  bool is_identity() const {
    for (int i = 0; i < degree(); ++i)
      if (img_[i] != i) return false;
    return true;
  }

  // Smallest point moved by this permutation; -1 for the identity.
  int first_moved() const {
    for (int i = 0; i < degree(); ++i)
      if (img_[i] != i) return i;
    return -1;
  }

  Permutation inverse() const {
    Permutation r(degree());
    for (int i = 0; i < degree(); ++i) r.img_[img_[i]] = i;
    return r;
  }

  auto operator<=>(const Permutation&) const = default;

  std::uint64_t hash() const {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    detail::fnv1a(h, std::uint64_t(img_.size()));
    for (int v : img_) detail::fnv1a(h, std::uint64_t(v));
    return h;
  }

private:
  std::vector<int> img_;
};

// Composition is fixed left-to-right: the result maps i to b(a(i)).
inline Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw error("compose: degree mismatch");
  std::vector<int> img(a.degree());
  for (int i = 0; i < a.degree(); ++i) img[i] = b.apply(a.apply(i));
  return Permutation::from_images(std::move(img));
}

// g^h = h^-1 g h (apply h^-1, then g, then h).
inline Permutation conjugate(const Permutation& g, const Permutation& h) {
  return compose(compose(h.inverse(), g), h);
}

inline Permutation commutator(const Permutation& a, const Permutation& b) {
  return compose(compose(compose(a.inverse(), b.inverse()), a), b);
}

// Least k >= 1 with g^k = identity; the lcm of the cycle lengths.
inline std::uint64_t element_order(const Permutation& g) {
  std::vector<char> seen(g.degree(), 0);
  std::uint64_t ord = 1;
  for (int i = 0; i < g.degree(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    for (int j = i; !seen[j]; j = g.apply(j)) {
      seen[j] = 1;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

inline Permutation power(const Permutation& g, std::uint64_t k) {
  Permutation r(g.degree());
  Permutation base = g;
  while (k) {
    if (k & 1) r = compose(r, base);
    base = compose(base, base);
    k >>= 1;
  }
  return r;
}

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const { return p.hash(); }
};

}  // namespace pgt
