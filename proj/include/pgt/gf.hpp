#pragma once

#include <vector>

#include "pgt/base.hpp"

namespace pgt {

// Small finite field GF(p^m), elements encoded as 0..q-1 (base-p digits are
// the polynomial residue coefficients, constant term first). Irreducible
// polynomials are fixed: t^2+t+1 for GF(4), t^3+t+1 for GF(8), t^2+1 for
// GF(9).
class GaloisField {
public:
  explicit GaloisField(int q) : q_(q) {
    auto f = prime_factors(q);
    if (f.size() != 1) throw error("field size must be a prime power");
    p_ = f[0];
    m_ = 0;
    for (int t = q; t > 1; t /= p_) ++m_;
    std::vector<int> reduction;  // coefficients of t^m in the residue ring
    switch (q) {
      case 4: reduction = {1, 1}; break;        // t^2 = t + 1
      case 8: reduction = {1, 1, 0}; break;     // t^3 = t + 1
      case 9: reduction = {2, 0}; break;        // t^2 = -1 = 2
      default:
        if (m_ != 1) throw error("unsupported field size " + std::to_string(q));
    }
    mul_.assign(std::size_t(q) * q, 0);
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b) mul_[std::size_t(a) * q + b] = mul_slow(a, b, reduction);
    inv_.assign(q, 0);
    for (int a = 1; a < q; ++a)
      for (int b = 1; b < q; ++b)
        if (mul(a, b) == 1) {
          inv_[a] = b;
          break;
        }
  }

  int q() const { return q_; }
  int p() const { return p_; }
  int m() const { return m_; }

  int add(int a, int b) const {
    int r = 0, mult = 1;
    for (int i = 0; i < m_; ++i) {
      r += ((a % p_ + b % p_) % p_) * mult;
      a /= p_;
      b /= p_;
      mult *= p_;
    }
    return r;
  }

  int neg(int a) const {
    int r = 0, mult = 1;
    for (int i = 0; i < m_; ++i) {
      r += ((p_ - a % p_) % p_) * mult;
      a /= p_;
      mult *= p_;
    }
    return r;
  }

  int mul(int a, int b) const { return mul_[std::size_t(a) * q_ + b]; }
  int inv(int a) const {
    if (a == 0) throw error("zero has no inverse");
    return inv_[a];
  }

  int pow(int a, int e) const {
    int r = 1;
    for (int i = 0; i < e; ++i) r = mul(r, a);
    return r;
  }

  int multiplicative_order(int a) const {
    if (a == 0) throw error("zero has no multiplicative order");
    int r = a, ord = 1;
    while (r != 1) {
      r = mul(r, a);
      ++ord;
    }
    return ord;
  }

  // Smallest generator of the multiplicative group.
  int primitive_element() const {
    for (int a = 1; a < q_; ++a)
      if (multiplicative_order(a) == q_ - 1) return a;
    throw error("no primitive element found");
  }

  // The additive basis 1, t, t^2, ... (as encoded values).
  std::vector<int> additive_basis() const {
    std::vector<int> out;
    int v = 1;
    for (int i = 0; i < m_; ++i) {
      out.push_back(v);
      v *= p_;
    }
    return out;
  }

private:
  int mul_slow(int a, int b, const std::vector<int>& reduction) const {
    // Polynomial multiplication followed by reduction mod the fixed
    // irreducible polynomial.
    std::vector<int> da(m_), db(m_), prod(2 * m_ - 1, 0);
    for (int i = 0; i < m_; ++i) {
      da[i] = a % p_;
      a /= p_;
      db[i] = b % p_;
      b /= p_;
    }
    for (int i = 0; i < m_; ++i)
      for (int j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
    for (int d = 2 * m_ - 2; d >= m_; --d) {
      int c = prod[d];
      if (c == 0) continue;
      prod[d] = 0;
      for (int i = 0; i < m_; ++i)
        prod[d - m_ + i] = (prod[d - m_ + i] + c * reduction[i]) % p_;
    }
    int r = 0, mult = 1;
    for (int i = 0; i < m_; ++i) {
      r += prod[i] * mult;
      mult *= p_;
    }
    return r;
  }

  int q_, p_, m_;
  std::vector<int> mul_;
  std::vector<int> inv_;
};

}  // namespace pgt
