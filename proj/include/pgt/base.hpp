#pragma once

#include <cstdint>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace pgt {

// Thrown on contract violations (degree mismatch, bad arguments, ...).
class error : public std::runtime_error {
public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when a computation would exceed a configured budget. Carries the
// name of the budget so callers can report it.
class resource_error : public error {
public:
  resource_error(const std::string& budget, const std::string& what)
      : error(what), budget_(budget) {}
  const std::string& budget() const { return budget_; }

private:
  std::string budget_;
};

class parse_error : public error {
public:
  parse_error(int line, int column, const std::string& what)
      : error("line " + std::to_string(line) + ", col " +
              std::to_string(column) + ": " + what),
        line_(line), column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

private:
  int line_;
  int column_;
};

struct Budgets {
  std::uint64_t enumeration_limit = 100000;  // max elements listed per group
  std::uint64_t lattice_max_order = 1000;    // max |G| for lattice machinery
  std::size_t lattice_max_nodes = 200000;    // max subgroup-lattice nodes
};

namespace detail {

inline void fnv1a(std::uint64_t& h, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) {
    h ^= (v >> (8 * i)) & 0xff;
    h *= 0x100000001b3ULL;
  }
}

}  // namespace detail

// Fixed-size bit vector over a group's canonical element order. The word
// count is determined once by the ambient group order.
class Bitset {
public:
  Bitset() : nbits_(0) {}
  explicit Bitset(int nbits) : nbits_(nbits), w_((nbits + 63) / 64, 0) {}

  int nbits() const { return nbits_; }
  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  void set(int i) { w_[i >> 6] |= std::uint64_t(1) << (i & 63); }
  void reset(int i) { w_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }

  int count() const {
    int c = 0;
    for (auto w : w_) c += __builtin_popcountll(w);
    return c;
  }

  bool is_subset_of(const Bitset& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }

  Bitset operator&(const Bitset& o) const {
    Bitset r(nbits_);
    for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] & o.w_[i];
    return r;
  }
  Bitset operator|(const Bitset& o) const {
    Bitset r(nbits_);
    for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] | o.w_[i];
    return r;
  }

  bool operator==(const Bitset& o) const = default;

  // Deterministic total order (word-lexicographic); used for tie-breaking.
  bool operator<(const Bitset& o) const {
    if (nbits_ != o.nbits_) return nbits_ < o.nbits_;
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] != o.w_[i]) return w_[i] < o.w_[i];
    return false;
  }

  std::uint64_t hash() const {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    detail::fnv1a(h, std::uint64_t(nbits_));
    for (auto w : w_) detail::fnv1a(h, w);
    return h;
  }

  // Index of first set bit at or after `from`; -1 if none.
  int next(int from) const {
    for (int i = from; i < nbits_;) {
      std::uint64_t w = w_[i >> 6] >> (i & 63);
      if (w) return i + __builtin_ctzll(w);
      i = (i | 63) + 1;
    }
    return -1;
  }

  std::vector<int> indices() const {
    std::vector<int> out;
    out.reserve(count());
    for (int i = next(0); i >= 0; i = next(i + 1)) out.push_back(i);
    return out;
  }

private:
  int nbits_;
  std::vector<std::uint64_t> w_;
};

struct BitsetHash {
  std::size_t operator()(const Bitset& b) const { return b.hash(); }
};

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::vector<int> prime_factors(std::uint64_t n) {
  std::vector<int> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(int(d));
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(int(n));
  return out;
}

// p-part of n: the largest power of p dividing n.
inline std::uint64_t p_part(std::uint64_t n, int p) {
  std::uint64_t r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

inline bool is_prime_power(std::uint64_t n, int* base = nullptr) {
  if (n < 2) return false;
  auto f = prime_factors(n);
  if (f.size() != 1) return false;
  if (base) *base = f[0];
  return true;
}

}  // namespace pgt
