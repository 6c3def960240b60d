#pragma once

#include <vector>

#include "pgt/structure.hpp"

namespace pgt {

// U/N realized by the right-coset action of U on the cosets of N. The
// kernel of the action is exactly N (N normal), so the image is an ordinary
// PermGroup isomorphic to the quotient, usable by every downstream
// predicate. Construction is deterministic: cosets are numbered by their
// smallest member.
class QuotientRep {
public:
  QuotientRep(const Subgroup& u, const Subgroup& n) : source_(u), kernel_(n) {
    require_nested(u, n, "quotient");
    if (!is_normal(u, n)) throw error("quotient: subgroup is not normal");
    const auto& ctx = *u.ctx();
    coset_of_.assign(ctx.size(), -1);
    const Bitset& um = u.members();
    const Bitset& nm = n.members();
    for (int g = um.next(0); g >= 0; g = um.next(g + 1)) {
      if (coset_of_[g] >= 0) continue;
      int c = int(coset_rep_.size());
      coset_rep_.push_back(g);  // g is the smallest member of Ng
      for (int x = nm.next(0); x >= 0; x = nm.next(x + 1))
        coset_of_[ctx.mul(x, g)] = c;
    }
    int m = int(coset_rep_.size());
    std::vector<Permutation> image_gens;
    for (int g : u.generator_indices())
      image_gens.push_back(action_of(g));
    image_ = std::make_shared<const PermGroup>(m, image_gens);
    image_ctx_ = make_context(*image_, ctx.budgets());
  }

  const Subgroup& source() const { return source_; }
  const Subgroup& kernel() const { return kernel_; }
  const PermGroup& image() const { return *image_; }
  const ContextPtr& image_ctx() const { return image_ctx_; }
  int num_cosets() const { return int(coset_rep_.size()); }

  // Action of a source element on the cosets.
  Permutation action_of(int g) const {
    const auto& ctx = *source_.ctx();
    int m = int(coset_rep_.size());
    std::vector<int> img(m);
    for (int c = 0; c < m; ++c) img[c] = coset_of_[ctx.mul(coset_rep_[c], g)];
    return Permutation::from_images(std::move(img));
  }

  // Image of a subgroup H <= U: the subgroup HN/N of the quotient.
  Subgroup project(const Subgroup& h) const {
    require_nested(source_, h, "quotient projection");
    Bitset b(image_ctx_->size());
    const Bitset& hm = h.members();
    for (int x = hm.next(0); x >= 0; x = hm.next(x + 1)) {
      int i = image_ctx_->index_of(action_of(x));
      if (i < 0) throw error("quotient projection: image element missing");
      b.set(i);
    }
    return Subgroup(image_ctx_, std::move(b));
  }

  Subgroup image_full() const { return image_ctx_->full(); }

private:
  Subgroup source_;
  Subgroup kernel_;
  std::vector<int> coset_of_;   // context index -> coset id (-1 outside U)
  std::vector<int> coset_rep_;  // coset id -> smallest member
  std::shared_ptr<const PermGroup> image_;
  ContextPtr image_ctx_;
};

inline QuotientRep quotient(const Subgroup& u, const Subgroup& n) {
  return QuotientRep(u, n);
}

}  // namespace pgt
