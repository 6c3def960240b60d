#pragma once

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <set>
#include <sstream>

#include "pgt/catalog.hpp"
#include "pgt/chains.hpp"
#include "pgt/classify.hpp"
#include "pgt/isomorphism.hpp"
#include "pgt/oracles.hpp"
#include "pgt/permutability.hpp"

namespace pgt {

enum class Verdict { pass, fail, skipped };

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    default: return "skipped";
  }
}

struct ClaimResult {
  std::string id;
  std::string anchor;                // where the claim comes from, own words
  std::vector<std::string> groups;   // groups actually tested
  Verdict verdict = Verdict::pass;
  std::string detail;                // counterexample or skip reason
  double seconds = 0;
};

namespace claims_detail {

// Shared per-run state: contexts, lattices and P-subnormality memo tables
// are built once per group and reused by every claim.
class Workspace {
public:
  explicit Workspace(bool slow, Budgets budgets = {})
      : slow_(slow), budgets_(budgets) {}

  bool slow() const { return slow_; }

  ContextPtr ctx(const std::string& name) {
    auto it = ctxs_.find(name);
    if (it != ctxs_.end()) return it->second;
    auto c = make_context(catalog_group(name), budgets_);
    ctxs_.emplace(name, c);
    return c;
  }

  const SubgroupLattice& lattice(const std::string& name) {
    auto it = lats_.find(name);
    if (it != lats_.end()) return *it->second;
    auto lat = std::make_shared<SubgroupLattice>(
        SubgroupLattice::build(ctx(name)->full()));
    lats_.emplace(name, lat);
    return *lat;
  }

  PsnMemo& memo(const std::string& name) {
    auto it = memos_.find(name);
    if (it != memos_.end()) return *it->second;
    auto m = std::make_shared<PsnMemo>(ctx(name)->full());
    memos_.emplace(name, m);
    return *m;
  }

  // Catalog names with group order <= max_order, in catalog order. S6 is
  // listed only under --slow; the caller records the omission.
  std::vector<std::string> names_up_to(std::uint64_t max_order,
                                       bool* s6_omitted = nullptr) {
    std::vector<std::string> out;
    for (const auto& name : catalog_names()) {
      if (name == "S6" && !slow_) {
        if (s6_omitted && max_order >= 720) *s6_omitted = true;
        continue;
      }
      if (ctx(name)->full().order() <= max_order) out.push_back(name);
    }
    return out;
  }

private:
  bool slow_;
  Budgets budgets_;
  std::map<std::string, ContextPtr> ctxs_;
  std::map<std::string, std::shared_ptr<SubgroupLattice>> lats_;
  std::map<std::string, std::shared_ptr<PsnMemo>> memos_;
};

struct Claim {
  ClaimResult res;

  explicit Claim(std::string id, std::string anchor) {
    res.id = std::move(id);
    res.anchor = std::move(anchor);
  }

  void tested(const std::string& group) { res.groups.push_back(group); }

  // Records the first failure; later checks still run but do not overwrite.
  void expect(bool ok, const std::string& counterexample) {
    if (ok || res.verdict == Verdict::fail) return;
    res.verdict = Verdict::fail;
    res.detail = counterexample;
  }
};

// True when H's order equals the full pi(H)-part of |G|, i.e. H is a Hall
// subgroup of G.
inline bool is_hall(const Subgroup& g, const Subgroup& h) {
  return std::gcd(h.order(), g.order() / h.order()) == 1;
}

inline bool strongly_permutable_in_lattice(const SubgroupLattice& lat,
                                           const Subgroup& h) {
  for (const auto& u : lat.overgroups_of(h))
    if (!is_permutable(u, h)) return false;
  return true;
}

// One conjugacy-class representative per Schmidt subgroup: all checks below
// are statements about the subgroup's internal structure or its embedding
// up to conjugacy, so conjugate copies would repeat identical work.
inline std::vector<Subgroup> schmidt_representatives(
    const SubgroupLattice& lat) {
  const auto& ctx = *lat.ambient().ctx();
  auto gens = lat.ambient().generator_indices();
  std::set<Bitset> visited;
  std::vector<Subgroup> reps;
  for (const auto& n : lat.nodes()) {
    if (visited.count(n.members())) continue;
    // mark the whole conjugacy orbit of this node
    std::vector<Bitset> orbit{n.members()};
    visited.insert(n.members());
    for (std::size_t qi = 0; qi < orbit.size(); ++qi)
      for (int g : gens) {
        Bitset c(ctx.size());
        for (int x : orbit[qi].indices()) c.set(ctx.conj(x, g));
        if (visited.insert(c).second) orbit.push_back(std::move(c));
      }
    if (schmidt_structure(lat, n)) reps.push_back(n);
  }
  return reps;
}

// The full structural battery for one Schmidt subgroup s of lat's ambient
// group: normal-Sylow decomposition, the abelian/nonabelian shape of P, the
// central q-th power of Q's generator, the two conjugacy classes of maximal
// subgroups, the membership lemma for elements whose order misses |y|, and
// the permutizer statements distinguishing the supersoluble case.
inline void schmidt_battery(Claim& c, const std::string& gname,
                            const SubgroupLattice& lat, const Subgroup& s) {
  auto where = [&](const std::string& what) {
    return gname + ": Schmidt subgroup " + s.fingerprint() + " (order " +
           std::to_string(s.order()) + "): " + what;
  };
  auto st = schmidt_structure(lat, s);
  c.expect(st.has_value(), where("structure extraction failed"));
  if (!st) return;
  const Subgroup& P = st->p_part;
  const Subgroup& Q = st->q_part;
  const int p = st->p, q = st->q;
  const auto& ctx = *s.ctx();

  c.expect(is_normal(s, P) && !is_normal(s, Q),
           where("Sylow normality pattern wrong"));

  // (1.4) Q = <y> cyclic with y^q central in s.
  auto qgens = Q.generator_indices();
  c.expect(qgens.size() == 1 && ctx.cyclic_of(qgens[0]) >= 0 &&
               ctx.cyclic_subgroups()[ctx.cyclic_of(qgens[0])].members ==
                   Q.members(),
           where("Q is not cyclic"));
  int y = qgens[0];
  int yq = y;
  for (int i = 1; i < q; ++i) yq = ctx.mul(yq, y);
  Subgroup zs = center(s);
  c.expect(zs.contains_index(yq), where("y^q is not central"));

  bool abelian = derived_subgroup(P).is_trivial();
  // multiplicative order of p mod q
  int m = 1;
  for (std::uint64_t v = p % q; v != 1; v = v * p % q) ++m;
  if (abelian) {
    // (1.1) elementary abelian of order p^m
    c.expect(exponent(P) == p, where("abelian P is not elementary abelian"));
    std::uint64_t pm = 1;
    for (int i = 0; i < m; ++i) pm *= p;
    c.expect(P.order() == pm, where("|P| != p^(order of p mod q)"));
  } else {
    // (1.2) Z(P) = P' = Phi(P) and |P/Z(P)| = p^m
    Subgroup zp = center(P);
    Subgroup dp = derived_subgroup(P);
    Subgroup fp = frattini_of(lat, P);
    c.expect(zp.members() == dp.members() && dp.members() == fp.members(),
             where("Z(P), P' and Phi(P) differ"));
    std::uint64_t pm = 1;
    for (int i = 0; i < m; ++i) pm *= p;
    c.expect(P.order() / zp.order() == pm, where("|P/Z(P)| != p^m"));
  }
  // (1.3) exponent of P
  if (p > 2)
    c.expect(exponent(P) == p, where("odd P has exponent != p"));
  else
    c.expect(exponent(P) <= 4, where("2-group P has exponent > 4"));

  // (2) maximal subgroups: {P x <y^q>} and the conjugates of Phi(P) x Q.
  Subgroup phiP = frattini_of(lat, P);
  Subgroup m1 = join(P, subgroup_generated(s.ctx(), {yq}));
  Subgroup m2 = join(phiP, Q);
  std::set<Bitset> m2_class;
  {
    std::vector<Bitset> orbit{m2.members()};
    std::set<Bitset> seen{m2.members()};
    for (std::size_t qi = 0; qi < orbit.size(); ++qi)
      for (int g : s.generator_indices()) {
        Bitset cb(ctx.size());
        for (int x : orbit[qi].indices()) cb.set(ctx.conj(x, g));
        if (seen.insert(cb).second) orbit.push_back(std::move(cb));
      }
    m2_class = std::move(seen);
  }
  for (const auto& mx : lat.maximal_subgroups_of(s))
    c.expect(mx.members() == m1.members() || m2_class.count(mx.members()) > 0,
             where("maximal subgroup outside the two expected classes"));
  c.expect(index(s, m1) == std::uint64_t(q),
           where("P x <y^q> does not have index q"));

  // Membership lemma: |y| does not divide |x|  =>  x in P x <y^q>.
  int ylen = ctx.elem_order(y);
  for (int x : s.members().indices())
    if (ctx.elem_order(x) % ylen != 0)
      c.expect(m1.contains_index(x),
               where("element outside P x <y^q> despite order condition"));

  bool ss = st->supersoluble;
  if (ss) {
    // supersoluble Schmidt shape: |P| = p, Q cyclic of order q^b, q | p-1
    c.expect(P.order() == std::uint64_t(p), where("supersoluble but |P| > p"));
    c.expect((p - 1) % q == 0, where("supersoluble but q does not divide p-1"));
    // every subgroup strongly permutable in s
    for (const auto& h : lat.subgroups_of(s))
      c.expect(is_strongly_permutable(s, h).holds,
               where("subgroup not strongly permutable in supersoluble case"));
  } else {
    // (2.1) Q not permutable; N_s(Q) = P_s(Q) = Phi(P) x Q, maximal in s
    Subgroup nq = normalizer(s, Q);
    Subgroup pq = permutizer(s, Q).permutizer;
    c.expect(!is_permutable(s, Q), where("Q permutable in non-ss case"));
    c.expect(nq.members() == pq.members() && pq.members() == m2.members(),
             where("N(Q) = P(Q) = Phi(P) x Q fails"));
    bool m2_maximal = false;
    for (const auto& mx : lat.maximal_subgroups_of(s))
      if (mx.members() == m2.members()) m2_maximal = true;
    c.expect(m2_maximal, where("Phi(P) x Q is not maximal"));
    // (2.2) H <= P with P_s(H) = s forces H = P or H <= Phi(s)
    Subgroup phiS = frattini_of(lat, s);
    for (const auto& h : lat.subgroups_of(P))
      if (permutizer(s, h).permutizer.members() == s.members())
        c.expect(h.members() == P.members() ||
                     h.members().is_subset_of(phiS.members()),
                 where("permutable subgroup of P neither P nor in Phi(s)"));
    // (2.3) primary permutable subgroups are normal, hence strongly perm.
    for (const auto& h : lat.subgroups_of(s))
      if (h.order() > 1 && is_prime_power(h.order()) && is_permutable(s, h)) {
        c.expect(is_normal(s, h), where("primary permutable but not normal"));
        c.expect(is_strongly_permutable(s, h).holds,
                 where("primary permutable but not strongly permutable"));
      }
  }
  // (3) supersoluble  <=>  all prime-order and cyclic order-4 subgroups
  // strongly permutable.
  bool all_small_sp = true;
  for (const auto& cs : ctx.cyclic_subgroups()) {
    if (!cs.members.is_subset_of(s.members())) continue;
    if (!(is_prime(cs.order) || cs.order == 4)) continue;
    if (!is_strongly_permutable(s, Subgroup(s.ctx(), cs.members)).holds) {
      all_small_sp = false;
      break;
    }
  }
  c.expect(all_small_sp == ss,
           where("small-subgroup strong permutability mismatch"));
}

}  // namespace claims_detail

inline std::vector<ClaimResult> run_claims(
    const std::vector<std::string>& only = {}, bool slow = false,
    Budgets budgets = {}) {
  using claims_detail::Claim;
  using claims_detail::Workspace;
  Workspace ws(slow, budgets);

  auto wanted = [&](const std::string& id) {
    if (only.empty()) return true;
    return std::find(only.begin(), only.end(), id) != only.end();
  };

  std::vector<ClaimResult> results;
  auto run = [&](const std::string& id, const std::string& anchor,
                 const std::function<void(Claim&)>& body) {
    if (!wanted(id)) return;
    Claim c(id, anchor);
    auto t0 = std::chrono::steady_clock::now();
    try {
      body(c);
    } catch (const resource_error& e) {
      c.res.verdict = Verdict::skipped;
      c.res.detail = std::string("budget '") + e.budget() + "': " + e.what();
    }
    c.res.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    results.push_back(std::move(c.res));
  };

  run("C1",
      "Sec. 1 remark: in the symmetric groups of degree 3, 4 and 6 a Sylow "
      "2-subgroup is strongly permutable but not quasinormal.",
      [&](Claim& c) {
        std::vector<std::string> names{"S3", "S4"};
        if (ws.slow()) names.push_back("S6");
        else c.res.detail = "S6 omitted without --slow";
        for (const auto& name : names) {
          c.tested(name);
          auto g = ws.ctx(name)->full();
          auto syl2 = sylow_subgroup(g, 2);
          c.expect(is_strongly_permutable(g, syl2).holds,
                   name + ": Sylow 2 not strongly permutable");
          c.expect(!is_quasinormal(ws.lattice(name), syl2),
                   name + ": Sylow 2 quasinormal");
        }
      });

  run("C2",
      "Proposition 1: in a soluble group, a Hall subgroup is P-subnormal "
      "exactly when it is strongly permutable.",
      [&](Claim& c) {
        for (const auto& name : ws.names_up_to(360)) {
          auto g = ws.ctx(name)->full();
          if (!is_soluble(g)) continue;
          c.tested(name);
          const auto& lat = ws.lattice(name);
          auto& memo = ws.memo(name);
          for (const auto& h : lat.nodes()) {
            if (!claims_detail::is_hall(g, h)) continue;
            bool psn = memo.verdict(h);
            bool sp = claims_detail::strongly_permutable_in_lattice(lat, h);
            c.expect(psn == sp, name + ": Hall subgroup " + h.fingerprint() +
                                    " (order " + std::to_string(h.order()) +
                                    ") psn=" + std::to_string(psn) +
                                    " sp=" + std::to_string(sp));
          }
        }
      });

  run("C3",
      "Corollary 2: if every Sylow subgroup is P-subnormal or strongly "
      "permutable then G is in wU; conversely in wU every Sylow subgroup is "
      "both P-subnormal and strongly permutable.",
      [&](Claim& c) {
        for (const auto& name : ws.names_up_to(360)) {
          c.tested(name);
          auto g = ws.ctx(name)->full();
          auto& memo = ws.memo(name);
          bool hyp = true, wu = true, both = true;
          for (int p : prime_set(g).primes()) {
            auto syl = sylow_subgroup(g, p);
            bool psn = memo.verdict(syl);
            bool sp = is_strongly_permutable(g, syl).holds;
            hyp = hyp && (psn || sp);
            wu = wu && psn;
            both = both && psn && sp;
          }
          c.expect(!hyp || wu, name + ": hypothesis holds but not in wU");
          c.expect(!wu || both,
                   name + ": in wU but some Sylow not both psn and sp");
        }
      });

  run("C4",
      "Corollary 3: a group is supersoluble iff every Hall subgroup is "
      "P-subnormal or strongly permutable, iff every Hall subgroup is "
      "P-subnormal or permutable (soluble groups tested).",
      [&](Claim& c) {
        for (const auto& name : ws.names_up_to(360)) {
          auto g = ws.ctx(name)->full();
          if (!is_soluble(g)) continue;
          c.tested(name);
          const auto& lat = ws.lattice(name);
          auto& memo = ws.memo(name);
          bool ss = is_supersoluble(g);
          bool all_sp = true, all_perm = true;
          for (const auto& h : lat.nodes()) {
            if (!claims_detail::is_hall(g, h)) continue;
            bool psn = memo.verdict(h);
            if (!psn && !claims_detail::strongly_permutable_in_lattice(lat, h))
              all_sp = false;
            if (!psn && !is_permutable(g, h)) all_perm = false;
            if (!all_sp && !all_perm) break;
          }
          c.expect(ss == all_sp, name + ": supersoluble=" + std::to_string(ss) +
                                     " but Hall psn-or-strongly-permutable=" +
                                     std::to_string(all_sp));
          c.expect(ss == all_perm, name + ": supersoluble=" +
                                       std::to_string(ss) +
                                       " but Hall psn-or-permutable=" +
                                       std::to_string(all_perm));
        }
      });

  run("C5",
      "Theorem 1: among the simple groups tested, the Sylow 2-subgroup is "
      "P-subnormal in L2(7), L2(11) and A5; it is strongly permutable only "
      "in L2(7); no odd-order Sylow subgroup is P-subnormal in any of them.",
      [&](Claim& c) {
        for (const std::string name : {"L2(7)", "L2(11)", "A5"}) {
          c.tested(name);
          auto g = ws.ctx(name)->full();
          auto& memo = ws.memo(name);
          auto syl2 = sylow_subgroup(g, 2);
          c.expect(memo.verdict(syl2), name + ": Sylow 2 not P-subnormal");
          auto sp = is_strongly_permutable(g, syl2);
          if (name == "L2(7)") {
            c.expect(sp.holds, name + ": Sylow 2 not strongly permutable");
          } else {
            c.expect(!sp.holds, name + ": Sylow 2 strongly permutable");
            c.expect(sp.failing_overgroup &&
                         sp.failing_overgroup->order() == 60,
                     name + ": smallest failing overgroup is not of order 60");
          }
          if (name == "A5")
            c.expect(!is_permutable(g, syl2), name + ": Sylow 2 permutable");
          for (int p : prime_set(g).primes())
            if (p > 2)
              c.expect(!memo.verdict(sylow_subgroup(g, p)),
                       name + ": odd Sylow " + std::to_string(p) +
                           " is P-subnormal");
        }
      });

  run("C6",
      "Examples 1-3: in L2(8) a Hall {2,7}-subgroup is strongly permutable "
      "but not P-subnormal; in L2(9) a Sylow 2-subgroup is strongly "
      "permutable but not P-subnormal; in L2(5) a Sylow 2-subgroup is "
      "P-subnormal but not permutable.",
      [&](Claim& c) {
        {
          c.tested("L2(8)");
          auto g = ws.ctx("L2(8)")->full();
          auto hall = normalizer(g, sylow_subgroup(g, 2));
          c.expect(hall.order() == 56 && claims_detail::is_hall(g, hall),
                   "L2(8): constructed subgroup is not a Hall {2,7}-subgroup");
          c.expect(is_strongly_permutable(g, hall).holds,
                   "L2(8): Hall {2,7} not strongly permutable");
          c.expect(!ws.memo("L2(8)").verdict(hall),
                   "L2(8): Hall {2,7} is P-subnormal");
        }
        {
          c.tested("L2(9)");
          auto g = ws.ctx("L2(9)")->full();
          auto syl2 = sylow_subgroup(g, 2);
          c.expect(is_strongly_permutable(g, syl2).holds,
                   "L2(9): Sylow 2 not strongly permutable");
          c.expect(!ws.memo("L2(9)").verdict(syl2),
                   "L2(9): Sylow 2 is P-subnormal");
        }
        {
          c.tested("L2(5)");
          auto g = ws.ctx("L2(5)")->full();
          auto syl2 = sylow_subgroup(g, 2);
          c.expect(ws.memo("L2(5)").verdict(syl2),
                   "L2(5): Sylow 2 not P-subnormal");
          c.expect(!is_permutable(g, syl2), "L2(5): Sylow 2 permutable");
        }
      });

  run("C7",
      "Lemma on the largest prime: for r the largest prime divisor of |G| "
      "and R a Sylow r-subgroup, the permutizer of R equals its normalizer.",
      [&](Claim& c) {
        bool s6_omitted = false;
        for (const auto& name :
             ws.names_up_to(std::uint64_t(-1), &s6_omitted)) {
          c.tested(name);
          auto g = ws.ctx(name)->full();
          if (g.order() == 1) continue;
          int r = prime_set(g).primes().back();
          auto syl = sylow_subgroup(g, r);
          c.expect(normalizer(g, syl).members() ==
                       permutizer(g, syl).permutizer.members(),
                   name + ": N(R) != P(R) for r=" + std::to_string(r));
        }
        if (s6_omitted) c.res.detail = "S6 omitted without --slow";
      });

  run("C8",
      "Lemma on O_r containment: for r the largest prime divisor of |G| and "
      "every P-subnormal subgroup H, the r-core of H lies in the r-core of "
      "G.",
      [&](Claim& c) {
        for (const auto& name : ws.names_up_to(360)) {
          c.tested(name);
          auto g = ws.ctx(name)->full();
          if (g.order() == 1) continue;
          int r = prime_set(g).primes().back();
          auto org = p_core(g, r);
          auto& memo = ws.memo(name);
          for (const auto& h : ws.lattice(name).nodes()) {
            if (!memo.verdict(h)) continue;
            c.expect(p_core(h, r).members().is_subset_of(org.members()),
                     name + ": O_r(H) not inside O_r(G) for H " +
                         h.fingerprint());
          }
        }
      });

  run("C9",
      "Corollaries 4-5: a P-subnormal Sylow r-subgroup with r > 2 forces "
      "r-solubility; P-subnormal Sylow 3- and 5-subgroups force solubility.",
      [&](Claim& c) {
        bool s6_omitted = false;
        for (const auto& name :
             ws.names_up_to(std::uint64_t(-1), &s6_omitted)) {
          c.tested(name);
          auto g = ws.ctx(name)->full();
          auto& memo = ws.memo(name);
          for (int r : prime_set(g).primes())
            if (r > 2 && memo.verdict(sylow_subgroup(g, r)))
              c.expect(is_r_soluble(g, r),
                       name + ": Sylow " + std::to_string(r) +
                           " P-subnormal but G not r-soluble");
          if (memo.verdict(sylow_subgroup(g, 3)) &&
              memo.verdict(sylow_subgroup(g, 5)))
            c.expect(is_soluble(g),
                     name + ": Sylow 3 and 5 P-subnormal but G not soluble");
        }
        if (s6_omitted) c.res.detail = "S6 omitted without --slow";
      });

  run("C10",
      "Sec. 4 Schmidt-group lemmas: normal-Sylow structure, the two maximal "
      "classes, the central q-th power, the membership lemma for element "
      "orders, and the permutizer statements separating the supersoluble "
      "case; checked on S3, A4, SL(2,3) and every Schmidt subgroup found in "
      "catalog lattices.",
      [&](Claim& c) {
        for (const std::string name : {"S3", "A4", "SL(2,3)"}) {
          c.tested(name);
          const auto& lat = ws.lattice(name);
          claims_detail::schmidt_battery(c, name, lat, lat.ambient());
        }
        for (const auto& name : ws.names_up_to(360)) {
          const auto& lat = ws.lattice(name);
          auto reps = claims_detail::schmidt_representatives(lat);
          if (reps.empty()) continue;
          c.tested(name + "[" + std::to_string(reps.size()) +
                   (reps.size() == 1 ? " class]" : " classes]"));
          for (const auto& s : reps) claims_detail::schmidt_battery(c, name, lat, s);
        }
      });

  run("C11",
      "Theorem 2 (contrapositive): every catalog group that is not "
      "supersoluble contains a primary cyclic subgroup that is not strongly "
      "permutable.",
      [&](Claim& c) {
        for (const auto& name : ws.names_up_to(360)) {
          auto g = ws.ctx(name)->full();
          if (is_supersoluble(g)) continue;
          c.tested(name);
          bool found = false;
          for (const auto& cs : g.ctx()->cyclic_subgroups()) {
            if (cs.order == 1 || !is_prime_power(cs.order)) continue;
            if (!is_strongly_permutable(g, Subgroup(g.ctx(), cs.members))
                     .holds) {
              found = true;
              break;
            }
          }
          c.expect(found,
                   name + ": not supersoluble yet all primary cyclic "
                          "subgroups strongly permutable");
        }
      });

  run("C12",
      "Theorem 3 (contrapositive): every catalog group outside vU contains "
      "a primary cyclic subgroup that is neither P-subnormal nor strongly "
      "permutable.",
      [&](Claim& c) {
        for (const auto& name : ws.names_up_to(360)) {
          auto g = ws.ctx(name)->full();
          auto& memo = ws.memo(name);
          if (in_vU(g, &memo)) continue;
          c.tested(name);
          bool found = false;
          for (const auto& cs : g.ctx()->cyclic_subgroups()) {
            if (cs.order == 1 || !is_prime_power(cs.order)) continue;
            Subgroup h(g.ctx(), cs.members);
            if (!memo.verdict(h) && !is_strongly_permutable(g, h).holds) {
              found = true;
              break;
            }
          }
          c.expect(found,
                   name + ": outside vU yet every primary cyclic subgroup "
                          "is P-subnormal or strongly permutable");
        }
      });

  run("C13",
      "Examples 4-5: in A4 every subgroup of order 2 is P-subnormal but not "
      "permutable; in L2(7) every subgroup of order 3 is permutable but not "
      "P-subnormal.",
      [&](Claim& c) {
        {
          c.tested("A4");
          auto g = ws.ctx("A4")->full();
          auto& memo = ws.memo("A4");
          int n = 0;
          for (const auto& cs : g.ctx()->cyclic_subgroups()) {
            if (cs.order != 2) continue;
            ++n;
            Subgroup h(g.ctx(), cs.members);
            c.expect(memo.verdict(h), "A4: order-2 subgroup not P-subnormal");
            c.expect(!is_permutable(g, h), "A4: order-2 subgroup permutable");
          }
          c.expect(n == 3, "A4: expected 3 subgroups of order 2");
        }
        {
          c.tested("L2(7)");
          auto g = ws.ctx("L2(7)")->full();
          auto& memo = ws.memo("L2(7)");
          int n = 0;
          for (const auto& cs : g.ctx()->cyclic_subgroups()) {
            if (cs.order != 3) continue;
            ++n;
            Subgroup h(g.ctx(), cs.members);
            c.expect(is_permutable(g, h),
                     "L2(7): order-3 subgroup not permutable");
            c.expect(!memo.verdict(h), "L2(7): order-3 subgroup P-subnormal");
          }
          c.expect(n == 28, "L2(7): expected 28 subgroups of order 3");
        }
      });

  run("C14",
      "Lemma on supersoluble groups: every subgroup of a supersoluble group "
      "is P-subnormal.",
      [&](Claim& c) {
        for (const auto& name : ws.names_up_to(360)) {
          auto g = ws.ctx(name)->full();
          if (!is_supersoluble(g)) continue;
          c.tested(name);
          for (const auto& [h, psn] : p_subnormal_sweep(ws.lattice(name)))
            c.expect(psn, name + ": subgroup " + h.fingerprint() +
                              " not P-subnormal");
        }
      });

  run("C15",
      "Lemma on p-groups of exponent p: for every non-central element x, the "
      "permutizer of <x> equals its normalizer and <x> is not permutable.",
      [&](Claim& c) {
        for (const std::string name : {"H27", "H125"}) {
          c.tested(name);
          auto g = ws.ctx(name)->full();
          auto z = center(g);
          for (const auto& cs : g.ctx()->cyclic_subgroups()) {
            if (cs.members.is_subset_of(z.members())) continue;
            Subgroup h(g.ctx(), cs.members);
            auto pz = permutizer(g, h).permutizer;
            c.expect(pz.members() == normalizer(g, h).members(),
                     name + ": P(<x>) != N(<x>) for a non-central x");
            c.expect(pz.order() < g.order(),
                     name + ": <x> permutable for a non-central x");
          }
        }
      });

  run("C16",
      "Lemma on maximal complements: in a soluble group, if M is maximal "
      "and G = MC for a cyclic subgroup C, then the index of M is a prime "
      "or 4, and in the index-4 case G modulo the core of M is isomorphic "
      "to S4.",
      [&](Claim& c) {
        ContextPtr s4ctx;  // reference copy of S4 for the isomorphism check
        for (const auto& name : ws.names_up_to(360)) {
          auto g = ws.ctx(name)->full();
          if (!is_soluble(g)) continue;
          c.tested(name);
          for (const auto& m : ws.lattice(name).maximal_subgroups()) {
            std::uint64_t idx = index(g, m);
            for (const auto& cs : g.ctx()->cyclic_subgroups()) {
              if (cs.order < idx) continue;  // product cannot reach |G|
              if (product_bitset(*g.ctx(), m.members(), cs.members).count() !=
                  g.order())
                continue;
              c.expect(is_prime(idx) || idx == 4,
                       name + ": cyclic complement with index " +
                           std::to_string(idx));
              if (idx == 4) {
                if (!s4ctx) s4ctx = ws.ctx("S4");
                auto q = quotient(g, core(g, m));
                c.expect(isomorphic(q.image_full(), s4ctx->full()),
                         name + ": index-4 quotient by the core is not S4");
              }
              break;  // one witness per maximal subgroup suffices
            }
          }
        }
      });

  run("C17",
      "Oracle agreement: the permutizer, P-subnormality and strong "
      "permutability procedures match definition-literal brute-force "
      "oracles on every subgroup of every catalog group of order at most "
      "100.",
      [&](Claim& c) {
        for (const auto& name : ws.names_up_to(100)) {
          c.tested(name);
          auto g = ws.ctx(name)->full();
          const auto& lat = ws.lattice(name);
          auto& memo = ws.memo(name);
          for (const auto& h : lat.nodes()) {
            c.expect(permutizer(g, h).permutizer.members() ==
                         oracle::permutizer(g, h).members(),
                     name + ": permutizer mismatch on " + h.fingerprint());
            c.expect(memo.verdict(h) == oracle::is_p_subnormal(lat, g, h),
                     name + ": P-subnormality mismatch on " + h.fingerprint());
            c.expect(is_strongly_permutable(g, h).holds ==
                         oracle::is_strongly_permutable(lat, g, h),
                     name + ": strong permutability mismatch on " +
                         h.fingerprint());
          }
        }
      });

  return results;
}

inline std::string render_claims_text(const std::vector<ClaimResult>& results) {
  std::ostringstream out;
  for (const auto& r : results) {
    out << r.id << ": " << verdict_name(r.verdict);
    if (!r.detail.empty()) out << " (" << r.detail << ")";
    out << "\n    " << r.anchor << "\n    groups:";
    for (const auto& g : r.groups) out << " " << g;
    out << "\n";
  }
  return out.str();
}

}  // namespace pgt
