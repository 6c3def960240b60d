// Command-line front end: classification, predicate checks, permutizers,
// lattice dumps and the claim-verification suite.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pgt/claims.hpp"

namespace {

using nlohmann::json;
using namespace pgt;

// exit codes per the CLI contract
constexpr int kTrue = 0;
constexpr int kFalse = 1;
constexpr int kUsage = 2;
constexpr int kResource = 3;

struct Options {
  bool json = false;
  bool certificate = false;
  bool slow = false;
  Budgets budgets;
};

// A group specifier is a catalog name or a path to a group file.
ContextPtr resolve_group(const std::string& spec, const Budgets& budgets) {
  const auto& names = catalog_names();
  if (std::find(names.begin(), names.end(), spec) != names.end())
    return make_context(catalog_group(spec), budgets);
  std::ifstream in(spec);
  if (!in) throw error("'" + spec + "' is neither a catalog name nor a file");
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return make_context(parse_group_file(text), budgets);
}

std::string gens_string(const Subgroup& h) {
  std::string out;
  for (const auto& p : h.generators()) {
    if (!out.empty()) out += ", ";
    out += cycle_string(p);
  }
  if (out.empty()) out = "()";
  return out;
}

json subgroup_json(const Subgroup& h) {
  return json{{"order", h.order()},
              {"fingerprint", h.fingerprint()},
              {"generators", gens_string(h)}};
}

int cmd_classify(const std::string& gspec, const Options& opt) {
  auto ctx = resolve_group(gspec, opt.budgets);
  auto r = classify_group(ctx->full(), gspec);
  if (opt.json) {
    json j{{"group", r.group_id},
           {"order", r.order},
           {"soluble", r.soluble},
           {"nilpotent", r.nilpotent},
           {"supersoluble", r.supersoluble},
           {"in_wU", r.in_wU},
           {"in_vU", r.in_vU},
           {"schmidt", r.is_schmidt},
           {"minimal_non_supersoluble", r.is_min_non_supersoluble},
           {"sylow_tower_supersoluble", r.sylow_tower_supersoluble},
           {"simple", r.simple}};
    json rs = json::object();
    for (const auto& [p, v] : r.r_soluble) rs[std::to_string(p)] = v;
    j["r_soluble"] = rs;
    j["witnesses"] = r.witnesses;
    std::cout << j.dump(2) << "\n";
    return kTrue;
  }
  auto flag = [](bool b) { return b ? "true" : "false"; };
  std::cout << "group: " << r.group_id << "\norder: " << r.order << "\n";
  std::cout << "soluble: " << flag(r.soluble) << "\n";
  std::cout << "nilpotent: " << flag(r.nilpotent) << "\n";
  std::cout << "supersoluble: " << flag(r.supersoluble) << "\n";
  std::cout << "in_wU: " << flag(r.in_wU) << "\n";
  std::cout << "in_vU: " << flag(r.in_vU) << "\n";
  std::cout << "schmidt: " << flag(r.is_schmidt) << "\n";
  std::cout << "minimal_non_supersoluble: " << flag(r.is_min_non_supersoluble)
            << "\n";
  std::cout << "sylow_tower_supersoluble: "
            << flag(r.sylow_tower_supersoluble) << "\n";
  std::cout << "simple: " << flag(r.simple) << "\n";
  for (const auto& [p, v] : r.r_soluble)
    std::cout << p << "-soluble: " << flag(v) << "\n";
  for (const auto& [k, v] : r.witnesses)
    std::cout << "witness " << k << ": " << v << "\n";
  return kTrue;
}

int cmd_permutizer(const std::string& gspec, const std::string& hspec,
                   const Options& opt) {
  auto ctx = resolve_group(gspec, opt.budgets);
  auto g = ctx->full();
  auto h = resolve_subgroup(ctx, hspec);
  auto rep = permutizer(g, h);
  if (opt.json) {
    json j{{"group", gspec},
           {"subgroup", subgroup_json(h)},
           {"permutizer", subgroup_json(rep.permutizer)}};
    if (opt.certificate) {
      json w = json::array();
      for (int x : rep.witnesses) w.push_back(cycle_string(ctx->perm(x)));
      j["witnesses"] = w;
    }
    std::cout << j.dump(2) << "\n";
    return kTrue;
  }
  std::cout << "subgroup: order " << h.order() << ", gens " << gens_string(h)
            << "\n";
  std::cout << "permutizer: order " << rep.permutizer.order() << ", gens "
            << gens_string(rep.permutizer) << "\n";
  if (opt.certificate) {
    std::cout << "witness cyclic generators:";
    for (int x : rep.witnesses) std::cout << " " << cycle_string(ctx->perm(x));
    std::cout << "\n";
  }
  return kTrue;
}

int cmd_check(const std::string& pred, const std::string& gspec,
              const std::string& hspec, const Options& opt) {
  if (pred == "permutizer") return cmd_permutizer(gspec, hspec, opt);
  auto ctx = resolve_group(gspec, opt.budgets);
  auto g = ctx->full();
  auto h = resolve_subgroup(ctx, hspec);

  bool verdict = false;
  json cert;
  std::string cert_text;
  if (pred == "permutable") {
    auto rep = permutizer(g, h);
    verdict = rep.permutizer.order() == g.order();
    if (!verdict) {
      cert_text = "permutizer has order " +
                  std::to_string(rep.permutizer.order()) + " < " +
                  std::to_string(g.order());
      cert = {{"permutizer", subgroup_json(rep.permutizer)}};
    }
  } else if (pred == "strongly-permutable") {
    auto v = is_strongly_permutable(g, h);
    verdict = v.holds;
    if (!verdict && v.failing_overgroup) {
      cert_text = "failing overgroup of order " +
                  std::to_string(v.failing_overgroup->order());
      cert = {{"failing_overgroup", subgroup_json(*v.failing_overgroup)}};
    }
  } else if (pred == "quasinormal") {
    auto lat = SubgroupLattice::build(g);
    verdict = true;
    for (const auto& k : lat.nodes())
      if (!permutes_with(h, k)) {
        verdict = false;
        cert_text = "does not permute with a subgroup of order " +
                    std::to_string(k.order());
        cert = {{"failing_subgroup", subgroup_json(k)}};
        break;
      }
  } else if (pred == "psubnormal") {
    auto chain = p_subnormal_chain(g, h);
    verdict = chain.has_value();
    if (chain) {
      std::string t = "chain:";
      json links = json::array();
      for (const auto& link : chain->links) {
        t += " " + std::to_string(link.order());
        links.push_back(subgroup_json(link));
      }
      cert_text = t;
      cert = {{"chain", links}};
    }
  } else {
    throw error("unknown predicate '" + pred + "'");
  }

  if (opt.json) {
    json j{{"predicate", pred},
           {"group", gspec},
           {"subgroup", subgroup_json(h)},
           {"verdict", verdict}};
    if (opt.certificate && !cert.is_null()) j["certificate"] = cert;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << (verdict ? "true" : "false") << "\n";
    if (opt.certificate && !cert_text.empty())
      std::cout << cert_text << "\n";
  }
  return verdict ? kTrue : kFalse;
}

int cmd_lattice(const std::string& gspec, const Options& opt) {
  auto ctx = resolve_group(gspec, opt.budgets);
  auto lat = SubgroupLattice::build(ctx->full());
  const auto& nodes = lat.nodes();
  auto edges = lat.cover_edges();
  if (opt.json) {
    json jn = json::array();
    for (const auto& n : nodes) jn.push_back(subgroup_json(n));
    json je = json::array();
    for (const auto& [a, b] : edges) je.push_back(json::array({a, b}));
    std::cout << json{{"group", gspec},
                      {"node_count", nodes.size()},
                      {"nodes", jn},
                      {"cover_edges", je}}
                     .dump(2)
              << "\n";
    return kTrue;
  }
  std::cout << "nodes: " << nodes.size() << "\n";
  for (std::size_t i = 0; i < nodes.size(); ++i)
    std::cout << i << ": order " << nodes[i].order() << ", fingerprint "
              << nodes[i].fingerprint() << ", gens " << gens_string(nodes[i])
              << "\n";
  std::cout << "cover edges:";
  for (const auto& [a, b] : edges) std::cout << " " << a << "<" << b;
  std::cout << "\n";
  return kTrue;
}

int cmd_verify(const std::vector<std::string>& only, const Options& opt) {
  auto results = run_claims(only, opt.slow, opt.budgets);
  bool any_fail = false;
  for (const auto& r : results)
    if (r.verdict == Verdict::fail) any_fail = true;
  if (opt.json) {
    json j = json::array();
    for (const auto& r : results)
      j.push_back(json{{"id", r.id},
                       {"anchor", r.anchor},
                       {"verdict", verdict_name(r.verdict)},
                       {"groups", r.groups},
                       {"detail", r.detail},
                       {"seconds", r.seconds}});
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << render_claims_text(results);
  }
  return any_fail ? kFalse : kTrue;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-group permutizer toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_flag("--json", opt.json, "machine-readable output");
  app.add_flag("--certificate", opt.certificate,
               "print certificates (chains, witnesses, failing overgroups)");
  app.add_flag("--slow", opt.slow, "include the slow S6 checks");
  app.add_option("--max-order", opt.budgets.lattice_max_order,
                 "largest |G| allowed for lattice machinery")
      ->envname("PGT_MAX_ORDER");
  app.add_option("--max-lattice-nodes", opt.budgets.lattice_max_nodes,
                 "largest subgroup-lattice node count")
      ->envname("PGT_MAX_LATTICE_NODES");

  std::string gspec, hspec, pred;
  std::vector<std::string> only;

  auto* classify = app.add_subcommand("classify", "classify a group");
  classify->add_option("group", gspec, "catalog name or group file")
      ->required();

  auto* check = app.add_subcommand("check", "evaluate a subgroup predicate");
  check
      ->add_option("predicate", pred,
                   "permutizer | permutable | strongly-permutable | "
                   "quasinormal | psubnormal")
      ->required();
  check->add_option("group", gspec, "catalog name or group file")->required();
  check
      ->add_option("subgroup", hspec,
                   "sylow:p | hall:p1,p2 | gens:<cycles> | cyclic:<cycles>")
      ->required();

  auto* perm = app.add_subcommand("permutizer", "compute a permutizer");
  perm->add_option("group", gspec, "catalog name or group file")->required();
  perm->add_option("subgroup", hspec, "subgroup specifier")->required();

  auto* lattice = app.add_subcommand("lattice", "dump a subgroup lattice");
  lattice->add_option("group", gspec, "catalog name or group file")
      ->required();

  auto* verify =
      app.add_subcommand("verify-paper", "run the claim-verification suite");
  verify->add_option("--only", only, "restrict to the given claim ids");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kUsage;  // keep 0 for --help, else usage error
  }

  try {
    if (classify->parsed()) return cmd_classify(gspec, opt);
    if (check->parsed()) return cmd_check(pred, gspec, hspec, opt);
    if (perm->parsed()) return cmd_permutizer(gspec, hspec, opt);
    if (lattice->parsed()) return cmd_lattice(gspec, opt);
    if (verify->parsed()) return cmd_verify(only, opt);
  } catch (const resource_error& e) {
    std::cerr << "resource limit (" << e.budget() << "): " << e.what()
              << "\n";
    return kResource;
  } catch (const parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
