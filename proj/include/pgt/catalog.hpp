#pragma once

#include <cctype>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "pgt/gf.hpp"
#include "pgt/lattice.hpp"
#include "pgt/structure.hpp"

namespace pgt {

// ---------------------------------------------------------------------------
// Cycle notation (1-based points, disjoint cycles, "()" for the identity).

inline Permutation parse_cycles(const std::string& text, int degree,
                                int line = 1, int col_offset = 0) {
  std::vector<int> img(degree);
  std::vector<char> moved(degree, 0);
  for (int i = 0; i < degree; ++i) img[i] = i;
  std::size_t i = 0;
  auto col = [&] { return int(i) + 1 + col_offset; };
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace((unsigned char)text[i])) ++i;
  };
  skip_ws();
  if (i == text.size()) throw parse_error(line, col(), "expected a cycle");
  bool any = false;
  while (i < text.size()) {
    skip_ws();
    if (i == text.size()) break;
    if (text[i] != '(')
      throw parse_error(line, col(), "expected '('");
    ++i;
    std::vector<int> cycle;
    while (true) {
      skip_ws();
      if (i == text.size())
        throw parse_error(line, col(), "unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] == ',') {
        ++i;
        continue;
      }
      if (!std::isdigit((unsigned char)text[i]))
        throw parse_error(line, col(), "expected a point number");
      int v = 0;
      while (i < text.size() && std::isdigit((unsigned char)text[i]))
        v = v * 10 + (text[i++] - '0');
      if (v < 1 || v > degree)
        throw parse_error(line, col(),
                          "point " + std::to_string(v) +
                              " outside 1.." + std::to_string(degree));
      if (moved[v - 1])
        throw parse_error(line, col(),
                          "point " + std::to_string(v) + " repeated");
      moved[v - 1] = 1;
      cycle.push_back(v - 1);
    }
    any = true;
    for (std::size_t k = 0; k < cycle.size(); ++k)
      img[cycle[k]] = cycle[(k + 1) % cycle.size()];
  }
  if (!any) throw parse_error(line, col(), "expected a cycle");
  return Permutation::from_images(std::move(img));
}

inline std::string cycle_string(const Permutation& p) {
  if (p.is_identity()) return "()";
  std::ostringstream out;
  std::vector<char> seen(p.degree(), 0);
  for (int i = 0; i < p.degree(); ++i) {
    if (seen[i] || p.apply(i) == i) continue;
    out << '(';
    bool first = true;
    for (int j = i; !seen[j]; j = p.apply(j)) {
      seen[j] = 1;
      if (!first) out << ' ';
      out << (j + 1);
      first = false;
    }
    out << ')';
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Classical families.

inline PermGroup symmetric(int n) {
  if (n < 1 || n > 12) throw error("symmetric: n must be in 1..12");
  if (n == 1) return PermGroup(1, {});
  std::vector<Permutation> gens;
  {
    std::vector<int> t(n);
    for (int i = 0; i < n; ++i) t[i] = i;
    std::swap(t[0], t[1]);
    gens.push_back(Permutation::from_images(t));
  }
  if (n > 2) {
    std::vector<int> c(n);
    for (int i = 0; i < n; ++i) c[i] = (i + 1) % n;
    gens.push_back(Permutation::from_images(c));
  }
  return PermGroup(n, gens);
}

inline PermGroup alternating(int n) {
  if (n < 1 || n > 12) throw error("alternating: n must be in 1..12");
  if (n <= 2) return PermGroup(std::max(n, 1), {});
  std::vector<Permutation> gens;
  {
    std::vector<int> t(n);
    for (int i = 0; i < n; ++i) t[i] = i;
    t[0] = 1;
    t[1] = 2;
    t[2] = 0;
    gens.push_back(Permutation::from_images(t));  // (1 2 3)
  }
  if (n > 3) {
    std::vector<int> c(n);
    if (n % 2 == 1) {
      for (int i = 0; i < n; ++i) c[i] = (i + 1) % n;  // (1 2 ... n)
    } else {
      c[0] = 0;
      for (int i = 1; i < n; ++i) c[i] = i % (n - 1) + 1;  // (2 3 ... n)
    }
    gens.push_back(Permutation::from_images(c));
  }
  return PermGroup(n, gens);
}

inline PermGroup cyclic(int n) {
  if (n < 1 || n > 30) throw error("cyclic: n must be in 1..30");
  if (n == 1) return PermGroup(1, {});
  std::vector<int> c(n);
  for (int i = 0; i < n; ++i) c[i] = (i + 1) % n;
  return PermGroup(n, {Permutation::from_images(c)});
}

// Dihedral group of order 2n on n points.
inline PermGroup dihedral(int n) {
  if (n < 3 || n > 12) throw error("dihedral: n must be in 3..12");
  std::vector<int> c(n), r(n);
  for (int i = 0; i < n; ++i) {
    c[i] = (i + 1) % n;
    r[i] = (n - i) % n;  // fixes point 1, reverses the rest
  }
  return PermGroup(n, {Permutation::from_images(c),
                       Permutation::from_images(r)});
}

// ---------------------------------------------------------------------------
// L2(q) = PSL(2,q) on the projective line (infinity plus the field),
// q+1 points: point 0 is infinity, point 1+v is the field element v.
// Generators: x -> x+b over an additive basis, x -> gx for g generating
// the squares (all of F_q* in characteristic 2), and x -> -1/x.

inline PermGroup psl2(int q) {
  switch (q) {
    case 4: case 5: case 7: case 8: case 9: case 11: break;
    default:
      throw error("psl2: q must be one of 4, 5, 7, 8, 9, 11");
  }
  GaloisField f(q);
  int deg = q + 1;
  auto pt = [&](int v) { return 1 + v; };  // field value -> point
  std::vector<Permutation> gens;
  for (int b : f.additive_basis()) {
    std::vector<int> img(deg);
    img[0] = 0;
    for (int v = 0; v < q; ++v) img[pt(v)] = pt(f.add(v, b));
    gens.push_back(Permutation::from_images(img));
  }
  {
    int w = f.primitive_element();
    int g = (q % 2 == 0) ? w : f.mul(w, w);
    std::vector<int> img(deg);
    img[0] = 0;
    for (int v = 0; v < q; ++v) img[pt(v)] = pt(f.mul(g, v));
    gens.push_back(Permutation::from_images(img));
  }
  {
    std::vector<int> img(deg);
    img[0] = pt(0);
    img[pt(0)] = 0;
    for (int v = 1; v < q; ++v) img[pt(v)] = pt(f.neg(f.inv(v)));
    gens.push_back(Permutation::from_images(img));
  }
  PermGroup g(deg, gens);
  std::uint64_t expected =
      std::uint64_t(q) * (q - 1) * (q + 1) / std::gcd(2, q - 1);
  if (g.order() != expected)
    throw error("psl2 construction failed order check");
  return g;
}

// ---------------------------------------------------------------------------
// Heisenberg group of order p^3 (upper unitriangular 3x3 over F_p) in its
// regular action; exponent p for odd p.

inline PermGroup heisenberg(int p) {
  if (p != 3 && p != 5 && p != 7)
    throw error("heisenberg: p must be 3, 5 or 7");
  int n = p * p * p;
  auto enc = [&](int a, int b, int c) { return (a * p + b) * p + c; };
  // (a,b,c)*(a',b',c') = (a+a', b+b', c+c'+a*b')
  auto right_mul = [&](int a2, int b2, int c2) {
    std::vector<int> img(n);
    for (int a = 0; a < p; ++a)
      for (int b = 0; b < p; ++b)
        for (int c = 0; c < p; ++c)
          img[enc(a, b, c)] =
              enc((a + a2) % p, (b + b2) % p, (c + c2 + a * b2) % p);
    return Permutation::from_images(img);
  };
  PermGroup g(n, {right_mul(1, 0, 0), right_mul(0, 1, 0)});
  if (g.order() != std::uint64_t(n))
    throw error("heisenberg construction failed order check");
  return g;
}

// SL(2,3) acting on the 8 nonzero vectors of F_3^2 (points: vector (x,y),
// x,y in 0..2, skipping (0,0), in lexicographic order).
inline PermGroup sl2_3() {
  const int p = 3;
  std::vector<std::pair<int, int>> vecs;
  for (int x = 0; x < p; ++x)
    for (int y = 0; y < p; ++y)
      if (x || y) vecs.emplace_back(x, y);
  auto pt = [&](int x, int y) {
    for (std::size_t i = 0; i < vecs.size(); ++i)
      if (vecs[i] == std::make_pair(x, y)) return int(i);
    throw error("sl2_3: bad vector");
  };
  // Row vector times matrix [[a,b],[c,d]].
  auto act = [&](int a, int b, int c, int d) {
    std::vector<int> img(vecs.size());
    for (std::size_t i = 0; i < vecs.size(); ++i) {
      auto [x, y] = vecs[i];
      img[i] = pt((x * a + y * c) % p, (x * b + y * d) % p);
    }
    return Permutation::from_images(img);
  };
  PermGroup g(int(vecs.size()), {act(1, 1, 0, 1), act(0, 2, 1, 0)});
  if (g.order() != 24) throw error("sl2_3 construction failed order check");
  return g;
}

// ---------------------------------------------------------------------------
// Group files.
//
//   name: <string>        (optional)
//   degree: <n>
//   gens:
//   (1 2 3)(4 5)
//   ...
//
// "()" is the identity; "#" starts a comment; whitespace inside
// parentheses is ignored.

struct GroupSpecFile {
  std::string name;
  int degree = 0;
  std::vector<std::string> generator_lines;
  std::vector<int> generator_linenos;  // source line of each generator line
};

inline GroupSpecFile parse_group_spec(const std::string& text) {
  GroupSpecFile spec;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  bool in_gens = false, saw_degree = false;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw.substr(0, raw.find('#'));
    std::size_t a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos) continue;
    std::size_t b = line.find_last_not_of(" \t\r");
    line = line.substr(a, b - a + 1);
    if (!in_gens && line.rfind("name:", 0) == 0) {
      std::string v = line.substr(5);
      std::size_t c = v.find_first_not_of(" \t");
      spec.name = (c == std::string::npos) ? "" : v.substr(c);
    } else if (!in_gens && line.rfind("degree:", 0) == 0) {
      try {
        spec.degree = std::stoi(line.substr(7));
      } catch (const std::exception&) {
        throw parse_error(lineno, 8, "invalid degree");
      }
      if (spec.degree < 1) throw parse_error(lineno, 8, "degree must be >= 1");
      saw_degree = true;
    } else if (line == "gens:" || line.rfind("gens:", 0) == 0) {
      if (!saw_degree)
        throw parse_error(lineno, 1, "degree must come before gens");
      in_gens = true;
      std::string rest = line.substr(5);
      std::size_t c = rest.find_first_not_of(" \t");
      if (c != std::string::npos) {
        spec.generator_lines.push_back(rest.substr(c));
        spec.generator_linenos.push_back(lineno);
      }
    } else if (in_gens) {
      spec.generator_lines.push_back(line);
      spec.generator_linenos.push_back(lineno);
    } else {
      throw parse_error(lineno, 1, "expected 'name:', 'degree:' or 'gens:'");
    }
  }
  if (!saw_degree) throw parse_error(lineno + 1, 1, "missing degree");
  return spec;
}

inline PermGroup parse_group_file(const std::string& text) {
  GroupSpecFile spec = parse_group_spec(text);
  std::vector<Permutation> gens;
  for (std::size_t li = 0; li < spec.generator_lines.size(); ++li) {
    const std::string& line = spec.generator_lines[li];
    const int lineno = spec.generator_linenos[li];
    // Generators on one line are separated by commas outside parentheses.
    std::size_t start = 0;
    int depth = 0;
    for (std::size_t i = 0; i <= line.size(); ++i) {
      if (i < line.size() && line[i] == '(') ++depth;
      if (i < line.size() && line[i] == ')') --depth;
      if (i == line.size() || (line[i] == ',' && depth == 0)) {
        std::string part = line.substr(start, i - start);
        if (part.find_first_not_of(" \t") != std::string::npos)
          gens.push_back(parse_cycles(part, spec.degree, lineno, int(start)));
        start = i + 1;
      }
    }
  }
  return PermGroup(spec.degree, gens);
}

inline std::string print_group_file(const std::string& name,
                                    const PermGroup& g) {
  std::ostringstream out;
  if (!name.empty()) out << "name: " << name << "\n";
  out << "degree: " << g.degree() << "\n";
  out << "gens:\n";
  if (g.generators().empty()) out << "()\n";
  for (const auto& p : g.generators()) out << cycle_string(p) << "\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// Catalog.

inline const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (int n = 2; n <= 7; ++n) v.push_back("S" + std::to_string(n));
    for (int n = 3; n <= 7; ++n) v.push_back("A" + std::to_string(n));
    for (int n = 1; n <= 30; ++n) v.push_back("C" + std::to_string(n));
    for (int n = 3; n <= 12; ++n) v.push_back("D" + std::to_string(n));
    for (int q : {4, 5, 7, 8, 9, 11})
      v.push_back("L2(" + std::to_string(q) + ")");
    v.push_back("SL(2,3)");
    v.push_back("H27");
    v.push_back("H125");
    return v;
  }();
  return names;
}

inline PermGroup catalog_group(const std::string& name) {
  auto num = [&](std::size_t at) { return std::stoi(name.substr(at)); };
  try {
    if (name.size() >= 2 && name[0] == 'S' && std::isdigit((unsigned char)name[1]))
      if (int n = num(1); n >= 2 && n <= 7) return symmetric(n);
    if (name.size() >= 2 && name[0] == 'A' && std::isdigit((unsigned char)name[1]))
      if (int n = num(1); n >= 3 && n <= 7) return alternating(n);
    if (name.size() >= 2 && name[0] == 'C' && std::isdigit((unsigned char)name[1]))
      if (int n = num(1); n >= 1 && n <= 30) return cyclic(n);
    if (name.size() >= 2 && name[0] == 'D' && std::isdigit((unsigned char)name[1]))
      if (int n = num(1); n >= 3 && n <= 12) return dihedral(n);
    if (name.rfind("L2(", 0) == 0 && name.back() == ')')
      return psl2(num(3));
    if (name == "SL(2,3)") return sl2_3();
    if (name == "H27") return heisenberg(3);
    if (name == "H125") return heisenberg(5);
  } catch (const error&) {
    // fall through to the unknown-name report
  }
  std::string known;
  for (const auto& n : catalog_names()) {
    if (!known.empty()) known += ", ";
    known += n;
  }
  throw error("unknown catalog group '" + name + "' (known: " + known + ")");
}

// Subgroup specifiers: sylow:p | hall:p1,p2,... | gens:<cycles> |
// cyclic:<one cycle list>. A sylow specifier with p not dividing |G| yields
// the trivial subgroup (documented, not an error); that needs no lattice.
// hall: requires the lattice and returns the first Hall subgroup in
// canonical order, or an error when none exists.
inline Subgroup resolve_subgroup(const ContextPtr& ctx,
                                 const std::string& spec) {
  auto full = ctx->full();
  if (spec.rfind("sylow:", 0) == 0) {
    int p = std::stoi(spec.substr(6));
    return sylow_subgroup(full, p);
  }
  if (spec.rfind("gens:", 0) == 0 || spec.rfind("cyclic:", 0) == 0) {
    bool cyc = spec[0] == 'c';
    std::string body = spec.substr(cyc ? 7 : 5);
    if (cyc) {
      int i = ctx->index_of(parse_cycles(body, ctx->degree()));
      if (i < 0) throw error("cyclic: element is not in the group");
      return subgroup_generated(ctx, {i});
    }
    // gens: may contain several permutations separated by ';'
    std::vector<int> seeds;
    std::size_t start = 0;
    while (start <= body.size()) {
      std::size_t semi = body.find(';', start);
      std::string part = body.substr(
          start, semi == std::string::npos ? std::string::npos : semi - start);
      if (part.find_first_not_of(" \t") != std::string::npos) {
        int i = ctx->index_of(parse_cycles(part, ctx->degree()));
        if (i < 0) throw error("gens: element is not in the group");
        seeds.push_back(i);
      }
      if (semi == std::string::npos) break;
      start = semi + 1;
    }
    return subgroup_generated(ctx, seeds);
  }
  if (spec.rfind("hall:", 0) == 0) {
    std::vector<int> primes;
    std::string body = spec.substr(5);
    std::size_t start = 0;
    while (start < body.size()) {
      std::size_t comma = body.find(',', start);
      primes.push_back(std::stoi(body.substr(start, comma - start)));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    // declared in lattice.hpp
    auto halls = hall_subgroups(SubgroupLattice::build(full), PrimeSet(primes));
    if (halls.empty()) throw error("no Hall subgroup for " + spec);
    return halls.front();
  }
  throw error("unknown subgroup specifier '" + spec +
              "' (use sylow:p, hall:p1,p2,..., gens:<cycles>, "
              "cyclic:<cycles>)");
}

}  // namespace pgt
