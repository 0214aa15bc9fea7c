#include "coalg/realization.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "coalg/graph_aut.hpp"

namespace coalg {

PermRep PermRep::make(int degree, const std::vector<Perm>& group_gens, int v_size,
                      const std::vector<Perm>& gen_images, long long cap) {
  if (group_gens.size() != gen_images.size())
    fail(Errc::shape_mismatch, std::to_string(group_gens.size()) + " generators vs " +
                                   std::to_string(gen_images.size()) + " images");
  for (const Perm& im : gen_images) {
    if (im.degree() != v_size)
      fail(Errc::degree_mismatch, "generator image degree " + std::to_string(im.degree()) +
                                      " does not match v_size " + std::to_string(v_size));
    if (!is_valid_permutation(im.img))
      fail(Errc::parse_error, "generator image is not a permutation");
  }

  PermRep rep;
  rep.group = FiniteGroup::close(degree, group_gens, cap);
  rep.v_size = v_size;
  rep.gen_images = gen_images;

  // Walk the closure again tracking the action image of each element; a
  // revisit under a different image means the assignment rho(s_i) does not
  // extend to a homomorphism.
  rep.rho.assign(static_cast<size_t>(rep.group.order()), Perm{});
  std::vector<char> known(static_cast<size_t>(rep.group.order()), 0);
  std::vector<std::string> word(static_cast<size_t>(rep.group.order()));
  rep.rho[0] = Perm::identity(v_size);
  known[0] = 1;
  word[0] = "e";
  std::vector<int> queue{0};
  for (size_t head = 0; head < queue.size(); ++head) {
    int at = queue[head];
    for (size_t i = 0; i < group_gens.size(); ++i) {
      int next = rep.group.mult(at, rep.group.index_of(group_gens[i]));
      Perm image = compose(rep.rho[static_cast<size_t>(at)], gen_images[i]);
      std::string w = word[static_cast<size_t>(at)] == "e"
                          ? "s" + std::to_string(i)
                          : word[static_cast<size_t>(at)] + "*s" + std::to_string(i);
      if (!known[static_cast<size_t>(next)]) {
        known[static_cast<size_t>(next)] = 1;
        rep.rho[static_cast<size_t>(next)] = image;
        word[static_cast<size_t>(next)] = w;
        queue.push_back(next);
      } else if (!(rep.rho[static_cast<size_t>(next)] == image)) {
        fail(Errc::parse_error, "action is not well-defined at word " + w + " (conflicts with " +
                                    word[static_cast<size_t>(next)] + ")");
      }
    }
  }
  return rep;
}

BinarySystem cayley_diagram(const FiniteGroup& g, const std::vector<Perm>& s, long long cap) {
  std::set<std::vector<int>> seen;
  for (const Perm& gen : s) {
    if (gen.is_identity())
      fail(Errc::identity_generator, "the identity is not allowed as a generator");
    if (!seen.insert(gen.img).second)
      fail(Errc::duplicate_generator, "generator " + one_line(gen) + " listed twice");
    if (g.index_of(gen) < 0)
      fail(Errc::unknown_element, "generator " + one_line(gen) + " is not a group element");
  }
  if (FiniteGroup::close(g.degree(), s, cap).order() != g.order())
    fail(Errc::not_generating, "the listed elements do not generate the group");

  std::vector<std::string> vertices;
  for (long long i = 0; i < g.order(); ++i) vertices.push_back("g" + std::to_string(i));
  std::vector<std::string> labels;
  for (size_t j = 0; j < s.size(); ++j) labels.push_back("s" + std::to_string(j));

  BinarySystem sys(std::move(vertices), std::move(labels));
  for (size_t j = 0; j < s.size(); ++j) {
    int sj = g.index_of(s[j]);
    for (long long a = 0; a < g.order(); ++a)
      sys.add_pair(static_cast<int>(j), static_cast<int>(a),
                   g.mult(static_cast<int>(a), sj));
  }
  return sys;
}

BinarySystem action_system(const PermRep& rep) {
  const long long n = rep.group.order();
  std::vector<std::string> vertices;
  for (long long i = 0; i < n; ++i) vertices.push_back("g" + std::to_string(i));
  for (int k = 0; k < rep.v_size; ++k) vertices.push_back("v" + std::to_string(k));
  std::vector<std::string> labels;
  for (size_t j = 0; j < rep.gen_images.size(); ++j) labels.push_back("s" + std::to_string(j));
  for (int k = 0; k < rep.v_size; ++k) labels.push_back("v" + std::to_string(k));

  BinarySystem sys(std::move(vertices), std::move(labels));
  for (size_t j = 0; j < rep.gen_images.size(); ++j) {
    int sj = rep.group.index_of(rep.group.generators()[j]);
    for (long long a = 0; a < n; ++a)
      sys.add_pair(static_cast<int>(j), static_cast<int>(a),
                   rep.group.mult(static_cast<int>(a), sj));
  }
  const int nlabels_s = static_cast<int>(rep.gen_images.size());
  for (int k = 0; k < rep.v_size; ++k) {
    for (long long a = 0; a < n; ++a) {
      int target = static_cast<int>(n) + rep.rho[static_cast<size_t>(a)](k);
      sys.add_pair(nlabels_s + k, static_cast<int>(a), target);
    }
  }
  return sys;
}

Perm phi(const PermRep& rep, int element) {
  const long long n = rep.group.order();
  if (element < 0 || element >= n)
    fail(Errc::unknown_element, "element index " + std::to_string(element) + " out of range");
  Perm p;
  p.img.resize(static_cast<size_t>(n) + static_cast<size_t>(rep.v_size));
  for (long long a = 0; a < n; ++a)
    p.img[static_cast<size_t>(a)] = rep.group.mult(element, static_cast<int>(a));
  for (int k = 0; k < rep.v_size; ++k)
    p.img[static_cast<size_t>(n) + static_cast<size_t>(k)] =
        static_cast<int>(n) + rep.rho[static_cast<size_t>(element)](k);
  return p;
}

ArrowReplacement arrow_replace(const BinarySystem& s) {
  int maxdeg = 0;
  for (int v = 0; v < s.vertex_count(); ++v) maxdeg = std::max(maxdeg, s.degrees(v).total);
  const int t = maxdeg + 2;

  ArrowReplacement out;
  std::vector<std::string> vertices = s.vertex_names();
  std::vector<std::pair<int, int>> edges;
  int next = s.vertex_count();

  auto fresh = [&](const std::string& name, const GadgetOrigin& origin) {
    vertices.push_back(name);
    out.provenance[name] = origin;
    return next++;
  };

  for (int l = 0; l < s.label_count(); ++l) {
    const std::string& lname = s.label_names()[static_cast<size_t>(l)];
    for (const auto& [u, w] : s.pairs(l)) {
      const std::string& un = s.vertex_name(u);
      const std::string& wn = s.vertex_name(w);
      const std::string base = "[" + lname + "|" + un + "|" + wn + "]";
      auto origin = [&](const std::string& role) { return GadgetOrigin{lname, un, wn, role}; };

      int x = fresh(base + ":x", origin("x"));
      int y = fresh(base + ":y", origin("y"));
      edges.emplace_back(u, x);
      edges.emplace_back(x, y);
      edges.emplace_back(y, w);
      // tail lengths t+2l+1 at x and t+2l+2 at y encode label and direction
      int at = x;
      for (int k = 1; k <= t + 2 * l + 1; ++k) {
        int a = fresh(base + ":a" + std::to_string(k), origin("a" + std::to_string(k)));
        edges.emplace_back(at, a);
        at = a;
      }
      at = y;
      for (int k = 1; k <= t + 2 * l + 2; ++k) {
        int b = fresh(base + ":b" + std::to_string(k), origin("b" + std::to_string(k)));
        edges.emplace_back(at, b);
        at = b;
      }
    }
  }
  out.graph = SimpleGraph::from_index_pairs(std::move(vertices), std::move(edges));
  return out;
}

namespace {

// Matches each simple-graph automorphism with the group element it must
// come from, by where it sends the identity vertex.
struct MatchedAut {
  int element = -1;
  Perm whole;  // on the simple graph
};

}  // namespace

RealizationBundle realize_representation(const PermRep& rep, const Field& f, const Caps& caps) {
  RealizationBundle bundle;
  bundle.system = action_system(rep);
  Report& report = bundle.report;

  const long long n = rep.group.order();
  const int nsys = bundle.system.vertex_count();
  const int nsize = static_cast<int>(n);
  for (long long i = 0; i < n; ++i) bundle.g_subset.push_back(static_cast<int>(i));
  for (int k = 0; k < rep.v_size; ++k) bundle.v_subset.push_back(nsize + k);

  // degree formulas of the action system
  {
    const int ns = static_cast<int>(rep.gen_images.size());
    bool ok = true;
    for (int v = 0; v < nsys && ok; ++v) {
      int expect = v < nsize ? 2 * ns + rep.v_size : static_cast<int>(n);
      ok = bundle.system.degrees(v).total == expect;
    }
    report.add("system-degrees", ok,
               "2|S|+|V| on group vertices, |G| on point vertices");
  }

  // automorphisms of the action system are exactly the translations
  {
    std::vector<Perm> auts = automorphisms(bundle.system, caps);
    std::set<Perm> expected;
    for (long long i = 0; i < n; ++i) expected.insert(phi(rep, static_cast<int>(i)));
    std::set<Perm> got(auts.begin(), auts.end());
    report.add("system-aut-is-translation", got == expected,
               std::to_string(auts.size()) + " automorphisms vs |G| = " + std::to_string(n));
  }

  ArrowReplacement replaced = arrow_replace(bundle.system);
  bundle.simple = replaced.graph;
  bundle.provenance = std::move(replaced.provenance);

  std::vector<Perm> simple_auts = automorphisms(bundle.simple.as_system(), caps);

  // the encoded graph keeps exactly the translation symmetries
  std::vector<MatchedAut> matched;
  {
    bool ok = static_cast<long long>(simple_auts.size()) == n;
    std::set<int> hit;
    for (const Perm& psi : simple_auts) {
      if (!ok) break;
      // original vertices must stay in place as a set, identity goes to a
      // group vertex, and the restriction must be the matching translation
      int e_image = psi(rep.group.identity_index());
      if (e_image >= nsize) {
        ok = false;
        break;
      }
      Perm restriction;
      restriction.img.assign(static_cast<size_t>(nsys), -1);
      for (int v = 0; v < nsys; ++v) {
        if (psi(v) >= nsys) {
          ok = false;
          break;
        }
        restriction.img[static_cast<size_t>(v)] = psi(v);
      }
      if (!ok) break;
      if (!(restriction == phi(rep, e_image))) {
        ok = false;
        break;
      }
      if (!hit.insert(e_image).second) {
        ok = false;
        break;
      }
      matched.push_back({e_image, psi});
    }
    ok = ok && static_cast<long long>(matched.size()) == n;
    report.add("simple-aut-is-translation", ok,
               std::to_string(simple_auts.size()) + " automorphisms of " +
                   std::to_string(bundle.simple.vertex_count()) + " vertices");
  }

  // composing matched automorphisms follows the group multiplication
  {
    bool ok = !report.any_failed();
    std::map<int, const Perm*> by_element;
    for (const MatchedAut& m : matched) by_element[m.element] = &m.whole;
    for (const MatchedAut& a : matched) {
      if (!ok) break;
      for (const MatchedAut& b : matched) {
        int ab = rep.group.mult(a.element, b.element);
        if (!(compose(a.whole, b.whole) == *by_element[ab])) {
          ok = false;
          break;
        }
      }
    }
    report.add("translation-homomorphism", ok,
               std::to_string(matched.size() * matched.size()) + " pairs");
  }

  Digraph dig = bundle.simple.bidirected();
  bundle.coalgebra = build_path_coalgebra(dig, f);

  // every translation lifts to a coalgebra automorphism with mu = 1 and
  // lambda = 0, with an explicit structured inverse
  std::map<int, StructuredAut> lifts;
  {
    bool ok = true;
    for (const MatchedAut& m : matched) {
      StructuredAut lift = structured_identity(bundle.coalgebra);
      lift.sigma = m.whole;
      LinearMap mat = structured_to_matrix(bundle.coalgebra, lift);
      if (!is_morphism(bundle.coalgebra.coalgebra, bundle.coalgebra.coalgebra, mat)) {
        ok = false;
        break;
      }
      StructuredAut round = compose(bundle.coalgebra, invert(bundle.coalgebra, lift), lift);
      if (!(round == structured_identity(bundle.coalgebra))) {
        ok = false;
        break;
      }
      lifts.emplace(m.element, std::move(lift));
    }
    ok = ok && static_cast<long long>(matched.size()) == n;
    report.add("lift-is-automorphism", ok,
               std::to_string(lifts.size()) + " coalgebra automorphisms verified");
  }

  // lifting commutes with the group operation
  {
    bool ok = static_cast<long long>(lifts.size()) == n;
    for (const auto& [a, fa] : lifts) {
      if (!ok) break;
      for (const auto& [b, fb] : lifts) {
        int ab = rep.group.mult(a, b);
        if (!(compose(bundle.coalgebra, fa, fb) == lifts.at(ab))) {
          ok = false;
          break;
        }
      }
    }
    report.add("lift-homomorphism", ok,
               std::to_string(lifts.size() * lifts.size()) + " pairs");
  }

  // restricting the lifted automorphisms to the vertex basis gives back
  // exactly the graph symmetries
  {
    std::set<Perm> from_matched;
    for (const MatchedAut& m : matched) from_matched.insert(m.whole);
    std::set<Perm> from_search(simple_auts.begin(), simple_auts.end());
    report.add("restriction-image", from_matched == from_search,
               "restriction image has order " + std::to_string(from_search.size()));
  }

  // the acted-on vertices are invariant and the restriction is rho
  {
    bool ok = is_invariant(bundle.simple.as_system(), bundle.v_subset, simple_auts);
    for (const MatchedAut& m : matched) {
      if (!ok) break;
      const Perm& r = rep.rho[static_cast<size_t>(m.element)];
      for (int k = 0; k < rep.v_size; ++k) {
        if (m.whole(nsize + k) != nsize + r(k)) {
          ok = false;
          break;
        }
      }
    }
    report.add("restriction-is-rho", ok,
               "checked on every group element, not only generators");
  }

  // distinct group elements stay distinct after lifting
  {
    std::set<int> images;
    bool ok = true;
    for (const MatchedAut& m : matched) {
      int at = m.whole(rep.group.identity_index());
      if (!images.insert(at).second || at != m.element) {
        ok = false;
        break;
      }
    }
    ok = ok && static_cast<long long>(images.size()) == n;
    report.add("lift-faithful", ok, "identity vertex orbit has size |G|");
  }

  // grouplike scan and brute oracle only fit tiny instances
  {
    const long long q = f.order();
    long long cost = 1;
    bool in_reach = true;
    for (int i = 0; i < bundle.coalgebra.coalgebra.dim(); ++i) {
      if (cost > caps.grouplike_enum / q) {
        in_reach = false;
        break;
      }
      cost *= q;
    }
    if (!in_reach) {
      report.skip("grouplike-scan", "q^dim above cap " + std::to_string(caps.grouplike_enum));
    } else {
      auto gl = grouplikes(bundle.coalgebra.coalgebra, caps.grouplike_enum);
      bool ok = static_cast<int>(gl.size()) == bundle.simple.vertex_count();
      for (const auto& vec : gl) {
        if (!ok) break;
        int support = -1;
        for (int i = 0; i < bundle.coalgebra.coalgebra.dim(); ++i) {
          if (!vec[static_cast<size_t>(i)].is_zero()) {
            ok = support < 0 && vec[static_cast<size_t>(i)] == f.one() &&
                 i < bundle.simple.vertex_count();
            support = i;
          }
        }
      }
      report.add("grouplike-scan", ok,
                 std::to_string(gl.size()) + " grouplikes = vertex basis");
    }
  }
  {
    const long long q = f.order();
    const long long dim = bundle.coalgebra.coalgebra.dim();
    long long cost = 1;
    bool in_reach = true;
    for (long long i = 0; i < dim * dim; ++i) {
      if (cost > caps.brute_oracle / q) {
        in_reach = false;
        break;
      }
      cost *= q;
    }
    if (!in_reach) {
      report.skip("aut-order-formula",
                  "matrix scan q^(dim^2) above cap; formula value (q(q-1))^" +
                      std::to_string(dig.edge_count()) + " * " + std::to_string(n));
    } else {
      auto brute = automorphisms_brute(bundle.coalgebra.coalgebra, caps.brute_oracle);
      long long expect = structured_count(bundle.coalgebra, n, 1LL << 62);
      report.add("aut-order-formula", static_cast<long long>(brute.size()) == expect,
                 std::to_string(brute.size()) + " vs " + std::to_string(expect));
    }
  }

  return bundle;
}

}  // namespace coalg
