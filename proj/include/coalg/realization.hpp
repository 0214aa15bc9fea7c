#pragma once

#include <map>
#include <string>
#include <vector>

#include "coalg/binary_system.hpp"
#include "coalg/caps.hpp"
#include "coalg/graph_coalgebra.hpp"
#include "coalg/group.hpp"
#include "coalg/report.hpp"

namespace coalg {

// A permutation group together with an action on v_size points, given by
// the images of the generators. Construction closes the group and the
// action side by side and rejects generator images that do not extend to a
// well-defined homomorphism.
struct PermRep {
  FiniteGroup group;
  int v_size = 0;
  std::vector<Perm> gen_images;
  std::vector<Perm> rho;  // action of each element, indexed like group.elements()

  static PermRep make(int degree, const std::vector<Perm>& group_gens, int v_size,
                      const std::vector<Perm>& gen_images, long long cap = Caps{}.group_close);
};

// Vertices are the group elements g0..g{n-1}, one label per generator,
// pairs (g, g * s). Rejects the identity among the generators, duplicate
// generators, and sets that do not generate the group.
BinarySystem cayley_diagram(const FiniteGroup& g, const std::vector<Perm>& s,
                            long long cap = Caps{}.group_close);

// Cayley diagram extended by the acted-on points v0..v{k-1}: one extra
// label per point v, with pairs (g, rho(g)(v)).
BinarySystem action_system(const PermRep& rep);

// Left translation plus the action: g |-> g~ * g on group vertices,
// v |-> rho(g~)(v) on point vertices. An automorphism of action_system.
Perm phi(const PermRep& rep, int element);

struct GadgetOrigin {
  std::string label;
  std::string from;
  std::string to;
  std::string role;
};

struct ArrowReplacement {
  SimpleGraph graph;
  std::map<std::string, GadgetOrigin> provenance;  // gadget vertex -> origin
};

// Encodes every labeled pair (u, w) with label index i as the undirected
// path u - x - y - w, with a pendant path of length T+2i+1 hung on x and
// one of length T+2i+2 hung on y, where T is the maximum degree of the
// input plus 2. The length offsets keep direction and label recoverable;
// each use is verified by exhaustive search, not trusted.
ArrowReplacement arrow_replace(const BinarySystem& s);

struct RealizationBundle {
  BinarySystem system;
  SimpleGraph simple;
  GraphCoalgebra coalgebra;
  std::vector<int> g_subset;  // group vertices, shared indexing of system and simple
  std::vector<int> v_subset;  // acted-on point vertices
  std::map<std::string, GadgetOrigin> provenance;
  Report report;
};

// Full pipeline: action system, arrow replacement, coalgebra over the
// bidirected simple graph, then the verification items. Checks that run
// into a cap are reported SKIPPED, never silently passed.
RealizationBundle realize_representation(const PermRep& rep, const Field& f,
                                         const Caps& caps = {});

}  // namespace coalg
