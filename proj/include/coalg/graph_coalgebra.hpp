#pragma once

#include <vector>

#include "coalg/binary_system.hpp"
#include "coalg/caps.hpp"
#include "coalg/coalgebra.hpp"
#include "coalg/report.hpp"

namespace coalg {

// Coalgebra attached to a digraph: one basis element per vertex and per
// edge. A vertex v is grouplike; an edge e = (u, w) has
// Delta(e) = u (x) e + e (x) w and eps(e) = 0. Vertices occupy basis
// slots 0..|V|-1, edges follow in edge order.
struct GraphCoalgebra {
  Digraph graph;
  Coalgebra coalgebra;

  int vertex_basis(int v) const { return v; }
  int edge_basis(int e) const { return graph.vertex_count() + e; }

  friend bool operator==(const GraphCoalgebra&, const GraphCoalgebra&) = default;
};

GraphCoalgebra build_path_coalgebra(const Digraph& g, const Field& f);

// Parameters of the map sending v to sigma(v) and an edge e = (u, w) to
// lambda(e) * (sigma(w) - sigma(u)) + mu(e) * sigma(e). With sigma a graph
// automorphism and every mu(e) nonzero this is a coalgebra automorphism,
// and every coalgebra automorphism arises this way.
struct StructuredAut {
  Perm sigma;
  std::vector<FieldElem> lambda;  // per edge
  std::vector<FieldElem> mu;      // per edge, nonzero

  friend bool operator==(const StructuredAut&, const StructuredAut&) = default;
  auto operator<=>(const StructuredAut&) const = default;
};

StructuredAut structured_identity(const GraphCoalgebra& gc);

// InvalidSigma when sigma is not an automorphism of the digraph, ZeroMu
// when some mu(e) vanishes, GraphMismatch on wrong sizes.
void validate_structured(const GraphCoalgebra& gc, const StructuredAut& f);

// Image edge index per edge under a digraph automorphism.
std::vector<int> edge_action(const Digraph& g, const Perm& sigma);

LinearMap structured_to_matrix(const GraphCoalgebra& gc, const StructuredAut& f);

// f2 after f1. Matches matrix multiplication of the structured matrices.
StructuredAut compose(const GraphCoalgebra& gc, const StructuredAut& f2, const StructuredAut& f1);

StructuredAut invert(const GraphCoalgebra& gc, const StructuredAut& f);

// Reads (sigma, lambda, mu) off an invertible coalgebra automorphism
// matrix: sigma from the vertex columns, lambda and mu from each edge
// column. NotAMorphism / NotInvertible / MalformedImage on anything that
// is not such a matrix.
StructuredAut decompose_matrix_aut(const GraphCoalgebra& gc, const LinearMap& m);

// All structured automorphisms over the given graph automorphisms, in
// (sigma, then per-edge odometer) order.
std::vector<StructuredAut> enumerate_structured(const GraphCoalgebra& gc,
                                                const std::vector<Perm>& graph_auts,
                                                long long cap = Caps{}.brute_oracle);

// |Aut(graph)| * (q(q-1))^|E|, clamped to the cap sentinel value cap+1.
long long structured_count(const GraphCoalgebra& gc, long long aut_count, long long clamp);

// Checks the split extension structure of the automorphism group: the
// restriction to grouplikes, the kernel size, the section homomorphism,
// agreement with the brute oracle when in reach, and the per-edge
// semidirect factor law.
Report verify_exact_sequence(const GraphCoalgebra& gc, const Caps& caps = {});

}  // namespace coalg
