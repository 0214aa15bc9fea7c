#pragma once

#include <map>
#include <optional>
#include <vector>

#include "coalg/caps.hpp"
#include "coalg/perm.hpp"

namespace coalg {

// Closure of a permutation generating set. Elements are stored in BFS
// discovery order from the identity, generators applied in input order, so
// equal inputs always list elements identically. Multiplication is
// composition: mult(a, b) applies b first.
class FiniteGroup {
 public:
  static FiniteGroup close(int degree, const std::vector<Perm>& generators,
                           long long cap = Caps{}.group_close);

  int degree() const { return degree_; }
  long long order() const { return static_cast<long long>(elements_.size()); }
  const std::vector<Perm>& elements() const { return elements_; }
  const Perm& element(int i) const { return elements_[static_cast<size_t>(i)]; }
  const std::vector<Perm>& generators() const { return generators_; }
  int identity_index() const { return 0; }

  int mult(int a, int b) const;
  int inverse_of(int a) const;
  int index_of(const Perm& p) const;  // -1 when absent

 private:
  int degree_ = 0;
  std::vector<Perm> generators_;
  std::vector<Perm> elements_;
  std::map<std::vector<int>, int> index_;
};

// Subgroups are sorted element-index lists.
using ElementSet = std::vector<int>;

ElementSet subgroup_closure(const FiniteGroup& g, ElementSet seed);

bool is_subgroup(const FiniteGroup& g, const ElementSet& h);
bool is_normal(const FiniteGroup& g, const ElementSet& h);

// All normal subgroups, ordered by (size, elements). Computed as the join
// closure of the single-element normal closures, which stays polynomial in
// |G| even when every conjugacy class is a singleton.
std::vector<ElementSet> normal_subgroups(const FiniteGroup& g,
                                         long long cap = Caps{}.subgroup_enum);

// Full subgroup lattice by brute extension, for cross-checking on small
// groups. Guarded to |G| <= 100.
std::vector<ElementSet> all_subgroups(const FiniteGroup& g,
                                      long long cap = Caps{}.subgroup_enum);

long long exponent(const FiniteGroup& g, const ElementSet& h);

struct ClassVerdict {
  bool in_class = false;
  std::optional<ElementSet> witness;  // smallest offending normal subgroup
};

// Membership test for the family over GF(p^n): no nontrivial normal
// subgroup may have exponent dividing p^n * (p^n - 1).
ClassVerdict in_class_g(const FiniteGroup& g, long long p, long long n,
                        long long cap = Caps{}.subgroup_enum);

}  // namespace coalg
