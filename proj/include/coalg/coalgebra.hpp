#pragma once

#include <string>
#include <vector>

#include "coalg/caps.hpp"
#include "coalg/field.hpp"

namespace coalg {

// One term c * (b_left (x) b_right) of a comultiplication image.
struct CoTerm {
  int left = 0;
  int right = 0;
  FieldElem coeff;

  friend bool operator==(const CoTerm&, const CoTerm&) = default;
  auto operator<=>(const CoTerm&) const = default;
};

// Finite-dimensional coalgebra over a fixed basis: comult[i] lists the
// terms of Delta(b_i), counit[i] holds eps(b_i). Terms with equal (left,
// right) keys are collapsed at construction; zero terms are dropped.
struct Coalgebra {
  Field field;
  std::vector<std::string> basis;
  std::vector<std::vector<CoTerm>> comult;
  std::vector<FieldElem> counit;

  int dim() const { return static_cast<int>(basis.size()); }

  // Index ranges, coefficient validity, duplicate basis names.
  void check_shape() const;
  void normalize();  // sort terms, merge duplicates, drop zeros

  friend bool operator==(const Coalgebra&, const Coalgebra&) = default;
};

struct AxiomReport {
  bool coassoc = true;
  bool counit = true;
  std::vector<std::string> failures;

  bool ok() const { return coassoc && counit; }
};

// Checks (Delta (x) id) Delta = (id (x) Delta) Delta and both counit laws
// on every basis element.
AxiomReport verify_axioms(const Coalgebra& c);

// Sparse-column matrix over a field; column j is the image of basis
// element j. Columns keep sorted nonzero rows, so equality is canonical.
class LinearMap {
 public:
  LinearMap() = default;
  LinearMap(int rows, int cols) : rows_(rows), cols_(cols) {
    data_.resize(static_cast<size_t>(cols));
  }
  static LinearMap identity_map(const Field& f, int d);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  void set(int r, int c, const FieldElem& v);
  const FieldElem* find(int r, int c) const;  // nullptr when zero
  FieldElem get(const Field& f, int r, int c) const;
  const std::vector<std::pair<int, FieldElem>>& column(int c) const {
    return data_[static_cast<size_t>(c)];
  }

  friend bool operator==(const LinearMap&, const LinearMap&) = default;
  auto operator<=>(const LinearMap&) const = default;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<std::vector<std::pair<int, FieldElem>>> data_;
};

LinearMap matmul(const Field& f, const LinearMap& a, const LinearMap& b);

// Dense Gaussian elimination; meant for small dimensions.
bool is_invertible(const Field& f, const LinearMap& m);

// True when f respects counit and comultiplication: eps_D(f(x)) = eps_C(x)
// and Delta_D(f(x)) = (f (x) f)(Delta_C(x)) on every basis element of C.
bool is_morphism(const Coalgebra& c, const Coalgebra& d, const LinearMap& f);

// All nonzero x with Delta(x) = x (x) x and eps(x) = 1, by scanning the
// q^dim coefficient vectors in index order.
std::vector<std::vector<FieldElem>> grouplikes(const Coalgebra& c,
                                               long long cap = Caps{}.grouplike_enum);

// Exhaustive oracle: every invertible matrix that is_morphism accepts,
// enumerating all q^(dim^2) candidates in lexicographic entry order.
std::vector<LinearMap> automorphisms_brute(const Coalgebra& c,
                                           long long cap = Caps{}.brute_oracle);

}  // namespace coalg
