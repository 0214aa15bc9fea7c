#include "coalg/coalgebra.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace coalg {

void Coalgebra::check_shape() const {
  if (comult.size() != basis.size() || counit.size() != basis.size())
    fail(Errc::shape_mismatch, "comult/counit size does not match basis size");
  std::set<std::string> names;
  for (const std::string& b : basis)
    if (!names.insert(b).second) fail(Errc::parse_error, "duplicate basis name '" + b + "'");
  for (const auto& terms : comult) {
    for (const CoTerm& t : terms) {
      if (t.left < 0 || t.left >= dim() || t.right < 0 || t.right >= dim())
        fail(Errc::shape_mismatch, "comultiplication term index out of range");
      field.index_of(t.coeff);  // validates against the field
    }
  }
  for (const FieldElem& e : counit) field.index_of(e);
}

void Coalgebra::normalize() {
  for (auto& terms : comult) {
    std::map<std::pair<int, int>, FieldElem> acc;
    for (const CoTerm& t : terms) {
      auto [it, fresh] = acc.emplace(std::make_pair(t.left, t.right), t.coeff);
      if (!fresh) it->second = field.add(it->second, t.coeff);
    }
    terms.clear();
    for (const auto& [key, coeff] : acc)
      if (!coeff.is_zero()) terms.push_back({key.first, key.second, coeff});
  }
}

namespace {

using PairMap = std::map<std::pair<int, int>, FieldElem>;
using TripleMap = std::map<std::tuple<int, int, int>, FieldElem>;

void pair_add(const Field& f, PairMap& m, int a, int b, const FieldElem& c) {
  auto [it, fresh] = m.emplace(std::make_pair(a, b), c);
  if (!fresh) it->second = f.add(it->second, c);
}

void triple_add(const Field& f, TripleMap& m, int a, int b, int c, const FieldElem& v) {
  auto [it, fresh] = m.emplace(std::make_tuple(a, b, c), v);
  if (!fresh) it->second = f.add(it->second, v);
}

template <typename Map>
void drop_zeros(Map& m) {
  for (auto it = m.begin(); it != m.end();)
    it = it->second.is_zero() ? m.erase(it) : std::next(it);
}

}  // namespace

AxiomReport verify_axioms(const Coalgebra& c) {
  c.check_shape();
  const Field& f = c.field;
  AxiomReport report;

  for (int x = 0; x < c.dim(); ++x) {
    const auto& terms = c.comult[static_cast<size_t>(x)];

    // counit laws: both contractions of Delta(x) must give x back
    std::vector<FieldElem> left_law(static_cast<size_t>(c.dim()), f.zero());
    std::vector<FieldElem> right_law(static_cast<size_t>(c.dim()), f.zero());
    for (const CoTerm& t : terms) {
      auto& l = left_law[static_cast<size_t>(t.right)];
      l = f.add(l, f.mul(t.coeff, c.counit[static_cast<size_t>(t.left)]));
      auto& r = right_law[static_cast<size_t>(t.left)];
      r = f.add(r, f.mul(t.coeff, c.counit[static_cast<size_t>(t.right)]));
    }
    for (int i = 0; i < c.dim(); ++i) {
      FieldElem expect = (i == x) ? f.one() : f.zero();
      if (left_law[static_cast<size_t>(i)] != expect) {
        report.counit = false;
        report.failures.push_back("(eps (x) id) Delta fails on '" +
                                  c.basis[static_cast<size_t>(x)] + "'");
        break;
      }
      if (right_law[static_cast<size_t>(i)] != expect) {
        report.counit = false;
        report.failures.push_back("(id (x) eps) Delta fails on '" +
                                  c.basis[static_cast<size_t>(x)] + "'");
        break;
      }
    }

    // coassociativity
    TripleMap lhs, rhs;
    for (const CoTerm& t : terms) {
      for (const CoTerm& s : c.comult[static_cast<size_t>(t.left)])
        triple_add(f, lhs, s.left, s.right, t.right, f.mul(t.coeff, s.coeff));
      for (const CoTerm& s : c.comult[static_cast<size_t>(t.right)])
        triple_add(f, rhs, t.left, s.left, s.right, f.mul(t.coeff, s.coeff));
    }
    drop_zeros(lhs);
    drop_zeros(rhs);
    if (lhs != rhs) {
      report.coassoc = false;
      report.failures.push_back("coassociativity fails on '" + c.basis[static_cast<size_t>(x)] +
                                "'");
    }
  }
  return report;
}

LinearMap LinearMap::identity_map(const Field& f, int d) {
  LinearMap m(d, d);
  for (int i = 0; i < d; ++i) m.set(i, i, f.one());
  return m;
}

void LinearMap::set(int r, int c, const FieldElem& v) {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
    fail(Errc::shape_mismatch, "matrix entry out of range");
  auto& col = data_[static_cast<size_t>(c)];
  auto it = std::lower_bound(col.begin(), col.end(), r,
                             [](const auto& entry, int row) { return entry.first < row; });
  if (it != col.end() && it->first == r) {
    if (v.is_zero())
      col.erase(it);
    else
      it->second = v;
  } else if (!v.is_zero()) {
    col.insert(it, {r, v});
  }
}

const FieldElem* LinearMap::find(int r, int c) const {
  const auto& col = data_[static_cast<size_t>(c)];
  auto it = std::lower_bound(col.begin(), col.end(), r,
                             [](const auto& entry, int row) { return entry.first < row; });
  if (it != col.end() && it->first == r) return &it->second;
  return nullptr;
}

FieldElem LinearMap::get(const Field& f, int r, int c) const {
  const FieldElem* e = find(r, c);
  return e ? *e : f.zero();
}

LinearMap matmul(const Field& f, const LinearMap& a, const LinearMap& b) {
  if (a.cols() != b.rows()) fail(Errc::shape_mismatch, "matrix shapes do not compose");
  LinearMap r(a.rows(), b.cols());
  for (int j = 0; j < b.cols(); ++j) {
    std::map<int, FieldElem> acc;
    for (const auto& [k, bk] : b.column(j)) {
      for (const auto& [i, aik] : a.column(k)) {
        auto [it, fresh] = acc.emplace(i, f.mul(aik, bk));
        if (!fresh) it->second = f.add(it->second, f.mul(aik, bk));
      }
    }
    for (const auto& [i, v] : acc)
      if (!v.is_zero()) r.set(i, j, v);
  }
  return r;
}

bool is_invertible(const Field& f, const LinearMap& m) {
  if (m.rows() != m.cols()) return false;
  const int d = m.rows();
  std::vector<std::vector<FieldElem>> a(static_cast<size_t>(d),
                                        std::vector<FieldElem>(static_cast<size_t>(d), f.zero()));
  for (int c = 0; c < d; ++c)
    for (const auto& [r, v] : m.column(c)) a[static_cast<size_t>(r)][static_cast<size_t>(c)] = v;

  for (int col = 0; col < d; ++col) {
    int pivot = -1;
    for (int r = col; r < d; ++r) {
      if (!a[static_cast<size_t>(r)][static_cast<size_t>(col)].is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return false;
    std::swap(a[static_cast<size_t>(pivot)], a[static_cast<size_t>(col)]);
    FieldElem scale = f.inv(a[static_cast<size_t>(col)][static_cast<size_t>(col)]);
    for (int c = col; c < d; ++c)
      a[static_cast<size_t>(col)][static_cast<size_t>(c)] =
          f.mul(scale, a[static_cast<size_t>(col)][static_cast<size_t>(c)]);
    for (int r = 0; r < d; ++r) {
      if (r == col) continue;
      FieldElem factor = a[static_cast<size_t>(r)][static_cast<size_t>(col)];
      if (factor.is_zero()) continue;
      for (int c = col; c < d; ++c)
        a[static_cast<size_t>(r)][static_cast<size_t>(c)] =
            f.sub(a[static_cast<size_t>(r)][static_cast<size_t>(c)],
                  f.mul(factor, a[static_cast<size_t>(col)][static_cast<size_t>(c)]));
    }
  }
  return true;
}

bool is_morphism(const Coalgebra& c, const Coalgebra& d, const LinearMap& m) {
  if (!(c.field == d.field))
    fail(Errc::field_mismatch, "coalgebras live over different fields");
  if (m.rows() != d.dim() || m.cols() != c.dim())
    fail(Errc::shape_mismatch, "map shape " + std::to_string(m.rows()) + "x" +
                                   std::to_string(m.cols()) + " does not match dims " +
                                   std::to_string(d.dim()) + "<-" + std::to_string(c.dim()));
  const Field& f = c.field;

  for (int x = 0; x < c.dim(); ++x) {
    // counit: eps_D(f(b_x)) == eps_C(b_x)
    FieldElem eps = f.zero();
    for (const auto& [r, v] : m.column(x))
      eps = f.add(eps, f.mul(v, d.counit[static_cast<size_t>(r)]));
    if (eps != c.counit[static_cast<size_t>(x)]) return false;
  }

  for (int x = 0; x < c.dim(); ++x) {
    PairMap lhs, rhs;
    for (const auto& [r, v] : m.column(x))
      for (const CoTerm& t : d.comult[static_cast<size_t>(r)])
        pair_add(f, lhs, t.left, t.right, f.mul(v, t.coeff));
    for (const CoTerm& t : c.comult[static_cast<size_t>(x)])
      for (const auto& [a, va] : m.column(t.left))
        for (const auto& [b, vb] : m.column(t.right))
          pair_add(f, rhs, a, b, f.mul(t.coeff, f.mul(va, vb)));
    drop_zeros(lhs);
    drop_zeros(rhs);
    if (lhs != rhs) return false;
  }
  return true;
}

namespace {

long long pow_clamped(long long base, long long exp, long long clamp) {
  long long r = 1;
  for (long long i = 0; i < exp; ++i) {
    if (r > clamp / base) return clamp + 1;
    r *= base;
  }
  return r;
}

}  // namespace

std::vector<std::vector<FieldElem>> grouplikes(const Coalgebra& c, long long cap) {
  c.check_shape();
  const Field& f = c.field;
  const long long q = f.order();
  const int d = c.dim();
  long long total = pow_clamped(q, d, cap);
  if (total > cap)
    fail(Errc::enumeration_cap_exceeded, "grouplike scan needs " + std::to_string(q) + "^" +
                                             std::to_string(d) + " vectors, cap " +
                                             std::to_string(cap));

  std::vector<std::vector<FieldElem>> found;
  std::vector<long long> digits(static_cast<size_t>(d), 0);
  std::vector<FieldElem> x(static_cast<size_t>(d), f.zero());
  for (long long step = 0; step < total; ++step) {
    if (step > 0) {
      // odometer, last coordinate fastest
      for (int i = d - 1; i >= 0; --i) {
        auto& dig = digits[static_cast<size_t>(i)];
        if (++dig < q) {
          x[static_cast<size_t>(i)] = f.element(dig);
          break;
        }
        dig = 0;
        x[static_cast<size_t>(i)] = f.zero();
      }
    }

    FieldElem eps = f.zero();
    bool any = false;
    for (int i = 0; i < d; ++i) {
      if (x[static_cast<size_t>(i)].is_zero()) continue;
      any = true;
      eps = f.add(eps, f.mul(x[static_cast<size_t>(i)], c.counit[static_cast<size_t>(i)]));
    }
    if (!any || eps != f.one()) continue;

    PairMap delta;
    for (int i = 0; i < d; ++i) {
      if (x[static_cast<size_t>(i)].is_zero()) continue;
      for (const CoTerm& t : c.comult[static_cast<size_t>(i)])
        pair_add(f, delta, t.left, t.right, f.mul(x[static_cast<size_t>(i)], t.coeff));
    }
    drop_zeros(delta);

    PairMap tensor;
    for (int i = 0; i < d; ++i) {
      if (x[static_cast<size_t>(i)].is_zero()) continue;
      for (int j = 0; j < d; ++j) {
        if (x[static_cast<size_t>(j)].is_zero()) continue;
        tensor[{i, j}] = f.mul(x[static_cast<size_t>(i)], x[static_cast<size_t>(j)]);
      }
    }
    if (delta == tensor) found.push_back(x);
  }
  return found;
}

std::vector<LinearMap> automorphisms_brute(const Coalgebra& c, long long cap) {
  c.check_shape();
  const Field& f = c.field;
  const long long q = f.order();
  const int d = c.dim();
  long long total = pow_clamped(q, static_cast<long long>(d) * d, cap);
  if (total > cap)
    fail(Errc::oracle_cap_exceeded, "matrix scan needs " + std::to_string(q) + "^" +
                                        std::to_string(static_cast<long long>(d) * d) +
                                        " candidates, cap " + std::to_string(cap));

  std::vector<LinearMap> found;
  std::vector<long long> digits(static_cast<size_t>(d) * static_cast<size_t>(d), 0);
  for (long long step = 0; step < total; ++step) {
    if (step > 0) {
      for (int i = static_cast<int>(digits.size()) - 1; i >= 0; --i) {
        if (++digits[static_cast<size_t>(i)] < q) break;
        digits[static_cast<size_t>(i)] = 0;
      }
    }
    LinearMap m(d, d);
    for (int col = 0; col < d; ++col)
      for (int row = 0; row < d; ++row) {
        long long dig = digits[static_cast<size_t>(col) * d + row];
        if (dig != 0) m.set(row, col, f.element(dig));
      }
    if (!is_morphism(c, c, m)) continue;
    if (!is_invertible(f, m)) continue;
    found.push_back(std::move(m));
  }
  return found;
}

}  // namespace coalg
