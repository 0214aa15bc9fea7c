#include "coalg/field.hpp"

#include <sstream>

namespace coalg {
namespace {

bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Dense polynomials over GF(p), coefficient of x^i at position i.
using Poly = std::vector<int>;

int pdeg(const Poly& a) {
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
    if (a[i] != 0) return i;
  return -1;
}

Poly pmul(const Poly& a, const Poly& b, long long p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = static_cast<int>((r[i + j] + static_cast<long long>(a[i]) * b[j]) % p);
  }
  return r;
}

// Remainder of a modulo a monic b of degree >= 1; result has size deg(b).
Poly pmod(Poly a, const Poly& b, long long p) {
  const int db = pdeg(b);
  while (true) {
    const int da = pdeg(a);
    if (da < db) break;
    const long long c = a[static_cast<size_t>(da)];
    const int shift = da - db;
    for (int j = 0; j <= db; ++j) {
      long long t = a[static_cast<size_t>(shift + j)] - c * b[static_cast<size_t>(j)];
      a[static_cast<size_t>(shift + j)] = static_cast<int>(((t % p) + p) % p);
    }
  }
  a.resize(static_cast<size_t>(db), 0);
  return a;
}

bool divides(const Poly& d, const Poly& a, long long p) { return pdeg(pmod(a, d, p)) < 0; }

// No monic factor of degree 1..n/2 divides it.
bool is_irreducible(const Poly& m, long long p) {
  const int n = pdeg(m);
  for (int d = 1; 2 * d <= n; ++d) {
    long long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long long k = 0; k < count; ++k) {
      Poly cand(static_cast<size_t>(d) + 1, 0);
      cand[static_cast<size_t>(d)] = 1;
      long long rest = k;
      for (int i = 0; i < d; ++i) {
        cand[static_cast<size_t>(i)] = static_cast<int>(rest % p);
        rest /= p;
      }
      if (divides(cand, m, p)) return false;
    }
  }
  return true;
}

}  // namespace

Field Field::make(long long p, long long n, long long size_cap) {
  if (!is_prime(p)) fail(Errc::non_prime, "p = " + std::to_string(p) + " is not prime");
  if (n < 1) fail(Errc::degree_out_of_range, "n = " + std::to_string(n) + " (need n >= 1)");

  long long order = 1;
  for (long long i = 0; i < n; ++i) {
    if (order > size_cap / p)
      fail(Errc::size_cap_exceeded,
           "field order " + std::to_string(p) + "^" + std::to_string(n) + " exceeds cap " +
               std::to_string(size_cap));
    order *= p;
  }

  Field f;
  f.p_ = p;
  f.n_ = n;
  f.order_ = order;

  if (n == 1) {
    f.mod_ = {0, 1};  // x, unused by reduction since products stay in degree 0
    return f;
  }

  // Scan constant-to-top coefficient tuples in lexicographic order and take
  // the first irreducible monic candidate.
  long long count = order;
  for (long long k = 0; k < count; ++k) {
    Poly cand(static_cast<size_t>(n) + 1, 0);
    cand[static_cast<size_t>(n)] = 1;
    long long rest = k;
    for (long long i = n - 1; i >= 0; --i) {
      cand[static_cast<size_t>(i)] = static_cast<int>(rest % p);
      rest /= p;
    }
    if (is_irreducible(cand, p)) {
      f.mod_ = cand;
      return f;
    }
  }
  fail(Errc::degree_out_of_range, "no irreducible modulus found");  // unreachable
}

Field Field::parse(const std::string& text, long long size_cap) {
  long long p = 0, n = 1;
  auto caret = text.find('^');
  try {
    if (caret == std::string::npos) {
      size_t used = 0;
      p = std::stoll(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
    } else {
      size_t used = 0;
      p = std::stoll(text.substr(0, caret), &used);
      if (used != caret) throw std::invalid_argument(text);
      std::string rest = text.substr(caret + 1);
      n = std::stoll(rest, &used);
      if (used != rest.size()) throw std::invalid_argument(text);
    }
  } catch (const std::logic_error&) {
    fail(Errc::parse_error, "cannot parse field \"" + text + "\" (want \"p^n\")");
  }
  return make(p, n, size_cap);
}

std::string Field::label() const { return std::to_string(p_) + "^" + std::to_string(n_); }

void Field::check(const FieldElem& a) const {
  if (static_cast<long long>(a.c.size()) != n_)
    fail(Errc::field_mismatch, "element has " + std::to_string(a.c.size()) +
                                   " coefficients, field " + label() + " needs " +
                                   std::to_string(n_));
  for (int v : a.c)
    if (v < 0 || v >= p_)
      fail(Errc::field_mismatch, "coefficient " + std::to_string(v) + " out of range mod " +
                                     std::to_string(p_));
}

FieldElem Field::zero() const { return FieldElem{std::vector<int>(static_cast<size_t>(n_), 0)}; }

FieldElem Field::one() const { return from_int(1); }

FieldElem Field::from_int(long long v) const {
  FieldElem r = zero();
  r.c[0] = static_cast<int>(((v % p_) + p_) % p_);
  return r;
}

FieldElem Field::gen() const {
  if (n_ < 2) fail(Errc::degree_out_of_range, "GF(" + label() + ") has no generator slot");
  FieldElem r = zero();
  r.c[1] = 1;
  return r;
}

FieldElem Field::element(long long index) const {
  if (index < 0 || index >= order_)
    fail(Errc::field_mismatch, "element index " + std::to_string(index) + " out of range");
  FieldElem r = zero();
  for (long long i = 0; i < n_; ++i) {
    r.c[static_cast<size_t>(i)] = static_cast<int>(index % p_);
    index /= p_;
  }
  return r;
}

long long Field::index_of(const FieldElem& a) const {
  check(a);
  long long idx = 0;
  for (long long i = n_ - 1; i >= 0; --i) idx = idx * p_ + a.c[static_cast<size_t>(i)];
  return idx;
}

FieldElem Field::add(const FieldElem& a, const FieldElem& b) const {
  check(a);
  check(b);
  FieldElem r = zero();
  for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = static_cast<int>((a.c[i] + b.c[i]) % p_);
  return r;
}

FieldElem Field::sub(const FieldElem& a, const FieldElem& b) const { return add(a, neg(b)); }

FieldElem Field::neg(const FieldElem& a) const {
  check(a);
  FieldElem r = zero();
  for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = static_cast<int>((p_ - a.c[i]) % p_);
  return r;
}

FieldElem Field::mul(const FieldElem& a, const FieldElem& b) const {
  check(a);
  check(b);
  Poly prod = pmul(a.c, b.c, p_);
  if (pdeg(prod) >= n_) prod = pmod(prod, mod_, p_);
  prod.resize(static_cast<size_t>(n_), 0);
  return FieldElem{prod};
}

FieldElem Field::inv(const FieldElem& a) const {
  check(a);
  if (a.is_zero()) fail(Errc::division_by_zero, "inverse of zero in GF(" + label() + ")");
  return pow(a, order_ - 2);  // a^(q-1) = 1 for a != 0
}

FieldElem Field::pow(const FieldElem& a, long long e) const {
  check(a);
  FieldElem base = a;
  FieldElem acc = one();
  while (e > 0) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

std::string Field::format(const FieldElem& a) const {
  check(a);
  std::ostringstream out;
  bool first = true;
  for (long long i = n_ - 1; i >= 0; --i) {
    int c = a.c[static_cast<size_t>(i)];
    if (c == 0) continue;
    if (!first) out << "+";
    first = false;
    if (i == 0 || c != 1) out << c;
    if (i >= 1) out << "t";
    if (i >= 2) out << "^" << i;
  }
  if (first) out << "0";
  return out.str();
}

}  // namespace coalg
