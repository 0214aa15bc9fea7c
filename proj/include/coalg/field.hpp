#pragma once

#include <string>
#include <vector>

#include "coalg/error.hpp"

namespace coalg {

// Element of GF(p^n) in polynomial representation: c[i] is the coefficient
// of x^i, reduced mod p. The vector always has length n.
struct FieldElem {
  std::vector<int> c;

  friend bool operator==(const FieldElem&, const FieldElem&) = default;
  auto operator<=>(const FieldElem&) const = default;

  bool is_zero() const {
    for (int v : c)
      if (v != 0) return false;
    return true;
  }
};

// GF(p^n) with a fixed monic irreducible modulus. The modulus is the
// lexicographically smallest irreducible candidate, comparing coefficient
// tuples low degree first, so equal (p, n) always give the same field.
class Field {
 public:
  // A default-constructed Field is an empty placeholder; assign a made one
  // before use.
  Field() = default;

  static Field make(long long p, long long n, long long size_cap = 1LL << 16);

  // Accepts "p^n" or a bare prime "p".
  static Field parse(const std::string& text, long long size_cap = 1LL << 16);

  long long p() const { return p_; }
  long long n() const { return n_; }
  long long order() const { return order_; }
  const std::vector<int>& modulus() const { return mod_; }
  std::string label() const;  // "p^n"

  FieldElem zero() const;
  FieldElem one() const;
  FieldElem from_int(long long v) const;  // v mod p in the constant slot
  FieldElem gen() const;                  // the class of x, needs n >= 2

  // Elements are indexed 0..p^n-1 by sum of c[i] * p^i.
  FieldElem element(long long index) const;
  long long index_of(const FieldElem& a) const;

  FieldElem add(const FieldElem& a, const FieldElem& b) const;
  FieldElem sub(const FieldElem& a, const FieldElem& b) const;
  FieldElem neg(const FieldElem& a) const;
  FieldElem mul(const FieldElem& a, const FieldElem& b) const;
  FieldElem inv(const FieldElem& a) const;  // DivisionByZero on zero
  FieldElem pow(const FieldElem& a, long long e) const;

  std::string format(const FieldElem& a) const;  // "t+1" style display

  friend bool operator==(const Field&, const Field&) = default;

 private:
  void check(const FieldElem& a) const;

  long long p_ = 0, n_ = 0, order_ = 0;
  std::vector<int> mod_;  // length n+1, monic
};

}  // namespace coalg
