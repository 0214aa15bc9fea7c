#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "coalg/error.hpp"

namespace coalg {

// Permutation of {0..m-1} in one-line notation.
struct Perm {
  std::vector<int> img;

  static Perm identity(int m) {
    Perm p;
    p.img.resize(static_cast<size_t>(m));
    std::iota(p.img.begin(), p.img.end(), 0);
    return p;
  }

  int degree() const { return static_cast<int>(img.size()); }
  int operator()(int x) const { return img[static_cast<size_t>(x)]; }

  bool is_identity() const {
    for (int x = 0; x < degree(); ++x)
      if (img[static_cast<size_t>(x)] != x) return false;
    return true;
  }

  Perm inverse() const {
    Perm r;
    r.img.resize(img.size());
    for (int x = 0; x < degree(); ++x) r.img[static_cast<size_t>(img[static_cast<size_t>(x)])] = x;
    return r;
  }

  // lcm of cycle lengths
  long long order() const {
    std::vector<char> seen(img.size(), 0);
    long long ord = 1;
    for (int x = 0; x < degree(); ++x) {
      if (seen[static_cast<size_t>(x)]) continue;
      long long len = 0;
      for (int y = x; !seen[static_cast<size_t>(y)]; y = img[static_cast<size_t>(y)]) {
        seen[static_cast<size_t>(y)] = 1;
        ++len;
      }
      ord = std::lcm(ord, len);
    }
    return ord;
  }

  friend bool operator==(const Perm&, const Perm&) = default;
  auto operator<=>(const Perm&) const = default;
};

inline bool is_valid_permutation(const std::vector<int>& img) {
  std::vector<char> hit(img.size(), 0);
  for (int v : img) {
    if (v < 0 || v >= static_cast<int>(img.size()) || hit[static_cast<size_t>(v)]) return false;
    hit[static_cast<size_t>(v)] = 1;
  }
  return true;
}

inline Perm make_perm(std::vector<int> img) {
  if (!is_valid_permutation(img))
    fail(Errc::parse_error, "image list is not a permutation");
  return Perm{std::move(img)};
}

// Apply b first, then a.
inline Perm compose(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree())
    fail(Errc::degree_mismatch, "composing permutations of degree " +
                                    std::to_string(a.degree()) + " and " +
                                    std::to_string(b.degree()));
  Perm r;
  r.img.resize(a.img.size());
  for (int x = 0; x < a.degree(); ++x)
    r.img[static_cast<size_t>(x)] = a.img[static_cast<size_t>(b.img[static_cast<size_t>(x)])];
  return r;
}

inline std::string one_line(const Perm& p) {
  std::string s = "[";
  for (int x = 0; x < p.degree(); ++x) {
    if (x) s += " ";
    s += std::to_string(p(x));
  }
  return s + "]";
}

inline std::string cycle_notation(const Perm& p) {
  std::string s;
  std::vector<char> seen(p.img.size(), 0);
  for (int x = 0; x < p.degree(); ++x) {
    if (seen[static_cast<size_t>(x)] || p(x) == x) continue;
    s += "(";
    bool first = true;
    for (int y = x; !seen[static_cast<size_t>(y)]; y = p(y)) {
      seen[static_cast<size_t>(y)] = 1;
      if (!first) s += " ";
      s += std::to_string(y);
      first = false;
    }
    s += ")";
  }
  return s.empty() ? "()" : s;
}

}  // namespace coalg
