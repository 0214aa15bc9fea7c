#include "coalg/group.hpp"

#include <algorithm>
#include <set>

namespace coalg {

FiniteGroup FiniteGroup::close(int degree, const std::vector<Perm>& generators, long long cap) {
  FiniteGroup g;
  g.degree_ = degree;
  g.generators_ = generators;
  for (const Perm& s : generators) {
    if (s.degree() != degree)
      fail(Errc::degree_mismatch, "generator degree " + std::to_string(s.degree()) +
                                      " does not match group degree " + std::to_string(degree));
    if (!is_valid_permutation(s.img)) fail(Errc::parse_error, "generator is not a permutation");
  }

  Perm id = Perm::identity(degree);
  g.elements_.push_back(id);
  g.index_[id.img] = 0;
  for (size_t head = 0; head < g.elements_.size(); ++head) {
    for (const Perm& s : generators) {
      Perm next = compose(g.elements_[head], s);
      if (g.index_.count(next.img)) continue;
      if (static_cast<long long>(g.elements_.size()) >= cap)
        fail(Errc::group_too_large,
             "closure exceeds cap " + std::to_string(cap) + " elements");
      g.index_[next.img] = static_cast<int>(g.elements_.size());
      g.elements_.push_back(next);
    }
  }
  return g;
}

int FiniteGroup::mult(int a, int b) const {
  Perm r = compose(elements_[static_cast<size_t>(a)], elements_[static_cast<size_t>(b)]);
  auto it = index_.find(r.img);
  return it == index_.end() ? -1 : it->second;
}

int FiniteGroup::inverse_of(int a) const {
  auto it = index_.find(elements_[static_cast<size_t>(a)].inverse().img);
  return it == index_.end() ? -1 : it->second;
}

int FiniteGroup::index_of(const Perm& p) const {
  auto it = index_.find(p.img);
  return it == index_.end() ? -1 : it->second;
}

ElementSet subgroup_closure(const FiniteGroup& g, ElementSet seed) {
  std::set<int> have{g.identity_index()};
  std::vector<int> queue{g.identity_index()};
  std::sort(seed.begin(), seed.end());
  seed.erase(std::unique(seed.begin(), seed.end()), seed.end());
  // Products of seed elements starting from the identity; in a finite group
  // the generated submonoid is already a subgroup.
  for (size_t head = 0; head < queue.size(); ++head) {
    for (int s : seed) {
      int next = g.mult(queue[head], s);
      if (have.insert(next).second) queue.push_back(next);
    }
  }
  return ElementSet(have.begin(), have.end());
}

bool is_subgroup(const FiniteGroup& g, const ElementSet& h) {
  if (!std::binary_search(h.begin(), h.end(), g.identity_index())) return false;
  for (int a : h)
    for (int b : h)
      if (!std::binary_search(h.begin(), h.end(), g.mult(a, b))) return false;
  return true;
}

bool is_normal(const FiniteGroup& g, const ElementSet& h) {
  for (long long x = 0; x < g.order(); ++x) {
    int xi = g.inverse_of(static_cast<int>(x));
    for (int a : h) {
      int conj = g.mult(g.mult(static_cast<int>(x), a), xi);
      if (!std::binary_search(h.begin(), h.end(), conj)) return false;
    }
  }
  return true;
}

namespace {

ElementSet normal_closure_of(const FiniteGroup& g, int a) {
  std::set<int> conj;
  for (long long x = 0; x < g.order(); ++x) {
    int xi = g.inverse_of(static_cast<int>(x));
    conj.insert(g.mult(g.mult(static_cast<int>(x), a), xi));
  }
  return subgroup_closure(g, ElementSet(conj.begin(), conj.end()));
}

void sort_subgroup_list(std::vector<ElementSet>& list) {
  std::sort(list.begin(), list.end(), [](const ElementSet& a, const ElementSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
}

}  // namespace

std::vector<ElementSet> normal_subgroups(const FiniteGroup& g, long long cap) {
  if (g.order() > cap)
    fail(Errc::group_too_large, "group order " + std::to_string(g.order()) +
                                    " exceeds subgroup enumeration cap " + std::to_string(cap));

  std::set<ElementSet> found;
  found.insert(ElementSet{g.identity_index()});
  std::vector<ElementSet> queue;
  for (long long a = 0; a < g.order(); ++a) {
    if (static_cast<int>(a) == g.identity_index()) continue;
    ElementSet n = normal_closure_of(g, static_cast<int>(a));
    if (found.insert(n).second) queue.push_back(n);
  }
  // Every normal subgroup is a join of single-element normal closures, so
  // closing the seed set under pairwise joins lists all of them.
  for (size_t head = 0; head < queue.size(); ++head) {
    std::vector<ElementSet> snapshot(found.begin(), found.end());
    for (const ElementSet& other : snapshot) {
      ElementSet merged = queue[head];
      merged.insert(merged.end(), other.begin(), other.end());
      ElementSet join = subgroup_closure(g, merged);
      if (found.insert(join).second) queue.push_back(join);
    }
  }

  std::vector<ElementSet> result(found.begin(), found.end());
  sort_subgroup_list(result);
  return result;
}

std::vector<ElementSet> all_subgroups(const FiniteGroup& g, long long cap) {
  long long bound = std::min<long long>(cap, 100);
  if (g.order() > bound)
    fail(Errc::group_too_large, "group order " + std::to_string(g.order()) +
                                    " exceeds brute lattice bound " + std::to_string(bound));

  std::set<ElementSet> found;
  std::vector<ElementSet> queue;
  ElementSet trivial{g.identity_index()};
  found.insert(trivial);
  queue.push_back(trivial);
  for (size_t head = 0; head < queue.size(); ++head) {
    ElementSet h = queue[head];
    for (long long a = 0; a < g.order(); ++a) {
      if (std::binary_search(h.begin(), h.end(), static_cast<int>(a))) continue;
      ElementSet seed = h;
      seed.push_back(static_cast<int>(a));
      ElementSet k = subgroup_closure(g, seed);
      if (found.insert(k).second) queue.push_back(k);
    }
  }

  std::vector<ElementSet> result(found.begin(), found.end());
  sort_subgroup_list(result);
  return result;
}

long long exponent(const FiniteGroup& g, const ElementSet& h) {
  long long e = 1;
  for (int a : h) e = std::lcm(e, g.element(a).order());
  return e;
}

ClassVerdict in_class_g(const FiniteGroup& g, long long p, long long n, long long cap) {
  {
    bool prime = p >= 2;
    for (long long d = 2; d * d <= p; ++d)
      if (p % d == 0) prime = false;
    if (!prime) fail(Errc::non_prime, "p = " + std::to_string(p) + " is not prime");
  }
  if (n < 1) fail(Errc::degree_out_of_range, "n = " + std::to_string(n) + " (need n >= 1)");

  long long q = 1;
  for (long long i = 0; i < n; ++i) {
    q *= p;
    if (q > (1LL << 31)) fail(Errc::size_cap_exceeded, "p^n too large for class check");
  }
  const long long d = q * (q - 1);

  ClassVerdict verdict;
  verdict.in_class = true;
  for (const ElementSet& h : normal_subgroups(g, cap)) {
    if (h.size() <= 1) continue;  // the trivial subgroup never disqualifies
    if (d % exponent(g, h) == 0) {
      verdict.in_class = false;
      verdict.witness = h;
      break;  // list is sorted by size, first hit is the smallest witness
    }
  }
  return verdict;
}

}  // namespace coalg
