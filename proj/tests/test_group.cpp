#include <doctest.h>

#include <algorithm>
#include <set>

#include "coalg/group.hpp"

using namespace coalg;

namespace {

FiniteGroup s3() { return FiniteGroup::close(3, {make_perm({1, 0, 2}), make_perm({1, 2, 0})}); }

FiniteGroup cyclic(int n) {
  std::vector<int> img(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) img[static_cast<size_t>(i)] = (i + 1) % n;
  return FiniteGroup::close(n, {Perm{img}});
}

std::vector<size_t> sizes(const std::vector<ElementSet>& sets) {
  std::vector<size_t> out;
  for (const auto& s : sets) out.push_back(s.size());
  return out;
}

}  // namespace

TEST_SUITE("group") {

TEST_CASE("permutation basics") {
  Perm p = make_perm({1, 2, 0});
  CHECK(p.order() == 3);
  CHECK(p.inverse() == make_perm({2, 0, 1}));
  CHECK(compose(p, p.inverse()).is_identity());
  CHECK(Perm::identity(4).order() == 1);
  CHECK(one_line(make_perm({0, 2, 1})) == "[0 2 1]");
  CHECK(cycle_notation(make_perm({1, 0, 2})) == "(0 1)");
  CHECK(cycle_notation(Perm::identity(3)) == "()");
  CHECK_THROWS_AS(make_perm({0, 0, 1}), Error);
  CHECK_THROWS_AS(compose(Perm::identity(2), Perm::identity(3)), Error);
}

TEST_CASE("closure sizes") {
  CHECK(s3().order() == 6);
  CHECK(cyclic(3).order() == 3);
  CHECK(FiniteGroup::close(3, {Perm::identity(3)}).order() == 1);
  CHECK(FiniteGroup::close(3, {}).order() == 1);
  CHECK_THROWS_AS(FiniteGroup::close(3, {make_perm({1, 0, 2}), make_perm({1, 2, 0})}, 3), Error);
}

TEST_CASE("multiplication table matches composition") {
  FiniteGroup g = s3();
  CHECK(g.identity_index() == 0);
  CHECK(g.element(0).is_identity());
  for (int a = 0; a < g.order(); ++a) {
    CHECK(g.mult(a, g.inverse_of(a)) == 0);
    CHECK(g.mult(g.inverse_of(a), a) == 0);
    for (int b = 0; b < g.order(); ++b)
      CHECK(g.element(g.mult(a, b)) == compose(g.element(a), g.element(b)));
  }
  // order divides degree!
  long long fact = 1;
  for (int i = 2; i <= g.degree(); ++i) fact *= i;
  CHECK(fact % g.order() == 0);
}

TEST_CASE("subgroup closure and predicates") {
  FiniteGroup g = s3();
  ElementSet whole = subgroup_closure(g, {1, 2});
  CHECK(whole.size() <= 6);
  CHECK(is_subgroup(g, whole));
  CHECK(is_subgroup(g, {0}));
  CHECK_FALSE(is_subgroup(g, ElementSet{0, 1, 2, 3, 4}));

  // the rotation subgroup is normal, a single transposition's is not
  int rot = -1, swap = -1;
  for (int i = 1; i < g.order(); ++i) {
    if (g.element(i).order() == 3 && rot < 0) rot = i;
    if (g.element(i).order() == 2 && swap < 0) swap = i;
  }
  CHECK(is_normal(g, subgroup_closure(g, {rot})));
  CHECK_FALSE(is_normal(g, subgroup_closure(g, {swap})));
}

TEST_CASE("normal subgroups agree with the brute lattice") {
  for (const FiniteGroup& g :
       {s3(), cyclic(4), cyclic(6), FiniteGroup::close(4, {make_perm({1, 0, 2, 3}),
                                                           make_perm({0, 1, 3, 2})})}) {
    std::vector<ElementSet> fast = normal_subgroups(g);
    std::vector<ElementSet> brute;
    for (const ElementSet& h : all_subgroups(g))
      if (is_normal(g, h)) brute.push_back(h);
    std::sort(brute.begin(), brute.end(), [](const ElementSet& a, const ElementSet& b) {
      return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    CHECK(fast == brute);
    for (const ElementSet& h : fast) {
      CHECK(is_subgroup(g, h));
      CHECK(is_normal(g, h));
      CHECK(static_cast<long long>(h.size()) <= g.order());
      CHECK(g.order() % static_cast<long long>(h.size()) == 0);           // Lagrange
      CHECK(static_cast<long long>(h.size()) % exponent(g, h) == 0);      // exponent | order
    }
  }
}

TEST_CASE("normal subgroup counts on known groups") {
  CHECK(sizes(normal_subgroups(s3())) == std::vector<size_t>{1, 3, 6});
  CHECK(sizes(normal_subgroups(cyclic(4))) == std::vector<size_t>{1, 2, 4});
  CHECK(sizes(normal_subgroups(FiniteGroup::close(1, {}))) == std::vector<size_t>{1});
  CHECK(all_subgroups(s3()).size() == 6);  // 1, three flips, rotations, all
}

TEST_CASE("exponent") {
  FiniteGroup g = s3();
  ElementSet whole;
  for (int i = 0; i < g.order(); ++i) whole.push_back(i);
  CHECK(exponent(g, whole) == 6);
  CHECK(exponent(g, {0}) == 1);
  FiniteGroup klein = FiniteGroup::close(4, {make_perm({1, 0, 3, 2}), make_perm({2, 3, 0, 1})});
  ElementSet all4 = {0, 1, 2, 3};
  CHECK(exponent(klein, all4) == 2);
}

TEST_CASE("class membership") {
  // exponent must not divide p^n (p^n - 1) = 2 for any nontrivial normal
  // subgroup
  CHECK(in_class_g(s3(), 2, 1).in_class);
  ClassVerdict z2 = in_class_g(cyclic(2), 2, 1);
  CHECK_FALSE(z2.in_class);
  REQUIRE(z2.witness.has_value());
  CHECK(z2.witness->size() == 2);
  CHECK(in_class_g(FiniteGroup::close(1, {}), 2, 1).in_class);
  CHECK_FALSE(in_class_g(cyclic(4), 2, 1).in_class);   // Z/2 inside is normal
  CHECK_FALSE(in_class_g(cyclic(6), 2, 1).in_class);   // contains Z/2
  CHECK(in_class_g(cyclic(3), 2, 1).in_class);
  CHECK_FALSE(in_class_g(cyclic(3), 3, 1).in_class);  // exponent 3 | 3*2
  // exponents 3 and 6 both fail to divide 5*4 = 20
  CHECK(in_class_g(s3(), 5, 1).in_class);
}

TEST_CASE("class membership witness is the smallest offender") {
  ClassVerdict v = in_class_g(cyclic(6), 2, 1);
  REQUIRE(v.witness.has_value());
  CHECK(v.witness->size() == 2);  // the Z/2 inside Z/6, not Z/6 itself
}

}  // TEST_SUITE
