#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "surfsym/errors.hpp"
#include "surfsym/numtheory.hpp"

using namespace surfsym;

namespace {
Int lcm_of(std::vector<Int> v) { return lcm_list(v); }
}  // namespace

TEST_CASE("lcm_list spot values") {
  CHECK(lcm_of({7, 7}) == 7);
  CHECK(lcm_of({3, 9}) == 9);
  CHECK(lcm_of({2, 3, 3}) == 6);
  CHECK_THROWS_AS(lcm_of({}), InvalidInput);
  CHECK_THROWS_AS(lcm_of({0, 3}), InvalidInput);
}

TEST_CASE("lcm_list divides every common multiple") {
  for (Int a = 1; a <= 12; ++a)
    for (Int b = 1; b <= 12; ++b)
      for (Int c = 1; c <= 12; ++c) {
        const Int l = lcm_of({a, b, c});
        CHECK(l % a == 0);
        CHECK(l % b == 0);
        CHECK(l % c == 0);
        CHECK(l == ref::lcm(ref::lcm(a, b), c));
      }
}

TEST_CASE("divisors agree with trial division") {
  CHECK(divisors(1) == std::vector<Int>{1});
  CHECK(divisors(8) == std::vector<Int>{1, 2, 4, 8});
  CHECK(divisors(6) == std::vector<Int>{1, 2, 3, 6});
  for (Int n = 1; n <= 500; ++n) CHECK(divisors(n) == ref::divisors(n));
}

TEST_CASE("factorize reconstructs n") {
  for (Int n = 1; n <= 1000; ++n) {
    Int prod = 1;
    for (auto [p, e] : factorize(n))
      for (int i = 0; i < e; ++i) prod *= p;
    CHECK(prod == n);
  }
}

TEST_CASE("abelian groups of small order") {
  const auto one = abelian_groups_of_order(1);
  REQUIRE(one.size() == 1);
  CHECK(one[0].invariant_factors().empty());
  CHECK(one[0].order() == 1);

  const auto four = abelian_groups_of_order(4);
  REQUIRE(four.size() == 2);
  CHECK(four[0] == FiniteAbelianGroup::from_invariant_factors({4}));
  CHECK(four[1] == FiniteAbelianGroup::from_invariant_factors({2, 2}));

  CHECK(abelian_groups_of_order(16).size() == 5);
}

TEST_CASE("abelian group counts follow the partition product") {
  for (Int n = 1; n <= 200; ++n) {
    const auto groups = abelian_groups_of_order(n);
    CHECK(static_cast<Int>(groups.size()) == ref::abelian_group_count(n));
    std::set<FiniteAbelianGroup> unique(groups.begin(), groups.end());
    CHECK(unique.size() == groups.size());
    for (const auto& g : groups) {
      CHECK(g.order() == n);
      const auto& f = g.invariant_factors();
      for (std::size_t i = 0; i + 1 < f.size(); ++i) CHECK(f[i + 1] % f[i] == 0);
    }
  }
}

TEST_CASE("canonical form from cyclic factors") {
  const std::vector<Int> a{2, 3}, b{6}, c{4, 6}, d{2, 12}, e{1, 5};
  CHECK(FiniteAbelianGroup::from_cyclic_factors(a) == FiniteAbelianGroup::from_cyclic_factors(b));
  CHECK(FiniteAbelianGroup::from_cyclic_factors(c) == FiniteAbelianGroup::from_cyclic_factors(d));
  CHECK(FiniteAbelianGroup::from_cyclic_factors(e) == FiniteAbelianGroup::cyclic(5));
  CHECK(FiniteAbelianGroup::from_cyclic_factors(c).to_string() == "Z2+Z12");
  CHECK_THROWS_AS(FiniteAbelianGroup::from_invariant_factors({4, 2}), InvalidInput);
  CHECK_THROWS_AS(FiniteAbelianGroup::from_invariant_factors({1, 2}), InvalidInput);
}

TEST_CASE("element order spot values") {
  const auto z6 = FiniteAbelianGroup::cyclic(6);
  CHECK(element_order(z6, {{0}}) == 1);
  CHECK(element_order(z6, {{3}}) == 2);
  const auto z2z4 = FiniteAbelianGroup::from_invariant_factors({2, 4});
  CHECK(element_order(z2z4, {{1, 2}}) == 2);
  CHECK_THROWS_AS(element_order(z2z4, {{1}}), InvalidInput);
}

TEST_CASE("element order agrees with repeated addition up to order 64") {
  for (Int n = 1; n <= 64; ++n)
    for (const auto& g : abelian_groups_of_order(n))
      for (const auto& x : all_elements(g)) {
        Int t = 1;
        auto acc = x;
        while (acc != identity_element(g)) acc = add(g, acc, x), ++t;
        CHECK(element_order(g, x) == t);
      }
}

TEST_CASE("generated subgroup closure") {
  const auto g = FiniteAbelianGroup::from_invariant_factors({2, 4});
  const std::vector<GroupElement> gens{{{0, 2}}};
  CHECK(generated_subgroup(g, gens).size() == 2);
  const std::vector<GroupElement> all{{{1, 0}}, {{0, 1}}};
  CHECK(generated_subgroup(g, all).size() == 8);
  CHECK(all_elements(g).size() == 8);
}
