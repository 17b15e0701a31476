#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "surfsym/errors.hpp"
#include "surfsym/orbifolds.hpp"

using namespace surfsym;

namespace {

std::vector<OrbClass> small_classes(Int top) {
  std::vector<OrbClass> out;
  for (Int l = 2; l <= top; ++l)
    for (Int m = l; m <= top; ++m)
      for (Int n = m; n <= top; ++n)
        if (Rational(1, l) + Rational(1, m) + Rational(1, n) > 1) out.push_back(make_class_a(l, m, n));
  for (Int m = 2; m <= top; ++m)
    for (Int n = m; n <= top; ++n)
      if (Rational(1, m) + Rational(1, n) < 1) out.push_back(make_class_b(m, n));
  for (Int n = 2; n <= top; ++n) out.push_back(make_class_c(n));
  for (Int m = 2; m <= top; ++m)
    for (Int n = 2; n <= top; ++n) out.push_back(make_class_d(m, n));
  return out;
}

// Pads a graph with moves that classification must undo: a trivial leaf hung
// on every vertex and every non-loop edge subdivided by a full-order copy of
// one endpoint joined along the original edge group.
GraphOfGroups padded(const GraphOfGroups& g) {
  std::vector<GraphVertex> vs = g.vertices();
  std::vector<GraphEdge> es;
  int next = 1000;
  for (const auto& v : g.vertices()) {
    vs.push_back({next, 1});
    es.push_back({next++, v.id, 1});
  }
  for (const auto& e : g.edges()) {
    if (e.from == e.to) {
      es.push_back(e);
      continue;
    }
    const Int o = g.vertex_order(e.from);
    vs.push_back({next, o});
    es.push_back({e.from, next, o});
    es.push_back({next++, e.to, e.order});
  }
  return GraphOfGroups(vs, es);
}

}  // namespace

TEST_CASE("graph validation") {
  CHECK_THROWS_AS(GraphOfGroups({{1, 2}, {2, 3}}, {}), InvalidInput);
  CHECK_THROWS_AS(GraphOfGroups({{1, 2}, {1, 3}}, {}), InvalidInput);
  CHECK_THROWS_AS(GraphOfGroups({{1, 2}}, {{1, 2, 1}}), InvalidInput);
  CHECK_THROWS_AS(GraphOfGroups({{1, 4}, {2, 6}}, {{1, 2, 4}}), InvalidInput);
  CHECK_NOTHROW(GraphOfGroups({{1, 4}, {2, 6}}, {{1, 2, 2}}));
}

TEST_CASE("graph Euler characteristic") {
  CHECK(euler_char_graph(GraphOfGroups({{1, 1}}, {})) == Rational(1));
  CHECK(euler_char_graph(GraphOfGroups({{1, 3}, {2, 9}}, {{1, 2, 1}})) == Rational(-5, 9));
  CHECK(euler_char_graph(GraphOfGroups({{1, 3}}, {{1, 1, 1}})) == Rational(-2, 3));
}

TEST_CASE("classification spot values") {
  CHECK(classify(GraphOfGroups({{1, 3}}, {{1, 1, 1}})) == OrbClass{ClassC{3}});
  CHECK(classify(GraphOfGroups({{1, 2}, {2, 3}, {3, 3}}, {{1, 2, 1}, {2, 3, 1}})) == OrbClass{ClassA{2, 3, 3}});
  CHECK(classify(GraphOfGroups({{1, 5}, {2, 3}}, {{1, 2, 1}})) == OrbClass{ClassB{3, 5}});
  CHECK(classify(GraphOfGroups({{1, 5}, {2, 3}}, {{1, 2, 1}, {2, 2, 3}})) == OrbClass{ClassD{3, 5}});
  CHECK(!classify(GraphOfGroups({{1, 2}, {2, 3}, {3, 7}}, {{1, 2, 1}, {2, 3, 1}})).has_value());
  CHECK(!classify(GraphOfGroups({{1, 2}, {2, 2}}, {{1, 2, 1}})).has_value());
  CHECK(!classify(GraphOfGroups({{1, 1}}, {})).has_value());
}

TEST_CASE("class Euler characteristics") {
  CHECK(class_euler_char(make_class_a(2, 3, 3)) == Rational(-5, 6));
  CHECK(class_euler_char(make_class_b(3, 9)) == Rational(-5, 9));
  CHECK(class_euler_char(make_class_d(5, 3)) == Rational(-2, 3));
  CHECK(class_euler_char(make_class_c(3)) == Rational(-2, 3));
}

TEST_CASE("class constructors enforce their inequalities") {
  CHECK_THROWS_AS(make_class_a(2, 3, 6), InvalidInput);
  CHECK_THROWS_AS(make_class_b(2, 2), InvalidInput);
  CHECK_THROWS_AS(make_class_c(1), InvalidInput);
  CHECK_THROWS_AS(make_class_d(1, 3), InvalidInput);
  CHECK(make_class_a(3, 2, 3) == OrbClass{ClassA{2, 3, 3}});
  CHECK(make_class_b(9, 3) == OrbClass{ClassB{3, 9}});
}

TEST_CASE("class fundamental groups") {
  CHECK(class_fundamental_group(make_class_c(3)) == SourcePresentation{FreeProduct{{3}, 1, std::nullopt}});
  CHECK(class_fundamental_group(make_class_b(3, 9)) == SourcePresentation{FreeProduct{{3, 9}, 0, std::nullopt}});
  CHECK(class_fundamental_group(make_class_d(3, 5)) == SourcePresentation{FreeProduct{{5}, 0, 3}});
  CHECK(class_fundamental_group(make_class_a(2, 3, 3)) ==
        SourcePresentation{FreeProduct{{2, 3, 3}, 0, std::nullopt}});
}

TEST_CASE("representatives: Euler characteristic and classification round-trip") {
  for (const auto& c : small_classes(12)) {
    INFO(to_string(c));
    const auto g = representative_graph(c);
    CHECK(euler_char_graph(g) == class_euler_char(c));
    CHECK(classify(g) == c);
    const auto p = padded(g);
    CHECK(euler_char_graph(p) == class_euler_char(c));
    CHECK(classify(p) == c);
  }
}

TEST_CASE("orbifold Euler characteristic") {
  CHECK(orb_euler_char_2d(OrbSignature::make(2, {})) == Rational(-2));
  CHECK(orb_euler_char_2d(OrbSignature::make(0, {2, 2, 3, 3})) == Rational(-1, 3));
  for (Int n = 2; n <= 20; ++n)
    CHECK(orb_euler_char_2d(OrbSignature::make(1, {n, n})) == Rational(-2) * (1 - Rational(1, n)));
  CHECK_THROWS_AS(OrbSignature::make(-1, {}), InvalidInput);
  CHECK_THROWS_AS(OrbSignature::make(0, {1}), InvalidInput);
}

TEST_CASE("covered genus") {
  CHECK(rh_covered_genus(6, OrbSignature::make(0, {2, 2, 3, 3})) == 2);
  for (Int n = 2; n <= 30; ++n) CHECK(rh_covered_genus(n, OrbSignature::make(0, {n, n})) == 0);
  for (Int g = 2; g <= 40; g += 2)
    CHECK(rh_covered_genus(g + 1, OrbSignature::make(0, {g + 1, g + 1, g + 1, g + 1})) == g);
  CHECK(!rh_covered_genus(2, OrbSignature::make(0, {2, 2, 2})).has_value());
  CHECK_THROWS_AS(rh_covered_genus(5, OrbSignature::make(0, {2, 2})), InvalidInput);
  CHECK_THROWS_AS(rh_covered_genus(0, OrbSignature::make(0, {})), InvalidInput);
}

TEST_CASE("covered genus is monotone in the order") {
  const std::vector<OrbSignature> sigs{OrbSignature::make(0, {2, 3, 7}), OrbSignature::make(0, {3, 3, 4}),
                                       OrbSignature::make(1, {2}), OrbSignature::make(2, {})};
  for (const auto& s : sigs) {
    REQUIRE(orb_euler_char_2d(s) < 0);
    Int last = -1;
    Int lcm = 1;
    for (Int n : s.cone_indices) lcm = std::lcm(lcm, n);
    for (Int order = lcm; order <= 60 * lcm; order += lcm)
      if (auto g = rh_covered_genus(order, s)) {
        CHECK(*g >= last);
        last = *g;
      }
  }
}

TEST_CASE("equal-cone solutions") {
  using S = EqualConeSolution;
  CHECK(enumerate_equal_cone_solutions(4, 3) == std::vector<S>{{2, 0, 3}, {1, 2, 4}, {0, 4, 5}, {0, 6, 3}});
  CHECK(enumerate_equal_cone_solutions(6, 4) == std::vector<S>{{2, 0, 5}, {1, 2, 6}, {0, 4, 7}, {0, 6, 4}});
  CHECK(enumerate_equal_cone_solutions(4, 6).empty());
  CHECK_THROWS_AS(enumerate_equal_cone_solutions(5, 3), InvalidInput);
  CHECK_THROWS_AS(enumerate_equal_cone_solutions(0, 3), InvalidInput);
  CHECK_THROWS_AS(enumerate_equal_cone_solutions(4, 1), InvalidInput);
}

TEST_CASE("equal-cone solutions satisfy their equation and match a brute scan") {
  for (Int g = 2; g <= 24; g += 2)
    for (Int min_order = 2; min_order <= g + 3; ++min_order) {
      std::vector<EqualConeSolution> brute;
      for (Int gq = 0; gq <= g; ++gq)
        for (Int k = 0; k <= 2 * g + 4; k += 2)
          for (Int n = min_order; n <= 2 * g + 4; ++n)
            if (Rational(2 - 2 * g) == Rational(n) * (2 - 2 * gq - k * (1 - Rational(1, n))))
              brute.push_back({gq, k, n});
      std::sort(brute.begin(), brute.end(), [](const auto& a, const auto& b) {
        return a.quotient_genus != b.quotient_genus ? a.quotient_genus > b.quotient_genus : a.cone_count < b.cone_count;
      });
      REQUIRE(enumerate_equal_cone_solutions(g, min_order) == brute);
    }
}

TEST_CASE("equal-cone solutions at the order bound g/2+1") {
  for (Int g = 4; g <= 200; g += 2) {
    const std::vector<EqualConeSolution> want{{2, 0, g - 1}, {1, 2, g}, {0, 4, g + 1}, {0, 6, g / 2 + 1}};
    CHECK(enumerate_equal_cone_solutions(g, g / 2 + 1) == want);
  }
  // At g = 2 the bound is 2, which excludes the order-1 tuple (2, 0, 1).
  CHECK(enumerate_equal_cone_solutions(2, 2) == std::vector<EqualConeSolution>{{1, 2, 2}, {0, 4, 3}, {0, 6, 2}});
}

TEST_CASE("signature enumeration") {
  const auto s10 = enumerate_signatures(2, 10, 0);
  CHECK(std::find(s10.begin(), s10.end(), OrbSignature::make(0, {2, 5, 10})) != s10.end());
  const auto s12 = enumerate_signatures(2, 12, 0);
  CHECK(std::find(s12.begin(), s12.end(), OrbSignature::make(0, {2, 4, 12})) != s12.end());
  CHECK(enumerate_signatures(3, 100, 3).empty());
  CHECK_THROWS_AS(enumerate_signatures(1, 4, 0), InvalidGenus);
}

TEST_CASE("every enumerated signature solves its equation exactly") {
  for (Int g = 2; g <= 6; ++g)
    for (Int order = 2; order <= 4 * g + 12; ++order) {
      const auto sigs = enumerate_signatures(g, order, g);
      CHECK(std::is_sorted(sigs.begin(), sigs.end()));
      for (const auto& s : sigs) {
        CHECK(Rational(2 - 2 * g) == orb_euler_char_2d(s) * order);
        CHECK(static_cast<Int>(s.cone_indices.size()) <= (4 * g - 4) / order + 4);
        for (Int n : s.cone_indices) CHECK(order % n == 0);
      }
    }
}
