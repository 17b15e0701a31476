#include <doctest.h>

#include "oracles.hpp"
#include "surfsym/errors.hpp"
#include "surfsym/quantities.hpp"

using namespace surfsym;

namespace {

std::vector<std::pair<Int, Int>> as_pairs(const std::vector<ChMinusWitness>& ws) {
  std::vector<std::pair<Int, Int>> out;
  for (const auto& w : ws) {
    if (const auto* e = std::get_if<EvenPair>(&w))
      out.emplace_back(e->m, e->n);
    else
      out.emplace_back(std::get<OddPair>(w).k, std::get<OddPair>(w).n);
  }
  return out;
}

}  // namespace

TEST_CASE("orientation-preserving table values") {
  CHECK(classical_order(QuantityTag::C, 2) == 10);
  CHECK(classical_order(QuantityTag::AH, 5) == 16);
  CHECK(classical_order(QuantityTag::CE, 3) == 4);
  CHECK(classical_order(QuantityTag::A, 7) == 32);
  CHECK(classical_order(QuantityTag::CH, 3) == 6);
  CHECK(classical_order(QuantityTag::CH, 4) == 10);
  CHECK(classical_order(QuantityTag::AH, 6) == 14);
  CHECK(classical_order(QuantityTag::CminusSurface, 3) == 8);
  CHECK(classical_order(QuantityTag::CyclicSurfaceFull, 3) == 14);
  CHECK(classical_order(QuantityTag::CyclicSurfaceFull, 4) == 20);
  CHECK_THROWS_AS(classical_order(QuantityTag::C, 1), InvalidGenus);
  CHECK_THROWS_AS(classical_order(QuantityTag::CHminus, 4), InvalidInput);
}

TEST_CASE("extendable type maxima") {
  CHECK(extendable_type_max(Kind::Cyclic, ExtType::MP, 2) == 12);
  CHECK(extendable_type_max(Kind::Cyclic, ExtType::Mix, 4) == std::nullopt);
  CHECK(extendable_type_max(Kind::Abelian, ExtType::Mix, 4) == 12);
  CHECK(extendable_type_max(Kind::Abelian, ExtType::Mix, 5) == std::nullopt);
  CHECK(extendable_type_max(Kind::Cyclic, ExtType::MM, 3) == 6);
  CHECK(extendable_type_max(Kind::Cyclic, ExtType::PP, 3) == classical_order(QuantityTag::CE, 3));
  CHECK(extendable_type_max(Kind::Abelian, ExtType::PP, 3) == classical_order(QuantityTag::AE, 3));
  CHECK_THROWS_AS(extendable_type_max(Kind::Cyclic, ExtType::PP, 0), InvalidGenus);
}

TEST_CASE("extendable maxima") {
  CHECK(extendable_max(Kind::Cyclic, 2) == 12);
  CHECK(extendable_max(Kind::Cyclic, 3) == 8);
  CHECK(extendable_max(Kind::Abelian, 7) == 32);
}

TEST_CASE("extendable maximum is the maximum over the five types") {
  for (Int g = 2; g <= 10000; ++g)
    for (Kind kind : {Kind::Cyclic, Kind::Abelian}) {
      Int best = 0;
      for (auto t : kAllExtTypes)
        if (auto v = extendable_type_max(kind, t, g)) best = std::max(best, *v);
      REQUIRE(best == extendable_max(kind, g));
    }
}

TEST_CASE("handlebody maximum spot values") {
  auto r2 = ch_minus(2);
  CHECK(r2.value == 6);
  CHECK(as_pairs(r2.witnesses) == std::vector<std::pair<Int, Int>>{{3, 3}});
  CHECK(ch_minus(4).value == 10);
  CHECK(as_pairs(ch_minus(4).witnesses) == std::vector<std::pair<Int, Int>>{{5, 5}});
  auto r6 = ch_minus(6);
  CHECK(r6.value == 18);
  CHECK(as_pairs(r6.witnesses) == std::vector<std::pair<Int, Int>>{{3, 9}, {9, 3}});
  auto r7 = ch_minus(7);
  CHECK(r7.value == 18);
  CHECK(r7.witnesses == std::vector<ChMinusWitness>{OddPair{3, 3}});
  auto r9 = ch_minus(9);
  CHECK(r9.value == 18);
  CHECK(r9.witnesses == std::vector<ChMinusWitness>{OddPair{1, 9}});
  CHECK_THROWS_AS(ch_minus(1), InvalidGenus);
}

TEST_CASE("parametrised route matches the reference triple loop") {
  for (Int g = 2; g <= 80; ++g) {
    const auto got = ch_minus(g);
    const auto want = g % 2 == 0 ? ref::ch_minus_even_triples(g) : ref::ch_minus_odd_pairs(g);
    REQUIRE(got.value == want.value);
    REQUIRE(as_pairs(got.witnesses) == want.pairs);
  }
}

TEST_CASE("parametrised and direct-scan routes agree") {
  const auto scan = ch_minus_direct_scan_range(600);
  for (Int g = 2; g <= 600; ++g) {
    const auto a = ch_minus(g);
    const auto& b = scan[static_cast<std::size_t>(g - 2)];
    REQUIRE(a.value == b.value);
    REQUIRE(a.witnesses == b.witnesses);
  }
  CHECK(ch_minus_direct_scan(6).witnesses == ch_minus(6).witnesses);
  CHECK(ch_minus_direct_scan(9).witnesses == ch_minus(9).witnesses);
}

TEST_CASE("baseline witnesses are always feasible") {
  for (Int g = 2; g <= 2000; ++g) {
    if (g % 2 == 0) {
      const ChMinusWitness w = EvenPair{g + 1, g + 1};
      REQUIRE(witness_genus(w) == g);
      REQUIRE(witness_value(w) == 2 * g + 2);
      REQUIRE(ch_minus(g).value >= 2 * g + 2);
    } else {
      const ChMinusWitness w = OddPair{1, g};
      REQUIRE(witness_genus(w) == g);
      REQUIRE(witness_value(w) == 2 * g);
      REQUIRE(ch_minus(g).value >= 2 * g);
    }
  }
}

TEST_CASE("every reported witness satisfies its equation") {
  for (Int g = 2; g <= 3000; ++g) {
    const auto r = ch_minus(g);
    REQUIRE(!r.witnesses.empty());
    for (const auto& w : r.witnesses) {
      REQUIRE(witness_well_formed(w));
      REQUIRE(witness_genus(w) == g);
      REQUIRE(witness_value(w) == r.value);
      REQUIRE(std::holds_alternative<EvenPair>(w) == (g % 2 == 0));
    }
  }
}

TEST_CASE("abelian handlebody quantities") {
  CHECK(ah_minus(5) == 32);
  CHECK(ah_minus(2) == 12);
  for (Int g = 2; g <= 500; ++g) {
    CHECK(ah_minus(g) == 2 * classical_order(QuantityTag::AH, g));
    CHECK(a_minus_surface(g) == ah_minus(g));
  }
  CHECK(full_handlebody_max(Kind::Abelian, 5) == 32);
  CHECK(full_handlebody_max(Kind::Cyclic, 7) == 18);
  CHECK(full_handlebody_max(Kind::Cyclic, 2) == 6);
  for (Int g = 2; g <= 500; ++g)
    CHECK(full_handlebody_max(Kind::Cyclic, g) >= classical_order(QuantityTag::CH, g));
}

TEST_CASE("consistency identities") {
  for (Int g : {2, 3, 5, 6, 101}) {
    for (const auto& [name, holds] : consistency_check(g)) {
      INFO(name << " at g=" << g);
      CHECK(holds);
    }
  }
  CHECK(extendable_type_max(Kind::Cyclic, ExtType::MM, 3) == 2 * 3 + 1 - 1);
}

TEST_CASE("quantity names round-trip") {
  for (const auto& q : all_quantities()) {
    const auto back = Quantity::parse(q.name());
    REQUIRE(back.has_value());
    CHECK(*back == q);
  }
  CHECK(Quantity::parse("ch-MINUS") == Quantity::of(QuantityTag::CHminus));
  CHECK(Quantity::parse("ce(-, +)") == Quantity::ce(ExtType::MP));
  CHECK(!Quantity::parse("nonsense").has_value());
}

TEST_CASE("evaluate marks nonexistent types") {
  const auto r = evaluate(Quantity::ce(ExtType::Mix), 4);
  CHECK(!r.value.has_value());
  const auto h = evaluate(Quantity::of(QuantityTag::CHminus), 6);
  CHECK(h.value == 18);
  CHECK(h.witnesses.size() == 2);
}
