#include "surfsym/oracle.hpp"

#include <algorithm>
#include <numeric>

#include "surfsym/errors.hpp"
#include "surfsym/grouphom.hpp"
#include "surfsym/orbifolds.hpp"
#include "surfsym/quantities.hpp"

namespace surfsym {

Int default_order_cap(Int g) { return 4 * g + 12; }

namespace {

bool some_signature_maps_onto(Int g, const FiniteAbelianGroup& target) {
  for (const auto& sig : enumerate_signatures(g, target.order(), g))
    if (fis_exists_bruteforce(OrbifoldGroup{sig}, target)) return true;
  return false;
}

}  // namespace

Int oracle_max_cyclic_op_surface(Int g, Int order_cap) {
  require_genus(g);
  if (g > kCyclicSurfaceOracleMax) throw SearchTooLarge("cyclic surface oracle limited to genus <= 12");
  if (order_cap < 4 * g + 2) throw InvalidInput("order cap must be at least 4g+2");
  for (Int n = order_cap; n >= 2; --n)
    if (some_signature_maps_onto(g, FiniteAbelianGroup::cyclic(n))) return n;
  throw Infeasible("no cyclic action found below the cap");
}

Int oracle_max_abelian_op_surface(Int g, Int order_cap) {
  require_genus(g);
  if (g > kAbelianSurfaceOracleMax) throw SearchTooLarge("abelian surface oracle limited to genus <= 8");
  if (order_cap < 4 * g + 4) throw InvalidInput("order cap must be at least 4g+4");
  for (Int n = order_cap; n >= 2; --n)
    for (const auto& group : abelian_groups_of_order(n))
      if (some_signature_maps_onto(g, group)) return n;
  throw Infeasible("no abelian action found below the cap");
}

std::vector<Int> oracle_ch_minus_range(Int g_lo, Int g_hi) {
  require_genus(g_lo);
  if (g_hi > kChMinusOracleMax) throw SearchTooLarge("handlebody oracle limited to genus <= 10000");
  if (g_hi < g_lo) return {};
  std::vector<Int> best(static_cast<std::size_t>(g_hi - g_lo + 1), 0);

  auto record = [&](const OrbClass& c, Int order) {
    const auto genus = realize_handlebody(c, FiniteAbelianGroup::cyclic(order));
    if (genus && *genus >= g_lo && *genus <= g_hi) {
      auto& slot = best[static_cast<std::size_t>(*genus - g_lo)];
      slot = std::max(slot, 2 * order);
    }
    return genus;
  };

  // Class B(m, n) with Z_[m,n], odd m <= n.
  const Int n_top = 3 * g_hi / 2 + 2;
  for (Int m = 3; m <= n_top; m += 2)
    for (Int n = m; n <= n_top; n += 2) record(make_class_b(m, n), std::lcm(m, n));

  // Classes C(n) and D(m, n) with Z_N, N an odd multiple of n (and of m for D).
  for (Int n = 3; n <= g_hi; n += 2) {
    for (Int k = 1;; k += 2) {
      const Int order = k * n;
      const auto genus = record(make_class_c(n), order);
      if (genus && *genus > g_hi) break;
      for (Int m : divisors(order))
        if (m >= 3 && m % 2 == 1) record(make_class_d(m, n), order);
    }
  }

  // Class A shapes {2,3,3} with Z_6 and {2,2,2j} with Z_2j.
  record(make_class_a(2, 3, 3), 6);
  for (Int j = 2; 2 * j <= g_hi; ++j) record(make_class_a(2, 2, 2 * j), 2 * j);

  return best;
}

Int oracle_ch_minus(Int g) {
  require_genus(g);
  const Int v = oracle_ch_minus_range(g, g).front();
  if (v == 0) throw Infeasible("handlebody oracle found no realisation");
  return v;
}

std::vector<OracleCell> oracle_tables(Int g_lo, Int g_hi, bool slow) {
  std::vector<OracleCell> out;
  if (g_hi < g_lo) return out;
  require_genus(g_lo);
  const Int c_max = slow ? kCyclicSurfaceOracleMax : 6;
  const Int a_max = slow ? kAbelianSurfaceOracleMax : 5;
  for (Int g = g_lo; g <= std::min(g_hi, c_max); ++g) {
    const Int expected = classical_order(QuantityTag::C, g);
    const Int observed = oracle_max_cyclic_op_surface(g, default_order_cap(g));
    out.push_back({"c-surface", g, expected, observed, expected == observed});
  }
  for (Int g = g_lo; g <= std::min(g_hi, a_max); ++g) {
    const Int expected = classical_order(QuantityTag::A, g);
    const Int observed = oracle_max_abelian_op_surface(g, default_order_cap(g));
    out.push_back({"a-surface", g, expected, observed, expected == observed});
  }
  const Int h_hi = std::min(g_hi, kChMinusOracleMax);
  if (h_hi >= g_lo) {
    const auto observed = oracle_ch_minus_range(g_lo, h_hi);
    for (Int g = g_lo; g <= h_hi; ++g) {
      const Int expected = ch_minus(g).value;
      const Int got = observed[static_cast<std::size_t>(g - g_lo)];
      out.push_back({"ch-minus", g, expected, got, expected == got});
    }
  }
  return out;
}

}  // namespace surfsym
