#pragma once

#include <optional>
#include <string>
#include <vector>

#include "surfsym/numtheory.hpp"

namespace surfsym {

/// Genus limits for the surface oracles.
inline constexpr Int kCyclicSurfaceOracleMax = 12;
inline constexpr Int kAbelianSurfaceOracleMax = 8;
inline constexpr Int kChMinusOracleMax = 10000;

/// Default search cap 4g + 12.
Int default_order_cap(Int g);

/// Largest n <= order_cap such that Z_n acts on the genus-g surface preserving
/// orientation: some signature from enumerate_signatures(g, n, g) admits a
/// surjection from its orbifold group that is injective on cone stabilisers.
/// Orders are tried from the cap downward.
Int oracle_max_cyclic_op_surface(Int g, Int order_cap);

/// Abelian analogue over every abelian group of each order.
Int oracle_max_abelian_op_surface(Int g, Int order_cap);

/// Maximum cyclic handlebody order including reversals, re-derived by sweeping
/// classes B, C, D and the two class A shapes through realize_handlebody.
Int oracle_ch_minus(Int g);

/// Same sweep run once for every genus in [g_lo, g_hi]; entry i is genus g_lo + i.
std::vector<Int> oracle_ch_minus_range(Int g_lo, Int g_hi);

struct OracleCell {
  std::string row;  // "c-surface", "a-surface" or "ch-minus"
  Int genus = 0;
  Int expected = 0;
  Int observed = 0;
  bool pass = false;
};

/// Runs every oracle whose genus limit covers each g in [g_lo, g_hi] and
/// compares against the closed forms. The surface rows stop at genus 6 and 5
/// unless slow is set.
std::vector<OracleCell> oracle_tables(Int g_lo, Int g_hi, bool slow = false);

}  // namespace surfsym
