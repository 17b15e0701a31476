#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "surfsym/numtheory.hpp"

namespace surfsym {

/// Orientable 2-orbifold signature: quotient genus and cone indices (sorted ascending).
struct OrbSignature {
  Int quotient_genus = 0;
  std::vector<Int> cone_indices;

  /// Sorts the indices; throws InvalidInput if genus < 0 or an index < 2.
  static OrbSignature make(Int quotient_genus, std::vector<Int> cone_indices);

  std::string to_string() const;

  friend bool operator==(const OrbSignature&, const OrbSignature&) = default;
  friend auto operator<=>(const OrbSignature&, const OrbSignature&) = default;
};

/// Free product of cyclic groups, a free group of rank free_rank, and
/// optionally one factor Z_m (+) Z.
struct FreeProduct {
  std::vector<Int> cyclic_orders;
  Int free_rank = 0;
  std::optional<Int> mixed_factor;

  friend bool operator==(const FreeProduct&, const FreeProduct&) = default;
};

/// Orbifold fundamental group of an orientable closed 2-orbifold:
/// <a_i, b_i, x_j | prod [a_i, b_i] prod x_j = 1, x_j^{n_j} = 1>.
struct OrbifoldGroup {
  OrbSignature signature;

  friend bool operator==(const OrbifoldGroup&, const OrbifoldGroup&) = default;
};

using SourcePresentation = std::variant<FreeProduct, OrbifoldGroup>;

/// Validates orders >= 2 and ranks >= 0; throws InvalidInput.
void validate(const SourcePresentation& src);

/// Orders of the torsion generators, in generator order.
std::vector<Int> torsion_orders(const SourcePresentation& src);

/// Number of generators that carry no torsion relation (free or handle generators).
Int free_generator_count(const SourcePresentation& src);

std::string to_string(const SourcePresentation& src);

}  // namespace surfsym
