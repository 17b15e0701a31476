#pragma once

#include <optional>
#include <span>
#include <vector>

#include "surfsym/numtheory.hpp"
#include "surfsym/orbifolds.hpp"
#include "surfsym/presentations.hpp"

namespace surfsym {

/// Images of the generators: torsion generators first (in presentation
/// order), then free or handle generators.
struct HomWitness {
  std::vector<GroupElement> images;
  friend bool operator==(const HomWitness&, const HomWitness&) = default;
};

struct SearchLimits {
  Int max_group_order = 256;
  std::size_t max_torsion_generators = 12;
};

/// Closed-form existence of a finitely injective surjection from a free
/// product onto Z_n. Throws InvalidInput for an OrbifoldGroup source or n < 1.
bool fis_to_cyclic_exists(const SourcePresentation& src, Int n);

/// Exhaustive search for a surjection onto `target` that is injective on each
/// torsion generator's cyclic subgroup; for orbifold groups the torsion images
/// must also sum to zero. Throws SearchTooLarge beyond the limits.
std::optional<HomWitness> fis_exists_bruteforce(const SourcePresentation& src,
                                                const FiniteAbelianGroup& target,
                                                const SearchLimits& limits = {});

/// Rechecks a witness: arity, exact torsion orders, the abelianised long
/// relation, and surjectivity by subgroup closure.
bool validate_witness(const SourcePresentation& src, const FiniteAbelianGroup& target,
                      const HomWitness& witness);

/// Genus 1 - chi(c)|A| of the handlebody covering the class-c orbifold with
/// group A, when a suitable surjection exists and the genus is an integer > 1.
std::optional<Int> realize_handlebody(const OrbClass& c, const FiniteAbelianGroup& target);

/// Whether the images split into pairs {v, -v}. Orders must exceed 2 and match
/// the image count; throws InvalidInput otherwise.
bool pairing_criterion(const FiniteAbelianGroup& group, std::span<const GroupElement> images,
                       std::span<const Int> orders);

}  // namespace surfsym
