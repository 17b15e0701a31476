#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

namespace surfsym {

using Int = std::int64_t;
using Rational = boost::rational<Int>;

/// Least common multiple of a nonempty list of positive integers.
Int lcm_list(std::span<const Int> ms);

/// All positive divisors of n in ascending order.
std::vector<Int> divisors(Int n);

/// Prime factorisation by trial division, primes ascending.
std::vector<std::pair<Int, int>> factorize(Int n);

/// Partitions of n into positive parts, each listed in non-increasing order.
std::vector<std::vector<int>> integer_partitions(int n);

/// Finite abelian group in invariant-factor form d_1 | d_2 | ... | d_r, d_i >= 2.
///
/// The trivial group has an empty factor list. Values are canonical, so
/// equality of groups is equality of factor lists.
class FiniteAbelianGroup {
 public:
  FiniteAbelianGroup() = default;

  /// Validates the divisibility chain; throws InvalidInput otherwise.
  static FiniteAbelianGroup from_invariant_factors(std::vector<Int> factors);

  /// Accepts any list of cyclic orders (>= 1) and regroups by prime powers.
  static FiniteAbelianGroup from_cyclic_factors(std::span<const Int> orders);

  static FiniteAbelianGroup cyclic(Int n);

  const std::vector<Int>& invariant_factors() const { return factors_; }
  std::size_t rank() const { return factors_.size(); }
  Int order() const;
  Int exponent() const { return factors_.empty() ? 1 : factors_.back(); }
  bool is_cyclic() const { return factors_.size() <= 1; }

  std::string to_string() const;

  friend bool operator==(const FiniteAbelianGroup&, const FiniteAbelianGroup&) = default;
  friend auto operator<=>(const FiniteAbelianGroup&, const FiniteAbelianGroup&) = default;

 private:
  explicit FiniteAbelianGroup(std::vector<Int> factors) : factors_(std::move(factors)) {}
  std::vector<Int> factors_;
};

/// An element of a FiniteAbelianGroup as residues against each invariant factor.
struct GroupElement {
  std::vector<Int> coords;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

GroupElement identity_element(const FiniteAbelianGroup& group);
bool is_valid_element(const FiniteAbelianGroup& group, const GroupElement& x);

GroupElement add(const FiniteAbelianGroup& group, const GroupElement& x, const GroupElement& y);
GroupElement negate(const FiniteAbelianGroup& group, const GroupElement& x);
GroupElement scale(const FiniteAbelianGroup& group, const GroupElement& x, Int k);

/// Least t >= 1 with t*x = 0.
Int element_order(const FiniteAbelianGroup& group, const GroupElement& x);

/// Elements in mixed-radix order (last coordinate fastest).
std::vector<GroupElement> all_elements(const FiniteAbelianGroup& group);

/// Subgroup generated by gens, computed by breadth-first closure under addition.
std::vector<GroupElement> generated_subgroup(const FiniteAbelianGroup& group,
                                             std::span<const GroupElement> gens);

/// One representative per isomorphism class of abelian groups of order n.
std::vector<FiniteAbelianGroup> abelian_groups_of_order(Int n);

std::string to_string(const Rational& r);

}  // namespace surfsym
