#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "surfsym/numtheory.hpp"

namespace surfsym {

/// Orientation types of an extendable action: (Sigma, S3) preserved (+) or not (-).
enum class ExtType { PP, PM, MP, MM, Mix };

inline constexpr ExtType kAllExtTypes[] = {ExtType::PP, ExtType::PM, ExtType::MP, ExtType::MM,
                                           ExtType::Mix};

std::string_view to_string(ExtType t);

enum class Kind { Cyclic, Abelian };

enum class QuantityTag {
  C,
  A,
  CH,
  AH,
  CE,
  AE,
  CminusSurface,
  CyclicSurfaceFull,
  CHminus,
  AHminus,
  AminusSurface,
  CyclicHandlebodyFull,
  AbelianHandlebodyFull,
  CEtype,
  AEtype,
  CEmax,
  AEmax,
};

struct Quantity {
  QuantityTag tag = QuantityTag::C;
  std::optional<ExtType> type;  // set exactly for CEtype and AEtype

  static Quantity of(QuantityTag tag);
  static Quantity ce(ExtType t) { return {QuantityTag::CEtype, t}; }
  static Quantity ae(ExtType t) { return {QuantityTag::AEtype, t}; }

  /// Display name, e.g. "CH-minus" or "CE(-,+)".
  std::string name() const;

  /// Inverse of name(); case-insensitive. nullopt on unknown names.
  static std::optional<Quantity> parse(std::string_view text);

  friend bool operator==(const Quantity&, const Quantity&) = default;
};

/// Every quantity in emission order.
std::vector<Quantity> all_quantities();

struct EvenPair {
  Int m, n;
  friend bool operator==(const EvenPair&, const EvenPair&) = default;
  friend auto operator<=>(const EvenPair&, const EvenPair&) = default;
};

struct OddPair {
  Int k, n;
  friend bool operator==(const OddPair&, const OddPair&) = default;
  friend auto operator<=>(const OddPair&, const OddPair&) = default;
};

using ChMinusWitness = std::variant<EvenPair, OddPair>;

std::string to_string(const ChMinusWitness& w);

/// Genus certified by the witness: [m,n] - (m+n)/(m,n) + 1 or kn - k + 1.
Int witness_genus(const ChMinusWitness& w);

/// Handlebody order certified by the witness: 2[m,n] or 2kn.
Int witness_value(const ChMinusWitness& w);

/// Both entries odd and positive.
bool witness_well_formed(const ChMinusWitness& w);

struct ChMinusResult {
  Int value = 0;
  std::vector<ChMinusWitness> witnesses;  // every optimal pair, ascending
};

struct MaxOrderResult {
  Quantity quantity;
  Int genus = 0;
  std::optional<Int> value;  // nullopt: no action of this type exists
  std::vector<ChMinusWitness> witnesses;
};

/// Table 1 quantities: C, A, CH, AH, CE, AE, CminusSurface, CyclicSurfaceFull.
/// Throws InvalidInput for any other tag.
Int classical_order(QuantityTag q, Int g);

/// Maximum order of a type-t extendable action; nullopt when none exists.
std::optional<Int> extendable_type_max(Kind kind, ExtType t, Int g);

/// Maximum order of an extendable action of any type.
Int extendable_max(Kind kind, Int g);

/// Maximum cyclic order on the handlebody including orientation reversing
/// maps, via the (d, m', n') parametrisation (even g) or divisors of g-1 (odd g).
ChMinusResult ch_minus(Int g);

/// Same quantity by direct scan: odd m, n <= 2g+2 (even g) or odd k, n with
/// k(n-1) = g-1 found by trial over all odd k (odd g).
ChMinusResult ch_minus_direct_scan(Int g);

/// Direct-scan results for every genus 2..g_max in one sweep; entry i is genus i+2.
std::vector<ChMinusResult> ch_minus_direct_scan_range(Int g_max);

/// Abelian analogue: 4g+4, or 32 at g = 5.
Int ah_minus(Int g);

/// Abelian surface maximum allowing orientation reversal: 4g+4, or 32 at g = 5.
Int a_minus_surface(Int g);

/// Maximum order on the handlebody over all actions.
Int full_handlebody_max(Kind kind, Int g);

/// Evaluates any quantity, attaching witnesses for the handlebody cyclic rows.
MaxOrderResult evaluate(const Quantity& q, Int g);

/// Named identities between quantities, each evaluated from independent formulas.
std::vector<std::pair<std::string, bool>> consistency_check(Int g);

}  // namespace surfsym
