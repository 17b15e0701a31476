#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "surfsym/numtheory.hpp"
#include "surfsym/quantities.hpp"

namespace surfsym {

/// An angle as an exact fraction of a full turn, reduced into [0, 1).
class RationalTurn {
 public:
  RationalTurn() = default;
  RationalTurn(Rational r);  // NOLINT(google-explicit-constructor)
  RationalTurn(Int p, Int q) : RationalTurn(Rational(p, q)) {}

  const Rational& value() const { return value_; }

  friend RationalTurn operator+(const RationalTurn& a, const RationalTurn& b) { return a.value_ + b.value_; }
  friend RationalTurn operator-(const RationalTurn& a, const RationalTurn& b) { return a.value_ - b.value_; }
  RationalTurn operator-() const { return -value_; }
  friend bool operator==(const RationalTurn& a, const RationalTurn& b) { return a.value_ == b.value_; }
  friend bool operator<(const RationalTurn& a, const RationalTurn& b) { return a.value_ < b.value_; }

 private:
  Rational value_{0};
};

/// Point of the unit sphere in C^2: |z1|^2 and the arguments of z1, z2.
/// The argument of a zero coordinate is stored as 0.
struct S3Point {
  Rational r1_sq{0};
  RationalTurn theta1;
  RationalTurn theta2;

  static S3Point make(Rational r1_sq, RationalTurn theta1, RationalTurn theta2);

  friend bool operator==(const S3Point&, const S3Point&) = default;
  friend bool operator<(const S3Point& a, const S3Point& b);
};

S3Point antipode(const S3Point& p);

/// z1 -> e^{2 pi i u} (z1 or conj z1), z2 -> e^{2 pi i v} (z2 or conj z2).
struct S3Isometry {
  RationalTurn u;
  bool conj1 = false;
  RationalTurn v;
  bool conj2 = false;

  friend bool operator==(const S3Isometry&, const S3Isometry&) = default;
  friend bool operator<(const S3Isometry& a, const S3Isometry& b);
};

S3Isometry identity_isometry();
S3Isometry compose(const S3Isometry& a, const S3Isometry& b);  // a after b
S3Isometry power(const S3Isometry& a, Int k);
S3Point apply(const S3Isometry& a, const S3Point& p);
Int iso_order(const S3Isometry& a);
int orientation_sign(const S3Isometry& a);

namespace iso {
S3Isometry tau(Int g);           // (i z1, e^{pi i/(g+1)} z2)
S3Isometry rho();                // (-z1, z2)
S3Isometry sigma();              // (conj z1, z2)
S3Isometry phi(Int g);           // (e^{pi i/(g-1)} z1, i e^{pi i/(2g-2)} z2)
S3Isometry rho_sigma();          // (-conj z1, z2)
}  // namespace iso

struct GroupClosure {
  std::vector<S3Isometry> elements;  // sorted, identity included
  bool abelian = false;              // all generator pairs commute
};

/// Closure of the generators under composition; throws GroupTooLarge past cap.
GroupClosure generate_group(const std::vector<S3Isometry>& gens, std::size_t cap = 10000);

/// Circle on the torus |z1|^2 = r1_sq given by theta1 = slope * theta2 + phase.
struct TorusCircle {
  Rational r1_sq{1, 2};
  Int slope = 0;
  RationalTurn phase;
  friend bool operator==(const TorusCircle&, const TorusCircle&) = default;
  friend bool operator<(const TorusCircle& a, const TorusCircle& b);
};

bool on_circle(const TorusCircle& c, const S3Point& p);
TorusCircle image_circle(const S3Isometry& a, const TorusCircle& c);

/// Shortest geodesic between two non-antipodal vertices.
struct Chord {
  int a, b;
};
/// Arc of circles[circle] from vertex `from` to the next vertex `to` in
/// increasing theta2.
struct TorusArc {
  int circle, from, to;
};
using GeodesicEdge = std::variant<Chord, TorusArc>;

struct GeodesicGraph {
  std::vector<S3Point> vertices;
  std::vector<TorusCircle> circles;
  std::vector<GeodesicEdge> edges;
};

/// Checks non-antipodal chords, arc adjacency, and duplicate-free edges;
/// throws InvalidInput.
void validate(const GeodesicGraph& graph);

/// E - V + 1; throws InvalidInput when disconnected.
Int graph_genus(const GeodesicGraph& graph);

enum class GraphImage { PreservesEach, Swaps, Neither };

/// Image of the pair under a. With no dual, Swaps is impossible.
GraphImage graph_image(const S3Isometry& a, const GeodesicGraph& graph,
                       const std::optional<GeodesicGraph>& dual);

struct NamedIsometry {
  std::string name;
  S3Isometry map;
};

struct Construction {
  GeodesicGraph graph;
  std::optional<GeodesicGraph> dual;
  std::vector<NamedIsometry> gens;
};

/// Cage pair for g > 1 with generators tau_g, rho, sigma.
Construction build_cage(Int g);
/// Odd g > 1: the dual cage graph of genus g-1 plus a_0 and chords a0a1, a0a3,
/// with generator tau_{g-1}^2 rho sigma.
Construction build_cage_odd(Int g);
/// Odd g > 1 wheel pair with generator phi_g.
Construction build_wheel(Int g);
/// Even g > 1 fork pair with generators tau_{g+1}^2 and rho sigma.
Construction build_fork(Int g);

/// Orientation type of the group generated by gens acting on the surface
/// determined by the graph pair. Throws NotInvariant if a generator moves the pair.
ExtType classify_action(const std::vector<S3Isometry>& gens, const GeodesicGraph& graph,
                        const std::optional<GeodesicGraph>& dual);

/// Flags of one group element: S3 reversed, surface reversed, sides swapped.
struct ElementFlags {
  bool s3_reversed, surface_reversed, swaps;
};
std::vector<ElementFlags> element_flags(const std::vector<S3Isometry>& gens, const GeodesicGraph& graph,
                                        const std::optional<GeodesicGraph>& dual);

// ---------------------------------------------------------------------------
// Affine maps of the 3-torus E^3 / <2e1, 2e2, e3>.

struct TorusAffineMap {
  std::array<int, 3> signs{1, 1, 1};
  std::array<Int, 3> translation{0, 0, 0};  // reduced mod (2, 2, 1)

  static TorusAffineMap make(std::array<int, 3> signs, std::array<Int, 3> translation);

  friend bool operator==(const TorusAffineMap&, const TorusAffineMap&) = default;
  friend auto operator<=>(const TorusAffineMap&, const TorusAffineMap&) = default;
};

TorusAffineMap compose(const TorusAffineMap& a, const TorusAffineMap& b);

/// Lattice point (x mod 2, y mod 2) of the z = 0 slice.
using GridVertex = std::array<Int, 2>;
/// Unit segment from its lower endpoint along axis 0 (x) or 1 (y).
struct GridEdge {
  GridVertex start;
  int axis;
  friend bool operator==(const GridEdge&, const GridEdge&) = default;
  friend auto operator<=>(const GridEdge&, const GridEdge&) = default;
};

GridVertex apply(const TorusAffineMap& a, const GridVertex& v);
GridEdge apply(const TorusAffineMap& a, const GridEdge& e);

struct SquareExample {
  std::vector<GridVertex> vertices;
  std::vector<GridEdge> edges;
  std::vector<TorusAffineMap> group;  // closure of r_x, r_y, R_z and unit translations
  bool abelian = false;
};

SquareExample build_square();
Int graph_genus(const SquareExample& square);

// ---------------------------------------------------------------------------
// Verification reports.

struct Check {
  std::string name;
  bool pass;
};

/// Example names: "cage", "wheel", "fork", "square". Throws InvalidGenus on a
/// parity mismatch or g <= 1, InvalidInput on an unknown name.
std::vector<Check> verify_example(const std::string& name, Int g);

}  // namespace surfsym
