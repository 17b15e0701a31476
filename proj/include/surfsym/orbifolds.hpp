#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "surfsym/numtheory.hpp"
#include "surfsym/presentations.hpp"

namespace surfsym {

// ---------------------------------------------------------------------------
// Finite graphs of finite (cyclic) groups.

struct GraphVertex {
  int id = 0;
  Int order = 1;
};

struct GraphEdge {
  int from = 0;
  int to = 0;
  Int order = 1;
};

/// Labelled finite graph with group orders on vertices and edges. Loops and
/// multi-edges are allowed. Construction rejects disconnected graphs,
/// duplicate vertex ids, dangling edges, and edge orders not dividing both
/// endpoint orders.
class GraphOfGroups {
 public:
  GraphOfGroups(std::vector<GraphVertex> vertices, std::vector<GraphEdge> edges);

  const std::vector<GraphVertex>& vertices() const { return vertices_; }
  const std::vector<GraphEdge>& edges() const { return edges_; }
  Int vertex_order(int id) const;

 private:
  std::vector<GraphVertex> vertices_;
  std::vector<GraphEdge> edges_;
};

/// Sum of 1/|G_v| over vertices minus sum of 1/|G_e| over edges.
Rational euler_char_graph(const GraphOfGroups& graph);

// ---------------------------------------------------------------------------
// The four graph shapes of handlebody orbifolds with cyclic group of order > g-1.

/// Path Z_l - Z_m - Z_n with trivial edges, 1/l + 1/m + 1/n > 1. Stored with l <= m <= n.
struct ClassA {
  Int l, m, n;
  friend bool operator==(const ClassA&, const ClassA&) = default;
};
/// Edge Z_m - Z_n with trivial edge group, 0 < 1/m + 1/n < 1. Stored with m <= n.
struct ClassB {
  Int m, n;
  friend bool operator==(const ClassB&, const ClassB&) = default;
};
/// Vertex Z_n with a trivial loop.
struct ClassC {
  Int n;
  friend bool operator==(const ClassC&, const ClassC&) = default;
};
/// Vertex Z_n joined by a trivial edge to vertex Z_m, which carries a Z_m loop.
struct ClassD {
  Int m, n;
  friend bool operator==(const ClassD&, const ClassD&) = default;
};

using OrbClass = std::variant<ClassA, ClassB, ClassC, ClassD>;

/// Checks the parameter inequalities and canonicalises A and B (sorted).
OrbClass make_class_a(Int l, Int m, Int n);
OrbClass make_class_b(Int m, Int n);
OrbClass make_class_c(Int n);
OrbClass make_class_d(Int m, Int n);

std::string to_string(const OrbClass& c);

/// Reduces the graph by the merge moves (absorb trivial vertices along
/// trivial edges, contract non-loop edges whose group equals both endpoint
/// groups) and matches the result against classes A-D. nullopt means Other.
std::optional<OrbClass> classify(const GraphOfGroups& graph);

/// A small graph of groups realising the class, used for round-trip checks.
GraphOfGroups representative_graph(const OrbClass& c);

Rational class_euler_char(const OrbClass& c);

/// Free-product presentation of the orbifold fundamental group of the class.
SourcePresentation class_fundamental_group(const OrbClass& c);

// ---------------------------------------------------------------------------
// Riemann-Hurwitz arithmetic for orientable 2-orbifolds.

/// 2 - 2*genus - sum (1 - 1/n_i).
Rational orb_euler_char_2d(const OrbSignature& s);

/// Genus g with 2 - 2g = order * chi(s), if that is a non-negative integer.
/// Throws InvalidInput when order < 1 or a cone index does not divide order.
std::optional<Int> rh_covered_genus(Int order, const OrbSignature& s);

struct EqualConeSolution {
  Int quotient_genus;
  Int cone_count;
  Int order;
  friend bool operator==(const EqualConeSolution&, const EqualConeSolution&) = default;
  friend auto operator<=>(const EqualConeSolution&, const EqualConeSolution&) = default;
};

/// All (g', k, n) with g' >= 0, k >= 0 even, n >= min_order and
/// 2 - 2g = n (2 - 2g' - k (1 - 1/n)); sorted by g' descending then k ascending.
/// Requires g even and > 1, min_order >= 2.
std::vector<EqualConeSolution> enumerate_equal_cone_solutions(Int g, Int min_order);

/// Every orientable signature whose orbifold is covered by a genus-g surface
/// with a group of the given order: cone indices divide order, at most
/// (4g-4)/order + 4 cones, quotient genus <= min(g, quotient_genus_max).
/// Sorted by quotient genus, then cone indices lexicographically.
std::vector<OrbSignature> enumerate_signatures(Int g, Int order, Int quotient_genus_max);

}  // namespace surfsym
