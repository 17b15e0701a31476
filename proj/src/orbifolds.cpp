#include "surfsym/orbifolds.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "surfsym/errors.hpp"

namespace surfsym {

// ---------------------------------------------------------------------------
// Presentations

OrbSignature OrbSignature::make(Int quotient_genus, std::vector<Int> cone_indices) {
  if (quotient_genus < 0) throw InvalidInput("signature: quotient genus must be >= 0");
  for (Int n : cone_indices)
    if (n < 2) throw InvalidInput("signature: cone indices must be >= 2");
  std::sort(cone_indices.begin(), cone_indices.end());
  return OrbSignature{quotient_genus, std::move(cone_indices)};
}

std::string OrbSignature::to_string() const {
  std::ostringstream os;
  os << "(" << quotient_genus << "; ";
  for (std::size_t i = 0; i < cone_indices.size(); ++i) os << (i ? "," : "") << cone_indices[i];
  os << ")";
  return os.str();
}

void validate(const SourcePresentation& src) {
  if (const auto* fp = std::get_if<FreeProduct>(&src)) {
    for (Int m : fp->cyclic_orders)
      if (m < 2) throw InvalidInput("free product: cyclic orders must be >= 2");
    if (fp->free_rank < 0) throw InvalidInput("free product: free rank must be >= 0");
    if (fp->mixed_factor && *fp->mixed_factor < 2)
      throw InvalidInput("free product: mixed factor order must be >= 2");
  } else {
    const auto& s = std::get<OrbifoldGroup>(src).signature;
    (void)OrbSignature::make(s.quotient_genus, s.cone_indices);
  }
}

std::vector<Int> torsion_orders(const SourcePresentation& src) {
  if (const auto* fp = std::get_if<FreeProduct>(&src)) {
    auto out = fp->cyclic_orders;
    if (fp->mixed_factor) out.push_back(*fp->mixed_factor);
    return out;
  }
  return std::get<OrbifoldGroup>(src).signature.cone_indices;
}

Int free_generator_count(const SourcePresentation& src) {
  if (const auto* fp = std::get_if<FreeProduct>(&src)) return fp->free_rank + (fp->mixed_factor ? 1 : 0);
  return 2 * std::get<OrbifoldGroup>(src).signature.quotient_genus;
}

std::string to_string(const SourcePresentation& src) {
  std::ostringstream os;
  if (const auto* fp = std::get_if<FreeProduct>(&src)) {
    bool first = true;
    auto sep = [&] {
      if (!first) os << " * ";
      first = false;
    };
    for (Int m : fp->cyclic_orders) sep(), os << "Z" << m;
    for (Int i = 0; i < fp->free_rank; ++i) sep(), os << "Z";
    if (fp->mixed_factor) sep(), os << "(Z" << *fp->mixed_factor << "+Z)";
    if (first) os << "1";
  } else {
    os << "orb" << std::get<OrbifoldGroup>(src).signature.to_string();
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Graphs of groups

GraphOfGroups::GraphOfGroups(std::vector<GraphVertex> vertices, std::vector<GraphEdge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  if (vertices_.empty()) throw InvalidInput("graph of groups: no vertices");
  std::map<int, std::size_t> index;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (vertices_[i].order < 1) throw InvalidInput("graph of groups: vertex orders must be >= 1");
    if (!index.emplace(vertices_[i].id, i).second) throw InvalidInput("graph of groups: duplicate vertex id");
  }
  std::vector<std::size_t> parent(vertices_.size());
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (const auto& e : edges_) {
    auto a = index.find(e.from), b = index.find(e.to);
    if (a == index.end() || b == index.end()) throw InvalidInput("graph of groups: edge references unknown vertex");
    if (e.order < 1) throw InvalidInput("graph of groups: edge orders must be >= 1");
    if (vertices_[a->second].order % e.order != 0 || vertices_[b->second].order % e.order != 0)
      throw InvalidInput("graph of groups: edge order must divide both endpoint orders");
    parent[find(a->second)] = find(b->second);
  }
  for (std::size_t i = 1; i < parent.size(); ++i)
    if (find(i) != find(0)) throw InvalidInput("graph of groups: underlying graph is disconnected");
}

Int GraphOfGroups::vertex_order(int id) const {
  for (const auto& v : vertices_)
    if (v.id == id) return v.order;
  throw InvalidInput("graph of groups: unknown vertex id");
}

Rational euler_char_graph(const GraphOfGroups& graph) {
  Rational chi = 0;
  for (const auto& v : graph.vertices()) chi += Rational(1, v.order);
  for (const auto& e : graph.edges()) chi -= Rational(1, e.order);
  return chi;
}

// ---------------------------------------------------------------------------
// Classes A-D

OrbClass make_class_a(Int l, Int m, Int n) {
  if (l < 2 || m < 2 || n < 2) throw InvalidInput("class A: orders must exceed 1");
  if (Rational(1, l) + Rational(1, m) + Rational(1, n) <= 1)
    throw InvalidInput("class A: requires 1/l + 1/m + 1/n > 1");
  std::array<Int, 3> v{l, m, n};
  std::sort(v.begin(), v.end());
  return ClassA{v[0], v[1], v[2]};
}

OrbClass make_class_b(Int m, Int n) {
  if (m < 2 || n < 2) throw InvalidInput("class B: orders must exceed 1");
  if (Rational(1, m) + Rational(1, n) >= 1) throw InvalidInput("class B: requires 1/m + 1/n < 1");
  return ClassB{std::min(m, n), std::max(m, n)};
}

OrbClass make_class_c(Int n) {
  if (n < 2) throw InvalidInput("class C: order must exceed 1");
  return ClassC{n};
}

OrbClass make_class_d(Int m, Int n) {
  if (m < 2 || n < 2) throw InvalidInput("class D: orders must exceed 1");
  return ClassD{m, n};
}

std::string to_string(const OrbClass& c) {
  std::ostringstream os;
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, ClassA>) os << "A(" << x.l << "," << x.m << "," << x.n << ")";
        if constexpr (std::is_same_v<T, ClassB>) os << "B(" << x.m << "," << x.n << ")";
        if constexpr (std::is_same_v<T, ClassC>) os << "C(" << x.n << ")";
        if constexpr (std::is_same_v<T, ClassD>) os << "D(" << x.m << "," << x.n << ")";
      },
      c);
  return os.str();
}

namespace {

struct WorkGraph {
  std::map<int, Int> order;
  std::vector<GraphEdge> edges;

  // Removes edge idx and merges vertex `gone` into `kept`.
  void contract(std::size_t idx, int gone, int kept) {
    edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(idx));
    for (auto& e : edges) {
      if (e.from == gone) e.from = kept;
      if (e.to == gone) e.to = kept;
    }
    order.erase(gone);
  }

  bool reduce_once() {
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const auto e = edges[i];
      if (e.from == e.to) continue;
      const Int a = order.at(e.from), b = order.at(e.to);
      if (e.order == 1 && (a == 1 || b == 1)) {
        if (a == 1)
          contract(i, e.from, e.to);
        else
          contract(i, e.to, e.from);
        return true;
      }
      if (e.order == a && e.order == b) {
        contract(i, e.to, e.from);
        return true;
      }
    }
    return false;
  }
};

}  // namespace

std::optional<OrbClass> classify(const GraphOfGroups& graph) {
  WorkGraph w;
  for (const auto& v : graph.vertices()) w.order[v.id] = v.order;
  w.edges = graph.edges();
  while (w.reduce_once()) {
  }

  const auto nv = w.order.size();
  const auto ne = w.edges.size();
  auto is_loop = [](const GraphEdge& e) { return e.from == e.to; };
  auto all_nontrivial = [&] {
    return std::all_of(w.order.begin(), w.order.end(), [](const auto& kv) { return kv.second > 1; });
  };

  if (nv == 1 && ne == 1 && is_loop(w.edges[0]) && w.edges[0].order == 1 && all_nontrivial())
    return make_class_c(w.order.begin()->second);

  if (nv == 2 && ne == 1 && !is_loop(w.edges[0]) && w.edges[0].order == 1 && all_nontrivial()) {
    const Int m = w.order.at(w.edges[0].from), n = w.order.at(w.edges[0].to);
    if (Rational(1, m) + Rational(1, n) < 1) return make_class_b(m, n);
    return std::nullopt;
  }

  if (nv == 3 && ne == 2 && all_nontrivial() &&
      std::none_of(w.edges.begin(), w.edges.end(), is_loop) &&
      std::all_of(w.edges.begin(), w.edges.end(), [](const GraphEdge& e) { return e.order == 1; })) {
    std::array<Int, 3> o{};
    std::size_t i = 0;
    for (const auto& [id, ord] : w.order) o[i++] = ord;
    if (Rational(1, o[0]) + Rational(1, o[1]) + Rational(1, o[2]) > 1) return make_class_a(o[0], o[1], o[2]);
    return std::nullopt;
  }

  if (nv == 2 && ne == 2 && all_nontrivial()) {
    const GraphEdge* loop = nullptr;
    const GraphEdge* link = nullptr;
    for (const auto& e : w.edges) (is_loop(e) ? loop : link) = &e;
    if (loop && link && link->order == 1) {
      const Int m = w.order.at(loop->from);
      const int other = link->from == loop->from ? link->to : link->from;
      if (loop->order == m) return make_class_d(m, w.order.at(other));
    }
  }
  return std::nullopt;
}

GraphOfGroups representative_graph(const OrbClass& c) {
  return std::visit(
      [](const auto& x) -> GraphOfGroups {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, ClassA>)
          return GraphOfGroups({{1, x.l}, {2, x.m}, {3, x.n}}, {{1, 2, 1}, {2, 3, 1}});
        else if constexpr (std::is_same_v<T, ClassB>)
          return GraphOfGroups({{1, x.m}, {2, x.n}}, {{1, 2, 1}});
        else if constexpr (std::is_same_v<T, ClassC>)
          return GraphOfGroups({{1, x.n}}, {{1, 1, 1}});
        else
          return GraphOfGroups({{1, x.n}, {2, x.m}}, {{1, 2, 1}, {2, 2, x.m}});
      },
      c);
}

Rational class_euler_char(const OrbClass& c) {
  return std::visit(
      [](const auto& x) -> Rational {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, ClassA>)
          return Rational(1, x.l) + Rational(1, x.m) + Rational(1, x.n) - 2;
        else if constexpr (std::is_same_v<T, ClassB>)
          return Rational(1, x.m) + Rational(1, x.n) - 1;
        else
          return Rational(1, x.n) - 1;
      },
      c);
}

SourcePresentation class_fundamental_group(const OrbClass& c) {
  return std::visit(
      [](const auto& x) -> SourcePresentation {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, ClassA>)
          return FreeProduct{{x.l, x.m, x.n}, 0, std::nullopt};
        else if constexpr (std::is_same_v<T, ClassB>)
          return FreeProduct{{x.m, x.n}, 0, std::nullopt};
        else if constexpr (std::is_same_v<T, ClassC>)
          return FreeProduct{{x.n}, 1, std::nullopt};
        else
          return FreeProduct{{x.n}, 0, x.m};
      },
      c);
}

// ---------------------------------------------------------------------------
// Riemann-Hurwitz

Rational orb_euler_char_2d(const OrbSignature& s) {
  Rational chi = 2 - 2 * s.quotient_genus;
  for (Int n : s.cone_indices) chi -= 1 - Rational(1, n);
  return chi;
}

std::optional<Int> rh_covered_genus(Int order, const OrbSignature& s) {
  if (order < 1) throw InvalidInput("covering order must be positive");
  for (Int n : s.cone_indices)
    if (order % n != 0) throw InvalidInput("cone index does not divide covering order");
  const Rational euler = orb_euler_char_2d(s) * order;
  if (euler.denominator() != 1) return std::nullopt;
  const Int two_minus_2g = euler.numerator();
  if ((2 - two_minus_2g) % 2 != 0 || two_minus_2g > 2) return std::nullopt;
  return (2 - two_minus_2g) / 2;
}

std::vector<EqualConeSolution> enumerate_equal_cone_solutions(Int g, Int min_order) {
  if (g <= 1 || g % 2 != 0) throw InvalidInput("equal-cone enumeration needs an even genus > 1");
  if (min_order < 2) throw InvalidInput("equal-cone enumeration needs min_order >= 2");
  // 2g - 2 + k = n (2g' + k - 2); n >= 2 bounds 4g' + k <= 2g + 2.
  std::vector<EqualConeSolution> out;
  for (Int gq = 0; 4 * gq <= 2 * g + 2; ++gq) {
    for (Int k = 0; 4 * gq + k <= 2 * g + 2; k += 2) {
      const Int denom = 2 * gq + k - 2;
      if (denom <= 0) continue;
      const Int num = 2 * g - 2 + k;
      if (num % denom != 0) continue;
      const Int n = num / denom;
      if (n >= min_order) out.push_back({gq, k, n});
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.quotient_genus != b.quotient_genus) return a.quotient_genus > b.quotient_genus;
    return a.cone_count < b.cone_count;
  });
  return out;
}

std::vector<OrbSignature> enumerate_signatures(Int g, Int order, Int quotient_genus_max) {
  require_genus(g);
  if (order < 2) throw InvalidInput("signature enumeration needs order >= 2");
  std::vector<Int> cones;
  for (Int d : divisors(order))
    if (d >= 2) cones.push_back(d);
  const Int max_cones = (4 * g - 4) / order + 4;

  std::vector<OrbSignature> out;
  std::vector<Int> current;
  // Scaled by order, each cone n contributes order - order/n, ascending in n.
  std::function<void(std::size_t, Int, Int)> rec = [&](std::size_t from, Int remaining, Int genus) {
    if (remaining == 0) {
      out.push_back(OrbSignature{genus, current});
      return;
    }
    if (static_cast<Int>(current.size()) >= max_cones) return;
    for (std::size_t i = from; i < cones.size(); ++i) {
      const Int weight = order - order / cones[i];
      if (weight > remaining) break;
      current.push_back(cones[i]);
      rec(i, remaining - weight, genus);
      current.pop_back();
    }
  };
  const Int gmax = std::min(g, quotient_genus_max);
  for (Int genus = 0; genus <= gmax; ++genus) {
    const Int target = (2 * g - 2) + (2 - 2 * genus) * order;
    if (target < 0) break;
    rec(0, target, genus);
  }
  return out;
}

}  // namespace surfsym
