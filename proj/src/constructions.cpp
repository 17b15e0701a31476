#include "surfsym/constructions.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

#include "surfsym/errors.hpp"

namespace surfsym {

namespace {

Rational frac(const Rational& r) {
  Int q = r.numerator() / r.denominator();
  if (r.numerator() < 0 && r.numerator() % r.denominator() != 0) --q;
  return r - q;
}

Int mod(Int a, Int m) { return ((a % m) + m) % m; }

auto turn_key(const RationalTurn& t) { return std::make_pair(t.value().numerator(), t.value().denominator()); }

}  // namespace

RationalTurn::RationalTurn(Rational r) : value_(frac(r)) {}

// ---------------------------------------------------------------------------
// Points and isometries

S3Point S3Point::make(Rational r1_sq, RationalTurn theta1, RationalTurn theta2) {
  if (r1_sq < 0 || r1_sq > 1) throw InvalidInput("|z1|^2 must lie in [0, 1]");
  if (r1_sq == Rational(0)) theta1 = RationalTurn();
  if (r1_sq == Rational(1)) theta2 = RationalTurn();
  return S3Point{r1_sq, theta1, theta2};
}

bool operator<(const S3Point& a, const S3Point& b) {
  return std::tuple(a.r1_sq.numerator(), a.r1_sq.denominator(), turn_key(a.theta1), turn_key(a.theta2)) <
         std::tuple(b.r1_sq.numerator(), b.r1_sq.denominator(), turn_key(b.theta1), turn_key(b.theta2));
}

S3Point antipode(const S3Point& p) {
  const RationalTurn half(1, 2);
  return S3Point::make(p.r1_sq, p.theta1 + half, p.theta2 + half);
}

bool operator<(const S3Isometry& a, const S3Isometry& b) {
  return std::tuple(turn_key(a.u), a.conj1, turn_key(a.v), a.conj2) <
         std::tuple(turn_key(b.u), b.conj1, turn_key(b.v), b.conj2);
}

S3Isometry identity_isometry() { return {}; }

S3Isometry compose(const S3Isometry& a, const S3Isometry& b) {
  return S3Isometry{a.u + (a.conj1 ? -b.u : b.u), a.conj1 != b.conj1, a.v + (a.conj2 ? -b.v : b.v),
                    a.conj2 != b.conj2};
}

S3Isometry power(const S3Isometry& a, Int k) {
  if (k < 0) throw InvalidInput("negative power");
  S3Isometry r = identity_isometry();
  for (Int i = 0; i < k; ++i) r = compose(a, r);
  return r;
}

S3Point apply(const S3Isometry& a, const S3Point& p) {
  return S3Point::make(p.r1_sq, a.u + (a.conj1 ? -p.theta1 : p.theta1), a.v + (a.conj2 ? -p.theta2 : p.theta2));
}

Int iso_order(const S3Isometry& a) {
  const Int o1 = a.conj1 ? 2 : a.u.value().denominator();
  const Int o2 = a.conj2 ? 2 : a.v.value().denominator();
  return std::lcm(o1, o2);
}

int orientation_sign(const S3Isometry& a) { return (a.conj1 != a.conj2) ? -1 : 1; }

namespace iso {
S3Isometry tau(Int g) { return {RationalTurn(1, 4), false, RationalTurn(1, 2 * g + 2), false}; }
S3Isometry rho() { return {RationalTurn(1, 2), false, RationalTurn(), false}; }
S3Isometry sigma() { return {RationalTurn(), true, RationalTurn(), false}; }
S3Isometry phi(Int g) {
  return {RationalTurn(1, 2 * g - 2), false, RationalTurn(1, 4) + RationalTurn(1, 4 * g - 4), false};
}
S3Isometry rho_sigma() { return {RationalTurn(1, 2), true, RationalTurn(), false}; }
}  // namespace iso

GroupClosure generate_group(const std::vector<S3Isometry>& gens, std::size_t cap) {
  if (cap < 1) throw InvalidInput("closure cap must be positive");
  std::set<S3Isometry> seen{identity_isometry()};
  std::vector<S3Isometry> queue{identity_isometry()};
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (const auto& s : gens) {
      auto x = compose(s, queue[head]);
      if (seen.insert(x).second) {
        if (seen.size() > cap) throw GroupTooLarge("group closure exceeds cap");
        queue.push_back(x);
      }
    }
  GroupClosure out{{seen.begin(), seen.end()}, true};
  for (const auto& a : gens)
    for (const auto& b : gens)
      if (compose(a, b) != compose(b, a)) out.abelian = false;
  return out;
}

// ---------------------------------------------------------------------------
// Graphs

bool operator<(const TorusCircle& a, const TorusCircle& b) {
  return std::tuple(a.r1_sq.numerator(), a.r1_sq.denominator(), a.slope, turn_key(a.phase)) <
         std::tuple(b.r1_sq.numerator(), b.r1_sq.denominator(), b.slope, turn_key(b.phase));
}

bool on_circle(const TorusCircle& c, const S3Point& p) {
  return p.r1_sq == c.r1_sq && p.theta1 == RationalTurn(c.slope * p.theta2.value()) + c.phase;
}

TorusCircle image_circle(const S3Isometry& a, const TorusCircle& c) {
  const Int s1 = a.conj1 ? -1 : 1, s2 = a.conj2 ? -1 : 1;
  const Int k = s1 * s2 * c.slope;
  return TorusCircle{c.r1_sq, k, a.u - RationalTurn(k * a.v.value()) + (s1 > 0 ? c.phase : -c.phase)};
}

namespace {

using ChordKey = std::pair<S3Point, S3Point>;
struct ArcKey {
  TorusCircle circle;
  S3Point from, to;
  friend bool operator<(const ArcKey& a, const ArcKey& b) {
    if (a.circle < b.circle) return true;
    if (b.circle < a.circle) return false;
    if (a.from < b.from) return true;
    if (b.from < a.from) return false;
    return a.to < b.to;
  }
};

struct GeometricKeys {
  std::set<S3Point> vertices;
  std::set<ChordKey> chords;
  std::set<ArcKey> arcs;
  bool operator==(const GeometricKeys& o) const {
    auto same_arcs = arcs.size() == o.arcs.size() &&
                     std::equal(arcs.begin(), arcs.end(), o.arcs.begin(), [](const ArcKey& x, const ArcKey& y) {
                       return !(x < y) && !(y < x);
                     });
    return vertices == o.vertices && chords == o.chords && same_arcs;
  }
};

ChordKey chord_key(const S3Point& p, const S3Point& q) { return p < q ? ChordKey{p, q} : ChordKey{q, p}; }

GeometricKeys keys_of(const GeodesicGraph& g) {
  GeometricKeys k;
  k.vertices.insert(g.vertices.begin(), g.vertices.end());
  for (const auto& e : g.edges) {
    if (const auto* c = std::get_if<Chord>(&e))
      k.chords.insert(chord_key(g.vertices[c->a], g.vertices[c->b]));
    else {
      const auto& a = std::get<TorusArc>(e);
      k.arcs.insert({g.circles[a.circle], g.vertices[a.from], g.vertices[a.to]});
    }
  }
  return k;
}

// Whether `to` follows `from` among the points on circle c, in increasing theta2.
bool consecutive_on_circle(const TorusCircle& c, const std::set<S3Point>& points, const S3Point& from,
                           const S3Point& to) {
  if (!on_circle(c, from) || !on_circle(c, to) || from == to) return false;
  const Rational span = (to.theta2 - from.theta2).value();
  for (const auto& p : points) {
    if (!on_circle(c, p) || p == from || p == to) continue;
    const Rational off = (p.theta2 - from.theta2).value();
    if (off > 0 && off < span) return false;
  }
  return true;
}

GeometricKeys image_keys(const S3Isometry& a, const GeodesicGraph& g, bool& arcs_ok) {
  GeometricKeys k;
  for (const auto& v : g.vertices) k.vertices.insert(apply(a, v));
  arcs_ok = true;
  for (const auto& e : g.edges) {
    if (const auto* c = std::get_if<Chord>(&e)) {
      k.chords.insert(chord_key(apply(a, g.vertices[c->a]), apply(a, g.vertices[c->b])));
    } else {
      const auto& arc = std::get<TorusArc>(e);
      const auto circle = image_circle(a, g.circles[arc.circle]);
      auto from = apply(a, g.vertices[arc.from]);
      auto to = apply(a, g.vertices[arc.to]);
      if (a.conj2) std::swap(from, to);
      if (!consecutive_on_circle(circle, k.vertices, from, to)) arcs_ok = false;
      k.arcs.insert({circle, from, to});
    }
  }
  return k;
}

Int cycle_rank(std::size_t nv, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  if (nv == 0) throw InvalidInput("graph has no vertices");
  std::vector<std::size_t> parent(nv);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (auto [a, b] : edges) parent[find(a)] = find(b);
  for (std::size_t i = 1; i < nv; ++i)
    if (find(i) != find(0)) throw InvalidInput("graph is disconnected");
  return static_cast<Int>(edges.size()) - static_cast<Int>(nv) + 1;
}

}  // namespace

void validate(const GeodesicGraph& graph) {
  const std::set<S3Point> points(graph.vertices.begin(), graph.vertices.end());
  if (points.size() != graph.vertices.size()) throw InvalidInput("duplicate vertices");
  auto check_index = [&](int i) {
    if (i < 0 || static_cast<std::size_t>(i) >= graph.vertices.size()) throw InvalidInput("edge index out of range");
  };
  for (const auto& e : graph.edges) {
    if (const auto* c = std::get_if<Chord>(&e)) {
      check_index(c->a);
      check_index(c->b);
      if (c->a == c->b || graph.vertices[c->a] == antipode(graph.vertices[c->b]))
        throw InvalidInput("chord endpoints must be distinct and not antipodal");
    } else {
      const auto& a = std::get<TorusArc>(e);
      check_index(a.from);
      check_index(a.to);
      if (a.circle < 0 || static_cast<std::size_t>(a.circle) >= graph.circles.size())
        throw InvalidInput("arc circle out of range");
      if (!consecutive_on_circle(graph.circles[a.circle], points, graph.vertices[a.from], graph.vertices[a.to]))
        throw InvalidInput("arc endpoints are not consecutive on their circle");
    }
  }
  const auto keys = keys_of(graph);
  if (keys.chords.size() + keys.arcs.size() != graph.edges.size()) throw InvalidInput("duplicate edges");
}

Int graph_genus(const GeodesicGraph& graph) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (const auto& e : graph.edges) {
    if (const auto* c = std::get_if<Chord>(&e))
      pairs.emplace_back(c->a, c->b);
    else
      pairs.emplace_back(std::get<TorusArc>(e).from, std::get<TorusArc>(e).to);
  }
  return cycle_rank(graph.vertices.size(), pairs);
}

namespace {

struct PairKeys {
  GeometricKeys own;
  std::optional<GeometricKeys> other;
};

PairKeys pair_keys(const GeodesicGraph& graph, const std::optional<GeodesicGraph>& dual) {
  return {keys_of(graph), dual ? std::optional(keys_of(*dual)) : std::nullopt};
}

GraphImage graph_image(const S3Isometry& a, const GeodesicGraph& graph, const std::optional<GeodesicGraph>& dual,
                       const PairKeys& keys) {
  bool ok1 = true, ok2 = true;
  const auto img = image_keys(a, graph, ok1);
  if (!dual) return ok1 && img == keys.own ? GraphImage::PreservesEach : GraphImage::Neither;
  const auto img_dual = image_keys(a, *dual, ok2);
  if (!ok1 || !ok2) return GraphImage::Neither;
  if (img == keys.own && img_dual == *keys.other) return GraphImage::PreservesEach;
  if (img == *keys.other && img_dual == keys.own) return GraphImage::Swaps;
  return GraphImage::Neither;
}

}  // namespace

GraphImage graph_image(const S3Isometry& a, const GeodesicGraph& graph, const std::optional<GeodesicGraph>& dual) {
  return graph_image(a, graph, dual, pair_keys(graph, dual));
}

// ---------------------------------------------------------------------------
// Builders

namespace {

void require_parity(Int g, bool want_even, const char* what) {
  require_genus(g);
  if ((g % 2 == 0) != want_even) throw InvalidGenus(std::string(what) + " needs " + (want_even ? "even" : "odd") + " genus");
}

// a_m = (e^{2 pi i m/4}, 0) and b_n = (0, e^{2 pi i n/(2g+2)}).
S3Point cage_a(Int m) { return S3Point::make(1, RationalTurn(m, 4), RationalTurn()); }
S3Point cage_b(Int g, Int n) { return S3Point::make(0, RationalTurn(), RationalTurn(n, 2 * g + 2)); }

GeodesicGraph cage_graph(Int g, Int parity) {
  GeodesicGraph gr;
  gr.vertices = {cage_a(parity), cage_a(parity + 2)};
  for (Int n = parity; n <= 2 * g + 1; n += 2) gr.vertices.push_back(cage_b(g, n));
  for (int a = 0; a < 2; ++a)
    for (int b = 2; b < static_cast<int>(gr.vertices.size()); ++b) gr.edges.push_back(Chord{a, b});
  return gr;
}

}  // namespace

Construction build_cage(Int g) {
  require_genus(g);
  Construction c{cage_graph(g, 0), cage_graph(g, 1), {}};
  c.gens = {{"tau", iso::tau(g)}, {"rho", iso::rho()}, {"sigma", iso::sigma()}};
  validate(c.graph);
  validate(*c.dual);
  return c;
}

Construction build_cage_odd(Int g) {
  require_parity(g, false, "cage variant");
  GeodesicGraph gr = cage_graph(g - 1, 1);
  const int a0 = static_cast<int>(gr.vertices.size());
  gr.vertices.push_back(cage_a(0));
  gr.edges.push_back(Chord{a0, 0});  // a0 a1
  gr.edges.push_back(Chord{a0, 1});  // a0 a3
  const auto t = iso::tau(g - 1);
  Construction c{gr, std::nullopt,
                 {{"tau^2 rho sigma", compose(compose(compose(t, t), iso::rho()), iso::sigma())}}};
  validate(c.graph);
  return c;
}

Construction build_wheel(Int g) {
  require_parity(g, false, "wheel");
  const Int q = 2 * g - 2;
  auto wheel_graph = [&](Int c) {
    GeodesicGraph gr;
    gr.circles.push_back(TorusCircle{Rational(1, 2), 2, RationalTurn(c, 2)});
    for (Int m = 0; m < q; ++m) {
      // a_m: theta2 = m/(2g-2); b_m: theta2 = 1/4 + (2m+1)/(4g-4).
      const RationalTurn t2 = c == 0 ? RationalTurn(m, q) : RationalTurn(1, 4) + RationalTurn(2 * m + 1, 2 * q);
      gr.vertices.push_back(S3Point::make(Rational(1, 2), RationalTurn(2 * t2.value()) + RationalTurn(c, 2), t2));
    }
    for (int m = 0; m < q; ++m) gr.edges.push_back(TorusArc{0, m, static_cast<int>((m + 1) % q)});
    for (int i = 0; i <= static_cast<int>(g) - 2; ++i) gr.edges.push_back(Chord{i, i + static_cast<int>(g) - 1});
    return gr;
  };
  Construction c{wheel_graph(0), wheel_graph(1), {{"phi", iso::phi(g)}}};
  validate(c.graph);
  validate(*c.dual);
  return c;
}

Construction build_fork(Int g) {
  require_parity(g, true, "fork");
  auto fork_graph = [&](Int parity) {
    GeodesicGraph gr;
    gr.vertices.push_back(S3Point::make(1, RationalTurn(2 * parity + 1, 4), RationalTurn()));
    for (Int n = parity; n <= g + 1; n += 2)
      gr.vertices.push_back(S3Point::make(0, RationalTurn(), RationalTurn(n, g + 2)));
    for (int b = 1; b < static_cast<int>(gr.vertices.size()); ++b) gr.edges.push_back(Chord{0, b});
    return gr;
  };
  const auto t = iso::tau(g + 1);
  Construction c{fork_graph(0), fork_graph(1), {{"tau^2", compose(t, t)}, {"rho sigma", iso::rho_sigma()}}};
  validate(c.graph);
  validate(*c.dual);
  return c;
}

std::vector<ElementFlags> element_flags(const std::vector<S3Isometry>& gens, const GeodesicGraph& graph,
                                        const std::optional<GeodesicGraph>& dual) {
  const auto keys = pair_keys(graph, dual);
  for (const auto& s : gens)
    if (graph_image(s, graph, dual, keys) == GraphImage::Neither)
      throw NotInvariant("generator does not preserve the graphs");
  std::vector<ElementFlags> out;
  for (const auto& e : generate_group(gens).elements) {
    const auto image = graph_image(e, graph, dual, keys);
    if (image == GraphImage::Neither) throw NotInvariant("group element does not preserve the graphs");
    const bool s3 = orientation_sign(e) < 0;
    const bool swaps = image == GraphImage::Swaps;
    out.push_back({s3, s3 != swaps, swaps});
  }
  return out;
}

namespace {

ExtType classify_flags(const std::vector<ElementFlags>& flags) {
  bool surf_only = false, s3_only = false, both = false;
  for (const auto& f : flags) {
    surf_only |= f.surface_reversed && !f.s3_reversed;
    s3_only |= f.s3_reversed && !f.surface_reversed;
    both |= f.s3_reversed && f.surface_reversed;
  }
  if (surf_only && s3_only) return ExtType::Mix;
  if (surf_only) return ExtType::MP;
  if (s3_only) return ExtType::PM;
  if (both) return ExtType::MM;
  return ExtType::PP;
}

}  // namespace

ExtType classify_action(const std::vector<S3Isometry>& gens, const GeodesicGraph& graph,
                        const std::optional<GeodesicGraph>& dual) {
  return classify_flags(element_flags(gens, graph, dual));
}

// ---------------------------------------------------------------------------
// Square

TorusAffineMap TorusAffineMap::make(std::array<int, 3> signs, std::array<Int, 3> t) {
  for (int s : signs)
    if (s != 1 && s != -1) throw InvalidInput("affine signs must be +1 or -1");
  return TorusAffineMap{signs, {mod(t[0], 2), mod(t[1], 2), mod(t[2], 1)}};
}

TorusAffineMap compose(const TorusAffineMap& a, const TorusAffineMap& b) {
  std::array<int, 3> s{};
  std::array<Int, 3> t{};
  for (int i = 0; i < 3; ++i) {
    s[i] = a.signs[i] * b.signs[i];
    t[i] = a.signs[i] * b.translation[i] + a.translation[i];
  }
  return TorusAffineMap::make(s, t);
}

GridVertex apply(const TorusAffineMap& a, const GridVertex& v) {
  return {mod(a.signs[0] * v[0] + a.translation[0], 2), mod(a.signs[1] * v[1] + a.translation[1], 2)};
}

GridEdge apply(const TorusAffineMap& a, const GridEdge& e) {
  GridVertex start = apply(a, e.start);
  if (a.signs[e.axis] < 0) start[e.axis] = mod(start[e.axis] - 1, 2);
  return {start, e.axis};
}

SquareExample build_square() {
  SquareExample s;
  for (Int x = 0; x < 2; ++x)
    for (Int y = 0; y < 2; ++y) s.vertices.push_back({x, y});
  for (const auto& v : s.vertices)
    for (int axis = 0; axis < 2; ++axis) s.edges.push_back({v, axis});

  const std::vector<TorusAffineMap> gens = {
      TorusAffineMap::make({1, -1, -1}, {0, 0, 0}),  // r_x
      TorusAffineMap::make({-1, 1, -1}, {0, 0, 0}),  // r_y
      TorusAffineMap::make({1, 1, -1}, {0, 0, 0}),   // R_z
      TorusAffineMap::make({1, 1, 1}, {1, 0, 0}),
      TorusAffineMap::make({1, 1, 1}, {0, 1, 0}),
      TorusAffineMap::make({1, 1, 1}, {0, 0, 1}),
  };
  std::set<TorusAffineMap> seen{TorusAffineMap{}};
  std::vector<TorusAffineMap> queue{TorusAffineMap{}};
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (const auto& g : gens) {
      auto x = compose(g, queue[head]);
      if (seen.insert(x).second) queue.push_back(x);
    }
  s.group.assign(seen.begin(), seen.end());
  s.abelian = true;
  for (const auto& a : s.group)
    for (const auto& b : s.group)
      if (compose(a, b) != compose(b, a)) s.abelian = false;
  return s;
}

Int graph_genus(const SquareExample& square) {
  std::map<GridVertex, std::size_t> index;
  for (std::size_t i = 0; i < square.vertices.size(); ++i) index[square.vertices[i]] = i;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (const auto& e : square.edges) {
    GridVertex end = e.start;
    end[e.axis] = mod(end[e.axis] + 1, 2);
    pairs.emplace_back(index.at(e.start), index.at(end));
  }
  return cycle_rank(square.vertices.size(), pairs);
}

// ---------------------------------------------------------------------------
// Verification reports

namespace {

std::vector<S3Isometry> maps_of(const Construction& c) {
  std::vector<S3Isometry> out;
  for (const auto& n : c.gens) out.push_back(n.map);
  return out;
}

void group_checks(std::vector<Check>& out, const std::string& label, const std::vector<S3Isometry>& gens,
                  const Construction& c, Int order, ExtType type, bool need_abelian) {
  const auto grp = generate_group(gens);
  out.push_back({label + " order " + std::to_string(order), static_cast<Int>(grp.elements.size()) == order});
  if (need_abelian) out.push_back({label + " abelian", grp.abelian});
  bool parity = true;
  const auto flags = element_flags(gens, c.graph, c.dual);
  for (const auto& f : flags) {
    const int count = int(f.s3_reversed) + int(f.surface_reversed) + int(f.swaps);
    parity &= count == 0 || count == 2;
  }
  out.push_back({label + " exactly-two-of-three parity", parity});
  out.push_back({label + " type " + std::string(to_string(type)), classify_flags(flags) == type});
}

void common_checks(std::vector<Check>& out, const Construction& c) {
  const auto maps = maps_of(c);
  for (const auto& n : c.gens)
    out.push_back({n.name + " preserves the graph pair", graph_image(n.map, c.graph, c.dual) != GraphImage::Neither});
  bool hom = true, coherent = true;
  const auto grp = generate_group(maps).elements;
  for (const auto& a : grp)
    for (const auto& b : maps) {
      hom &= orientation_sign(compose(a, b)) == orientation_sign(a) * orientation_sign(b);
      for (const auto& p : c.graph.vertices) coherent &= apply(compose(a, b), p) == apply(a, apply(b, p));
    }
  out.push_back({"orientation sign is multiplicative", hom});
  out.push_back({"apply and compose agree on vertices", coherent});
}

std::vector<Check> verify_cage(Int g) {
  std::vector<Check> out;
  const auto c = build_cage(g);
  const auto tau = iso::tau(g), rho = iso::rho(), sigma = iso::sigma();
  const auto ts = compose(tau, sigma);
  const auto t2 = compose(tau, tau);
  out.push_back({"graph has g+3 vertices", static_cast<Int>(c.graph.vertices.size()) == g + 3});
  out.push_back({"graph has 2g+2 edges", static_cast<Int>(c.graph.edges.size()) == 2 * g + 2});
  out.push_back({"dual has g+3 vertices", static_cast<Int>(c.dual->vertices.size()) == g + 3});
  out.push_back({"dual has 2g+2 edges", static_cast<Int>(c.dual->edges.size()) == 2 * g + 2});
  out.push_back({"graph genus g", graph_genus(c.graph) == g});
  common_checks(out, c);
  out.push_back({"tau swaps the sides", graph_image(tau, c.graph, c.dual) == GraphImage::Swaps});
  out.push_back({"rho preserves each side", graph_image(rho, c.graph, c.dual) == GraphImage::PreservesEach});
  out.push_back({"sigma preserves each side", graph_image(sigma, c.graph, c.dual) == GraphImage::PreservesEach});
  out.push_back({"tau preserves S3 orientation", orientation_sign(tau) == 1});
  out.push_back({"rho preserves S3 orientation", orientation_sign(rho) == 1});
  out.push_back({"sigma reverses S3 orientation", orientation_sign(sigma) == -1});
  out.push_back({"tau sigma has order 2g+2", iso_order(ts) == 2 * g + 2});
  if (g % 2 == 0) {
    const auto trs = compose(compose(t2, rho), sigma);
    out.push_back({"tau has order 4g+4", iso_order(tau) == 4 * g + 4});
    out.push_back({"tau^2 rho sigma has order 2g+2", iso_order(trs) == 2 * g + 2});
    group_checks(out, "(1) <tau>", {tau}, c, 4 * g + 4, ExtType::MP, false);
    group_checks(out, "(2) <tau^2 rho sigma>", {trs}, c, 2 * g + 2, ExtType::MM, false);
  } else {
    const auto v = build_cage_odd(g);
    out.push_back({"(2') graph has g+3 vertices", static_cast<Int>(v.graph.vertices.size()) == g + 3});
    out.push_back({"(2') graph genus g", graph_genus(v.graph) == g});
    out.push_back({"(2') tau^2 rho sigma has order 2g", iso_order(v.gens[0].map) == 2 * g});
    common_checks(out, v);
    group_checks(out, "(2') <tau^2 rho sigma>", maps_of(v), v, 2 * g, ExtType::MM, false);
  }
  group_checks(out, "(3) <tau sigma>", {ts}, c, 2 * g + 2, ExtType::PM, false);
  group_checks(out, "(4) <tau sigma, rho>", {ts, rho}, c, 4 * g + 4, ExtType::PM, true);
  group_checks(out, "(5) <tau, rho>", {tau, rho}, c, 4 * g + 4, ExtType::MP, true);
  group_checks(out, "(6) <tau^2, rho, sigma>", {t2, rho, sigma}, c, 4 * g + 4, ExtType::MM, true);
  return out;
}

std::vector<Check> verify_wheel(Int g) {
  std::vector<Check> out;
  const auto c = build_wheel(g);
  const auto phi = c.gens[0].map;
  out.push_back({"graph has 2g-2 vertices", static_cast<Int>(c.graph.vertices.size()) == 2 * g - 2});
  out.push_back({"graph has 3g-3 edges", static_cast<Int>(c.graph.edges.size()) == 3 * g - 3});
  out.push_back({"dual has 2g-2 vertices", static_cast<Int>(c.dual->vertices.size()) == 2 * g - 2});
  out.push_back({"dual has 3g-3 edges", static_cast<Int>(c.dual->edges.size()) == 3 * g - 3});
  out.push_back({"graph genus g", graph_genus(c.graph) == g});
  common_checks(out, c);
  out.push_back({"phi has order 4g-4", iso_order(phi) == 4 * g - 4});
  out.push_back({"phi preserves S3 orientation", orientation_sign(phi) == 1});
  out.push_back({"phi swaps the sides", graph_image(phi, c.graph, c.dual) == GraphImage::Swaps});
  group_checks(out, "<phi>", {phi}, c, 4 * g - 4, ExtType::MP, false);
  return out;
}

std::vector<Check> verify_fork(Int g) {
  std::vector<Check> out;
  const auto c = build_fork(g);
  const auto t2 = c.gens[0].map, rs = c.gens[1].map;
  out.push_back({"graph has g/2+2 vertices", static_cast<Int>(c.graph.vertices.size()) == g / 2 + 2});
  out.push_back({"graph has g/2+1 edges", static_cast<Int>(c.graph.edges.size()) == g / 2 + 1});
  common_checks(out, c);
  out.push_back({"tau^2 and rho sigma commute", compose(t2, rs) == compose(rs, t2)});
  out.push_back({"tau^2 preserves S3 orientation", orientation_sign(t2) == 1});
  out.push_back({"rho sigma reverses S3 orientation", orientation_sign(rs) == -1});
  out.push_back({"tau^2 swaps the sides", graph_image(t2, c.graph, c.dual) == GraphImage::Swaps});
  out.push_back({"rho sigma preserves each side", graph_image(rs, c.graph, c.dual) == GraphImage::PreservesEach});
  group_checks(out, "<tau^2, rho sigma>", {t2, rs}, c, 2 * g + 4, ExtType::Mix, true);
  return out;
}

std::vector<Check> verify_square() {
  std::vector<Check> out;
  const auto s = build_square();
  out.push_back({"group order 32", s.group.size() == 32});
  out.push_back({"group abelian", s.abelian});
  bool involutions = true, invariant = true;
  const std::set<GridVertex> vs(s.vertices.begin(), s.vertices.end());
  const std::set<GridEdge> es(s.edges.begin(), s.edges.end());
  for (const auto& a : s.group) {
    involutions &= compose(a, a) == TorusAffineMap{};
    std::set<GridVertex> iv;
    std::set<GridEdge> ie;
    for (const auto& v : s.vertices) iv.insert(apply(a, v));
    for (const auto& e : s.edges) ie.insert(apply(a, e));
    invariant &= iv == vs && ie == es;
  }
  out.push_back({"every element is an involution", involutions});
  out.push_back({"group preserves the graph", invariant});
  out.push_back({"graph has 4 vertices", s.vertices.size() == 4});
  out.push_back({"graph has 8 edges", es.size() == 8});
  out.push_back({"graph genus 5", graph_genus(s) == 5});
  return out;
}

}  // namespace

std::vector<Check> verify_example(const std::string& name, Int g) {
  if (name == "cage") return verify_cage(g);
  if (name == "wheel") return verify_wheel(g);
  if (name == "fork") return verify_fork(g);
  if (name == "square") return verify_square();
  throw InvalidInput("unknown example: " + name);
}

}  // namespace surfsym
