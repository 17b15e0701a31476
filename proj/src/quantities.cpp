#include "surfsym/quantities.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "surfsym/errors.hpp"
#include "surfsym/kernels.hpp"

namespace surfsym {

namespace {

bool even(Int g) { return g % 2 == 0; }

struct NameEntry {
  QuantityTag tag;
  const char* name;
};

constexpr NameEntry kPlainNames[] = {
    {QuantityTag::C, "C"},
    {QuantityTag::A, "A"},
    {QuantityTag::CH, "CH"},
    {QuantityTag::AH, "AH"},
    {QuantityTag::CE, "CE"},
    {QuantityTag::AE, "AE"},
    {QuantityTag::CminusSurface, "C-minus"},
    {QuantityTag::CyclicSurfaceFull, "C-full"},
    {QuantityTag::CHminus, "CH-minus"},
    {QuantityTag::AHminus, "AH-minus"},
    {QuantityTag::AminusSurface, "A-minus"},
    {QuantityTag::CyclicHandlebodyFull, "CH-full"},
    {QuantityTag::AbelianHandlebodyFull, "AH-full"},
    {QuantityTag::CEmax, "CE-max"},
    {QuantityTag::AEmax, "AE-max"},
};

std::string lower(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  return out;
}

}  // namespace

std::string_view to_string(ExtType t) {
  switch (t) {
    case ExtType::PP: return "(+,+)";
    case ExtType::PM: return "(+,-)";
    case ExtType::MP: return "(-,+)";
    case ExtType::MM: return "(-,-)";
    case ExtType::Mix: return "(Mix)";
  }
  return "?";
}

Quantity Quantity::of(QuantityTag tag) {
  if (tag == QuantityTag::CEtype || tag == QuantityTag::AEtype)
    throw InvalidInput("typed quantity needs an ExtType");
  return Quantity{tag, std::nullopt};
}

std::string Quantity::name() const {
  if (tag == QuantityTag::CEtype) return "CE" + std::string(to_string(*type));
  if (tag == QuantityTag::AEtype) return "AE" + std::string(to_string(*type));
  for (const auto& e : kPlainNames)
    if (e.tag == tag) return e.name;
  return "?";
}

std::optional<Quantity> Quantity::parse(std::string_view text) {
  const auto key = lower(text);
  for (const auto& q : all_quantities())
    if (lower(q.name()) == key) return q;
  return std::nullopt;
}

std::vector<Quantity> all_quantities() {
  std::vector<Quantity> out;
  for (auto tag : {QuantityTag::C, QuantityTag::A, QuantityTag::CH, QuantityTag::AH, QuantityTag::CE,
                   QuantityTag::AE, QuantityTag::CminusSurface, QuantityTag::CyclicSurfaceFull})
    out.push_back(Quantity::of(tag));
  for (auto t : kAllExtTypes) out.push_back(Quantity::ce(t));
  for (auto t : kAllExtTypes) out.push_back(Quantity::ae(t));
  out.push_back(Quantity::of(QuantityTag::CEmax));
  out.push_back(Quantity::of(QuantityTag::AEmax));
  for (auto tag : {QuantityTag::CHminus, QuantityTag::AHminus, QuantityTag::AminusSurface,
                   QuantityTag::CyclicHandlebodyFull, QuantityTag::AbelianHandlebodyFull})
    out.push_back(Quantity::of(tag));
  return out;
}

// ---------------------------------------------------------------------------
// Witnesses

std::string to_string(const ChMinusWitness& w) {
  std::ostringstream os;
  if (const auto* e = std::get_if<EvenPair>(&w))
    os << "(m,n)=(" << e->m << "," << e->n << ")";
  else {
    const auto& o = std::get<OddPair>(w);
    os << "(k,n)=(" << o.k << "," << o.n << ")";
  }
  return os.str();
}

Int witness_genus(const ChMinusWitness& w) {
  if (const auto* e = std::get_if<EvenPair>(&w)) {
    const Int d = std::gcd(e->m, e->n);
    return std::lcm(e->m, e->n) - (e->m + e->n) / d + 1;
  }
  const auto& o = std::get<OddPair>(w);
  return o.k * o.n - o.k + 1;
}

Int witness_value(const ChMinusWitness& w) {
  if (const auto* e = std::get_if<EvenPair>(&w)) return 2 * std::lcm(e->m, e->n);
  const auto& o = std::get<OddPair>(w);
  return 2 * o.k * o.n;
}

bool witness_well_formed(const ChMinusWitness& w) {
  auto odd_pos = [](Int x) { return x > 0 && x % 2 == 1; };
  if (const auto* e = std::get_if<EvenPair>(&w)) return odd_pos(e->m) && odd_pos(e->n);
  const auto& o = std::get<OddPair>(w);
  return odd_pos(o.k) && odd_pos(o.n);
}

// ---------------------------------------------------------------------------
// Closed forms

Int classical_order(QuantityTag q, Int g) {
  require_genus(g);
  switch (q) {
    case QuantityTag::C: return 4 * g + 2;
    case QuantityTag::A: return 4 * g + 4;
    case QuantityTag::CH: return even(g) ? 2 * g + 2 : 2 * g;
    case QuantityTag::AH: return g == 5 ? 16 : 2 * g + 2;
    case QuantityTag::CE: return even(g) ? 2 * g + 2 : 2 * g - 2;
    case QuantityTag::AE: return 2 * g + 2;
    case QuantityTag::CminusSurface: return even(g) ? 4 * g + 4 : 4 * g - 4;
    case QuantityTag::CyclicSurfaceFull: return even(g) ? 4 * g + 4 : 4 * g + 2;
    default: throw InvalidInput("not an orientation-preserving table quantity");
  }
}

std::optional<Int> extendable_type_max(Kind kind, ExtType t, Int g) {
  require_genus(g);
  if (kind == Kind::Cyclic) {
    switch (t) {
      case ExtType::PP: return classical_order(QuantityTag::CE, g);
      case ExtType::PM: return 2 * g + 2;
      case ExtType::MP: return even(g) ? 4 * g + 4 : 4 * g - 4;
      case ExtType::MM: return even(g) ? 2 * g + 2 : 2 * g;
      case ExtType::Mix: return std::nullopt;
    }
  } else {
    switch (t) {
      case ExtType::PP: return classical_order(QuantityTag::AE, g);
      case ExtType::PM:
      case ExtType::MP:
      case ExtType::MM: return 4 * g + 4;
      case ExtType::Mix: return even(g) ? std::optional<Int>(2 * g + 4) : std::nullopt;
    }
  }
  return std::nullopt;
}

Int extendable_max(Kind kind, Int g) {
  require_genus(g);
  if (kind == Kind::Abelian) return 4 * g + 4;
  return even(g) ? 4 * g + 4 : 4 * g - 4;
}

Int ah_minus(Int g) {
  require_genus(g);
  return g == 5 ? 32 : 4 * g + 4;
}

Int a_minus_surface(Int g) {
  require_genus(g);
  return g == 5 ? 32 : 4 * g + 4;
}

// ---------------------------------------------------------------------------
// Handlebody maximum, parametrised route

namespace {

ChMinusResult finish(std::vector<ChMinusWitness> all, Int g) {
  if (all.empty()) throw Infeasible("no witness pair for genus " + std::to_string(g));
  ChMinusResult r;
  for (const auto& w : all) r.value = std::max(r.value, witness_value(w));
  for (auto& w : all)
    if (witness_value(w) == r.value) r.witnesses.push_back(w);
  std::sort(r.witnesses.begin(), r.witnesses.end());
  return r;
}

}  // namespace

ChMinusResult ch_minus(Int g) {
  require_genus(g);
  std::vector<ChMinusWitness> all;
  if (even(g)) {
    // m = d m', n = d n', (m', n') = 1, all odd: d m' n' = g - 1 + m' + n'.
    for (Int mp = 1; mp <= g + 1; mp += 2) {
      for (Int np = 1;; np += 2) {
        if (mp == 1 ? np > g : (mp - 1) * (np - 1) > g) break;
        if (std::gcd(mp, np) != 1) continue;
        const Int num = g - 1 + mp + np;
        const Int den = mp * np;
        if (num % den != 0) continue;
        const Int d = num / den;
        if (d % 2 == 0) continue;
        all.push_back(EvenPair{d * mp, d * np});
      }
    }
  } else {
    for (Int k : divisors(g - 1)) {
      if (k % 2 == 0) continue;
      const Int n = (g - 1) / k + 1;
      if (n % 2 == 1) all.push_back(OddPair{k, n});
    }
  }
  return finish(std::move(all), g);
}

// ---------------------------------------------------------------------------
// Handlebody maximum, direct scan

namespace {

std::vector<ChMinusWitness> odd_direct(Int g) {
  std::vector<ChMinusWitness> all;
  for (Int k = 1; k <= g - 1; k += 2)
    if ((g - 1) % k == 0 && ((g - 1) / k) % 2 == 0) all.push_back(OddPair{k, (g - 1) / k + 1});
  return all;
}

// Sweeps every odd pair m <= n <= 2*g_max+1 once through the row kernel and
// files each pair under the even genus it certifies.
std::vector<std::vector<ChMinusWitness>> even_sweep(Int g_max) {
  std::vector<std::vector<ChMinusWitness>> by_genus(static_cast<std::size_t>(g_max + 1));
  const Int top = 2 * g_max + 1;
  if (top > kernels::kMaxOperand) throw InvalidInput("direct scan limited to genus <= 23169");
  std::vector<std::int32_t> genus(static_cast<std::size_t>(top / 2 + 1));
  std::vector<std::int32_t> lcm(genus.size());
  for (Int m = 1; m <= top; m += 2) {
    const std::size_t count = static_cast<std::size_t>((top - m) / 2 + 1);
    const kernels::GenusRowArgs args{static_cast<std::int32_t>(m), static_cast<std::int32_t>(m), 2};
    kernels::genus_row(args, std::span(genus.data(), count), std::span(lcm.data(), count));
    for (std::size_t j = 0; j < count; ++j) {
      const Int G = genus[j];
      const Int n = m + 2 * static_cast<Int>(j);
      if (G < 2 || G > g_max || G % 2 != 0 || n > 2 * G + 2) continue;
      auto& bucket = by_genus[static_cast<std::size_t>(G)];
      bucket.push_back(EvenPair{m, n});
      if (n != m) bucket.push_back(EvenPair{n, m});
    }
  }
  return by_genus;
}

}  // namespace

ChMinusResult ch_minus_direct_scan(Int g) {
  require_genus(g);
  if (!even(g)) return finish(odd_direct(g), g);
  auto buckets = even_sweep(g);
  return finish(std::move(buckets[static_cast<std::size_t>(g)]), g);
}

std::vector<ChMinusResult> ch_minus_direct_scan_range(Int g_max) {
  std::vector<ChMinusResult> out;
  if (g_max < 2) return out;
  auto buckets = even_sweep(g_max);
  for (Int g = 2; g <= g_max; ++g)
    out.push_back(even(g) ? finish(std::move(buckets[static_cast<std::size_t>(g)]), g) : finish(odd_direct(g), g));
  return out;
}

Int full_handlebody_max(Kind kind, Int g) {
  require_genus(g);
  if (kind == Kind::Cyclic) return ch_minus(g).value;
  return g == 5 ? 32 : 4 * g + 4;
}

MaxOrderResult evaluate(const Quantity& q, Int g) {
  require_genus(g);
  MaxOrderResult r{q, g, std::nullopt, {}};
  switch (q.tag) {
    case QuantityTag::CEtype: r.value = extendable_type_max(Kind::Cyclic, *q.type, g); break;
    case QuantityTag::AEtype: r.value = extendable_type_max(Kind::Abelian, *q.type, g); break;
    case QuantityTag::CEmax: r.value = extendable_max(Kind::Cyclic, g); break;
    case QuantityTag::AEmax: r.value = extendable_max(Kind::Abelian, g); break;
    case QuantityTag::CHminus: {
      auto res = ch_minus(g);
      r.value = res.value;
      r.witnesses = std::move(res.witnesses);
      break;
    }
    case QuantityTag::CyclicHandlebodyFull: {
      r.value = full_handlebody_max(Kind::Cyclic, g);
      r.witnesses = ch_minus(g).witnesses;
      break;
    }
    case QuantityTag::AHminus: r.value = ah_minus(g); break;
    case QuantityTag::AminusSurface: r.value = a_minus_surface(g); break;
    case QuantityTag::AbelianHandlebodyFull: r.value = full_handlebody_max(Kind::Abelian, g); break;
    default: r.value = classical_order(q.tag, g); break;
  }
  return r;
}

std::vector<std::pair<std::string, bool>> consistency_check(Int g) {
  require_genus(g);
  const auto ce = [&](ExtType t) { return extendable_type_max(Kind::Cyclic, t, g); };
  const auto ae = [&](ExtType t) { return extendable_type_max(Kind::Abelian, t, g); };
  const Int sign = even(g) ? 1 : -1;
  const Int two_ae = 2 * classical_order(QuantityTag::AE, g);

  auto max_over = [&](Kind kind) {
    Int best = 0;
    for (auto t : kAllExtTypes)
      if (auto v = extendable_type_max(kind, t, g)) best = std::max(best, *v);
    return best;
  };

  return {
      {"AH-minus = 2*AH", ah_minus(g) == 2 * classical_order(QuantityTag::AH, g)},
      {"A-minus = AH-minus", a_minus_surface(g) == ah_minus(g)},
      {"CE(-,+) = C-minus", ce(ExtType::MP) == classical_order(QuantityTag::CminusSurface, g)},
      {"CE(+,-) = 2g+2", ce(ExtType::PM) == 2 * g + 2},
      {"CE(-,-) = 2g+1+(-1)^g", ce(ExtType::MM) == 2 * g + 1 + sign},
      {"AE(+,-) = 2*AE", ae(ExtType::PM) == two_ae},
      {"AE(-,+) = 2*AE", ae(ExtType::MP) == two_ae},
      {"AE(-,-) = 2*AE", ae(ExtType::MM) == two_ae},
      {"CE-max = max over types", extendable_max(Kind::Cyclic, g) == max_over(Kind::Cyclic)},
      {"AE-max = max over types", extendable_max(Kind::Abelian, g) == max_over(Kind::Abelian)},
  };
}

}  // namespace surfsym
