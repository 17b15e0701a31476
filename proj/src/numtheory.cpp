#include "surfsym/numtheory.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "surfsym/errors.hpp"

namespace surfsym {

Int lcm_list(std::span<const Int> ms) {
  if (ms.empty()) throw InvalidInput("lcm_list: empty list");
  Int acc = 1;
  for (Int m : ms) {
    if (m < 1) throw InvalidInput("lcm_list: entries must be positive");
    acc = std::lcm(acc, m);
  }
  return acc;
}

std::vector<Int> divisors(Int n) {
  if (n < 1) throw InvalidInput("divisors: n must be positive");
  std::vector<Int> low, high;
  for (Int d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    low.push_back(d);
    if (d != n / d) high.push_back(n / d);
  }
  low.insert(low.end(), high.rbegin(), high.rend());
  return low;
}

std::vector<std::pair<Int, int>> factorize(Int n) {
  if (n < 1) throw InvalidInput("factorize: n must be positive");
  std::vector<std::pair<Int, int>> out;
  for (Int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<std::vector<int>> integer_partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      rec(remaining - part, part);
      current.pop_back();
    }
  };
  if (n >= 0) rec(n, n);
  return out;
}

namespace {

Int ipow(Int base, int exp) {
  Int r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

}  // namespace

FiniteAbelianGroup FiniteAbelianGroup::from_invariant_factors(std::vector<Int> factors) {
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i] < 2) throw InvalidInput("invariant factors must be >= 2");
    if (i + 1 < factors.size() && factors[i + 1] % factors[i] != 0)
      throw InvalidInput("invariant factors must form a divisibility chain");
  }
  return FiniteAbelianGroup(std::move(factors));
}

FiniteAbelianGroup FiniteAbelianGroup::from_cyclic_factors(std::span<const Int> orders) {
  std::map<Int, std::vector<int>> by_prime;
  for (Int m : orders) {
    if (m < 1) throw InvalidInput("cyclic factor orders must be positive");
    for (auto [p, e] : factorize(m)) by_prime[p].push_back(e);
  }
  std::size_t r = 0;
  for (auto& [p, exps] : by_prime) {
    std::sort(exps.begin(), exps.end(), std::greater<>());
    r = std::max(r, exps.size());
  }
  // factors[0] is the largest invariant factor until the final reverse.
  std::vector<Int> factors(r, 1);
  for (const auto& [p, exps] : by_prime)
    for (std::size_t i = 0; i < exps.size(); ++i) factors[i] *= ipow(p, exps[i]);
  std::reverse(factors.begin(), factors.end());
  return FiniteAbelianGroup(std::move(factors));
}

FiniteAbelianGroup FiniteAbelianGroup::cyclic(Int n) {
  if (n < 1) throw InvalidInput("cyclic group order must be positive");
  if (n == 1) return FiniteAbelianGroup();
  return FiniteAbelianGroup({n});
}

Int FiniteAbelianGroup::order() const {
  Int o = 1;
  for (Int d : factors_) o *= d;
  return o;
}

std::string FiniteAbelianGroup::to_string() const {
  if (factors_.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) s += "+";
    s += "Z" + std::to_string(factors_[i]);
  }
  return s;
}

GroupElement identity_element(const FiniteAbelianGroup& group) {
  return GroupElement{std::vector<Int>(group.rank(), 0)};
}

bool is_valid_element(const FiniteAbelianGroup& group, const GroupElement& x) {
  const auto& d = group.invariant_factors();
  if (x.coords.size() != d.size()) return false;
  for (std::size_t i = 0; i < d.size(); ++i)
    if (x.coords[i] < 0 || x.coords[i] >= d[i]) return false;
  return true;
}

namespace {

void check_shape(const FiniteAbelianGroup& group, const GroupElement& x) {
  if (x.coords.size() != group.rank())
    throw InvalidInput("group element length does not match the number of invariant factors");
}

Int mod(Int a, Int m) {
  Int r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

GroupElement add(const FiniteAbelianGroup& group, const GroupElement& x, const GroupElement& y) {
  check_shape(group, x);
  check_shape(group, y);
  const auto& d = group.invariant_factors();
  GroupElement out{std::vector<Int>(d.size())};
  for (std::size_t i = 0; i < d.size(); ++i) out.coords[i] = mod(x.coords[i] + y.coords[i], d[i]);
  return out;
}

GroupElement negate(const FiniteAbelianGroup& group, const GroupElement& x) {
  return scale(group, x, -1);
}

GroupElement scale(const FiniteAbelianGroup& group, const GroupElement& x, Int k) {
  check_shape(group, x);
  const auto& d = group.invariant_factors();
  GroupElement out{std::vector<Int>(d.size())};
  for (std::size_t i = 0; i < d.size(); ++i) out.coords[i] = mod(mod(k, d[i]) * x.coords[i], d[i]);
  return out;
}

Int element_order(const FiniteAbelianGroup& group, const GroupElement& x) {
  check_shape(group, x);
  const auto& d = group.invariant_factors();
  Int t = 1;
  for (std::size_t i = 0; i < d.size(); ++i) t = std::lcm(t, d[i] / std::gcd(d[i], mod(x.coords[i], d[i])));
  return t;
}

std::vector<GroupElement> all_elements(const FiniteAbelianGroup& group) {
  const auto& d = group.invariant_factors();
  std::vector<GroupElement> out;
  out.reserve(static_cast<std::size_t>(group.order()));
  GroupElement x = identity_element(group);
  while (true) {
    out.push_back(x);
    std::size_t i = d.size();
    while (i > 0) {
      --i;
      if (++x.coords[i] < d[i]) break;
      x.coords[i] = 0;
      if (i == 0) return out;
    }
    if (d.empty()) return out;
  }
}

std::vector<GroupElement> generated_subgroup(const FiniteAbelianGroup& group,
                                             std::span<const GroupElement> gens) {
  std::set<GroupElement> seen{identity_element(group)};
  std::vector<GroupElement> frontier{identity_element(group)};
  while (!frontier.empty()) {
    std::vector<GroupElement> next;
    for (const auto& x : frontier)
      for (const auto& g : gens) {
        auto y = add(group, x, g);
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

std::vector<FiniteAbelianGroup> abelian_groups_of_order(Int n) {
  if (n < 1) throw InvalidInput("group order must be positive");
  const auto primes = factorize(n);
  std::vector<FiniteAbelianGroup> out;
  std::vector<Int> cyclic;
  std::function<void(std::size_t)> rec = [&](std::size_t idx) {
    if (idx == primes.size()) {
      out.push_back(FiniteAbelianGroup::from_cyclic_factors(cyclic));
      return;
    }
    const auto [p, a] = primes[idx];
    for (const auto& part : integer_partitions(a)) {
      const auto mark = cyclic.size();
      for (int e : part) cyclic.push_back(ipow(p, e));
      rec(idx + 1);
      cyclic.resize(mark);
    }
  };
  rec(0);
  return out;
}

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace surfsym
