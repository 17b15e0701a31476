#pragma once

// Independent reference computations used only by the tests. They share no
// code with the library beyond the basic value types.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

namespace ref {

using Int = std::int64_t;

inline std::vector<Int> divisors(Int n) {
  std::vector<Int> out;
  for (Int d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

inline Int gcd(Int a, Int b) {
  while (b) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline Int lcm(Int a, Int b) { return a / gcd(a, b) * b; }

/// Partition numbers p(0..n) by the pentagonal-free DP over part sizes.
inline std::vector<Int> partition_counts(int n) {
  std::vector<Int> p(static_cast<std::size_t>(n + 1), 0);
  p[0] = 1;
  for (int part = 1; part <= n; ++part)
    for (int s = part; s <= n; ++s) p[static_cast<std::size_t>(s)] += p[static_cast<std::size_t>(s - part)];
  return p;
}

/// Number of abelian groups of order n.
inline Int abelian_group_count(Int n) {
  const auto p = partition_counts(40);
  Int count = 1;
  for (Int q = 2; q <= n; ++q) {
    int e = 0;
    while (n % q == 0) n /= q, ++e;
    if (e) count *= p[static_cast<std::size_t>(e)];
  }
  return count;
}

struct Best {
  Int value = 0;
  std::vector<std::pair<Int, Int>> pairs;
  void offer(Int v, Int a, Int b) {
    if (v > value) value = v, pairs.clear();
    if (v == value) pairs.emplace_back(a, b);
  }
};

/// Even g: triple loop over d, m', n' odd with gcd(m', n') = 1 and
/// d m' n' - m' - n' = g - 1. Returns 2dm'n' and the pairs (dm', dn').
inline Best ch_minus_even_triples(Int g) {
  Best b;
  for (Int d = 1; d <= g + 1; d += 2)
    for (Int mp = 1; mp <= g + 1; mp += 2)
      for (Int np = 1; np <= g + 1; np += 2) {
        if (gcd(mp, np) != 1) continue;
        if (d * mp * np - mp - np == g - 1) b.offer(2 * d * mp * np, d * mp, d * np);
      }
  std::sort(b.pairs.begin(), b.pairs.end());
  return b;
}

/// Odd g: all odd k, n with kn - k + 1 = g.
inline Best ch_minus_odd_pairs(Int g) {
  Best b;
  for (Int k = 1; k <= g; k += 2)
    for (Int n = 1; n <= g; n += 2)
      if (k * n - k + 1 == g) b.offer(2 * k * n, k, n);
  std::sort(b.pairs.begin(), b.pairs.end());
  return b;
}

/// Perfect matching of values into pairs with a + b = 0 mod q, by backtracking.
inline bool pairable_mod(std::vector<Int> xs, Int q) {
  if (xs.empty()) return true;
  if (xs.size() % 2) return false;
  const Int first = xs.back();
  xs.pop_back();
  for (std::size_t i = 0; i < xs.size(); ++i)
    if ((first + xs[i]) % q == 0) {
      auto rest = xs;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
      if (pairable_mod(rest, q)) return true;
    }
  return false;
}

}  // namespace ref
