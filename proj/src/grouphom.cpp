#include "surfsym/grouphom.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>

#include "surfsym/errors.hpp"

namespace surfsym {

bool fis_to_cyclic_exists(const SourcePresentation& src, Int n) {
  if (n < 1) throw InvalidInput("target order must be positive");
  const auto* fp = std::get_if<FreeProduct>(&src);
  if (!fp) throw InvalidInput("closed form applies to free products only");
  validate(src);
  Int l = 1;
  for (Int m : fp->cyclic_orders) l = std::lcm(l, m);
  if (!fp->mixed_factor && fp->free_rank == 0) return n == l;
  if (fp->mixed_factor) l = std::lcm(l, *fp->mixed_factor);
  return n % l == 0;
}

namespace {

// Elements of a small abelian group as indices with a precomputed addition table.
class IndexedGroup {
 public:
  explicit IndexedGroup(const FiniteAbelianGroup& g) : group_(g), elems_(all_elements(g)) {
    const std::size_t n = elems_.size();
    std::map<GroupElement, int> index;
    for (std::size_t i = 0; i < n; ++i) index[elems_[i]] = static_cast<int>(i);
    sum_.resize(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        const int s = index.at(add(g, elems_[i], elems_[j]));
        sum_[i * n + j] = sum_[j * n + i] = s;
      }
    neg_.resize(n);
    order_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      neg_[i] = index.at(negate(g, elems_[i]));
      order_[i] = element_order(g, elems_[i]);
    }
    for (const auto& [p, e] : factorize(static_cast<Int>(n))) {
      (void)e;
      std::vector<int> multiples;
      for (std::size_t i = 0; i < n; ++i) multiples.push_back(times(static_cast<int>(i), p));
      p_multiples_.emplace_back(p, std::move(multiples));
    }
  }

  std::size_t size() const { return elems_.size(); }
  int sum(int a, int b) const { return sum_[static_cast<std::size_t>(a) * elems_.size() + static_cast<std::size_t>(b)]; }
  int neg(int a) const { return neg_[static_cast<std::size_t>(a)]; }
  Int order(int a) const { return order_[static_cast<std::size_t>(a)]; }
  const GroupElement& element(int a) const { return elems_[static_cast<std::size_t>(a)]; }

  int times(int a, Int k) const {
    int acc = 0;
    for (Int i = 0; i < k; ++i) acc = sum(acc, a);
    return acc;
  }

  // Size of the subgroup generated by gens.
  std::size_t closure_size(const std::vector<int>& gens) const {
    std::vector<char> in(size(), 0);
    std::vector<int> queue{0};
    in[0] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head)
      for (int g : gens) {
        const int s = sum(queue[head], g);
        if (!in[static_cast<std::size_t>(s)]) {
          in[static_cast<std::size_t>(s)] = 1;
          queue.push_back(s);
        }
      }
    return queue.size();
  }

  // Minimal number of generators of A / <gens>: max over p of the F_p-rank of A / (<gens> + pA).
  int quotient_rank(const std::vector<int>& gens) const {
    int best = 0;
    for (const auto& [p, multiples] : p_multiples_) {
      std::vector<int> all = gens;
      all.insert(all.end(), multiples.begin(), multiples.end());
      std::size_t index = size() / closure_size(all);
      int rank = 0;
      while (index > 1) index /= static_cast<std::size_t>(p), ++rank;
      best = std::max(best, rank);
    }
    return best;
  }

 private:
  FiniteAbelianGroup group_;
  std::vector<GroupElement> elems_;
  std::vector<int> sum_, neg_;
  std::vector<Int> order_;
  std::vector<std::pair<Int, std::vector<int>>> p_multiples_;
};

// Completes torsion images with free images generating the rest of A, if possible.
std::optional<std::vector<int>> complete_generation(const IndexedGroup& g, const std::vector<int>& torsion,
                                                    Int free_count) {
  if (g.quotient_rank(torsion) > free_count) return std::nullopt;
  std::vector<int> gens = torsion;
  std::vector<int> free;
  Int remaining = free_count;
  while (g.closure_size(gens) != g.size()) {
    bool extended = false;
    for (int x = 1; x < static_cast<int>(g.size()) && !extended; ++x) {
      gens.push_back(x);
      extended = g.quotient_rank(gens) <= remaining - 1;
      if (!extended) gens.pop_back();
    }
    if (!extended) return std::nullopt;
    free.push_back(gens.back());
    --remaining;
  }
  while (static_cast<Int>(free.size()) < free_count) free.push_back(0);
  return free;
}

const IndexedGroup& indexed(const FiniteAbelianGroup& target) {
  thread_local std::map<FiniteAbelianGroup, std::unique_ptr<IndexedGroup>> cache;
  auto& slot = cache[target];
  if (!slot) slot = std::make_unique<IndexedGroup>(target);
  return *slot;
}

}  // namespace

std::optional<HomWitness> fis_exists_bruteforce(const SourcePresentation& src, const FiniteAbelianGroup& target,
                                                const SearchLimits& limits) {
  validate(src);
  const auto orders = torsion_orders(src);
  if (target.order() > limits.max_group_order) throw SearchTooLarge("target group exceeds search bound");
  if (orders.size() > limits.max_torsion_generators)
    throw SearchTooLarge("too many torsion generators for exhaustive search");
  const bool relation = std::holds_alternative<OrbifoldGroup>(src);
  const Int free_count = free_generator_count(src);

  for (Int m : orders)
    if (target.exponent() % m != 0) return std::nullopt;

  const IndexedGroup& g = indexed(target);
  const std::size_t r = orders.size();

  // Search positions sorted by order so equal orders are adjacent; within a run
  // images are chosen non-decreasing.
  std::vector<std::size_t> perm(r);
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(), [&](auto a, auto b) { return orders[a] < orders[b]; });

  std::map<Int, std::vector<int>> candidates;
  for (Int m : orders) {
    if (candidates.count(m)) continue;
    auto& c = candidates[m];
    for (int x = 0; x < static_cast<int>(g.size()); ++x)
      if (g.order(x) == m) c.push_back(x);
    if (c.empty()) return std::nullopt;
  }

  std::vector<int> chosen(r, 0);
  std::optional<HomWitness> found;

  auto accept = [&]() {
    auto free = complete_generation(g, chosen, free_count);
    if (!free) return false;
    HomWitness w;
    w.images.resize(r);
    for (std::size_t i = 0; i < r; ++i) w.images[perm[i]] = g.element(chosen[i]);
    for (int x : *free) w.images.push_back(g.element(x));
    found = std::move(w);
    return true;
  };

  auto run_floor = [&](std::size_t pos) {
    return pos > 0 && orders[perm[pos]] == orders[perm[pos - 1]] ? chosen[pos - 1] : -1;
  };

  // Returns true once a witness is found.
  auto dfs = [&](auto&& self, std::size_t pos, int running) -> bool {
    if (pos == r) return (!relation || running == 0) && accept();
    if (relation && pos + 1 == r) {
      const int last = g.neg(running);
      if (g.order(last) != orders[perm[pos]] || last < run_floor(pos)) return false;
      chosen[pos] = last;
      return accept();
    }
    const int floor = run_floor(pos);
    for (int x : candidates.at(orders[perm[pos]])) {
      if (x < floor) continue;
      chosen[pos] = x;
      if (self(self, pos + 1, g.sum(running, x))) return true;
    }
    return false;
  };
  dfs(dfs, 0, 0);
  return found;
}

bool validate_witness(const SourcePresentation& src, const FiniteAbelianGroup& target, const HomWitness& witness) {
  const auto orders = torsion_orders(src);
  const auto free_count = static_cast<std::size_t>(free_generator_count(src));
  if (witness.images.size() != orders.size() + free_count) return false;
  for (const auto& x : witness.images)
    if (!is_valid_element(target, x)) return false;
  GroupElement total = identity_element(target);
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (element_order(target, witness.images[i]) != orders[i]) return false;
    total = add(target, total, witness.images[i]);
  }
  if (std::holds_alternative<OrbifoldGroup>(src) && total != identity_element(target)) return false;
  return static_cast<Int>(generated_subgroup(target, witness.images).size()) == target.order();
}

std::optional<Int> realize_handlebody(const OrbClass& c, const FiniteAbelianGroup& target) {
  const Rational genus = 1 - class_euler_char(c) * target.order();
  if (genus.denominator() != 1 || genus.numerator() <= 1) return std::nullopt;
  const auto src = class_fundamental_group(c);
  const bool exists = target.is_cyclic() ? fis_to_cyclic_exists(src, target.order())
                                         : fis_exists_bruteforce(src, target).has_value();
  if (!exists) return std::nullopt;
  return genus.numerator();
}

bool pairing_criterion(const FiniteAbelianGroup& group, std::span<const GroupElement> images,
                       std::span<const Int> orders) {
  if (images.size() != orders.size()) throw InvalidInput("pairing: images and orders differ in length");
  for (Int m : orders)
    if (m <= 2) throw InvalidInput("pairing: orders must exceed 2");
  std::map<GroupElement, int> count;
  for (const auto& x : images) {
    if (!is_valid_element(group, x)) throw InvalidInput("pairing: image not in group");
    ++count[x];
  }
  for (const auto& [v, k] : count) {
    const auto inv = negate(group, v);
    if (inv == v) {
      if (k % 2 != 0) return false;
    } else {
      auto it = count.find(inv);
      if (it == count.end() || it->second != k) return false;
    }
  }
  return true;
}

}  // namespace surfsym
