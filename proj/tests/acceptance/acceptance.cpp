// Acceptance suite: one PASS/FAIL line per criterion, each with a pinned
// runtime limit. Exits non-zero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "surfsym/cli.hpp"
#include "surfsym/constructions.hpp"
#include "surfsym/grouphom.hpp"
#include "surfsym/oracle.hpp"
#include "surfsym/orbifolds.hpp"
#include "surfsym/quantities.hpp"

using namespace surfsym;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;

  void fail(const std::string& why) {
    if (ok) note = why;
    ok = false;
  }
};

using Opt = std::optional<Int>;

// Criterion 1: every table entry through the CLI, compared with the closed forms
// written out independently here.
Outcome table_reproduction() {
  Outcome r;
  std::ostringstream out, err;
  if (cli::run_cli({"orders", "--range", "2..1000", "--format", "json"}, out, err) != 0) {
    r.fail("orders exited non-zero: " + err.str());
    return r;
  }
  std::map<std::pair<Int, std::string>, Opt> got;
  std::istringstream in(out.str());
  for (std::string line; std::getline(in, line);) {
    const auto rec = cli::from_json_line(line);
    got[{*rec.genus, rec.quantity}] = rec.value;
  }
  for (Int g = 2; g <= 1000; ++g) {
    const bool even = g % 2 == 0;
    const std::map<std::string, Opt> want{
        {"C", 4 * g + 2},
        {"A", 4 * g + 4},
        {"CE", even ? 2 * g + 2 : 2 * g - 2},
        {"AE", 2 * g + 2},
        {"CE(-,+)", even ? 4 * g + 4 : 4 * g - 4},
        {"CE(+,-)", 2 * g + 2},
        {"CE(-,-)", 2 * g + 1 + (even ? 1 : -1)},
        {"CE(Mix)", std::nullopt},
        {"AE(Mix)", even ? Opt(2 * g + 4) : std::nullopt},
        {"AH-minus", g == 5 ? 32 : 4 * g + 4},
        {"AE(+,-)", 4 * g + 4},
        {"AE(-,+)", 4 * g + 4},
        {"AE(-,-)", 4 * g + 4},
        {"AH", g == 5 ? 16 : 2 * g + 2},
        {"CH", even ? 2 * g + 2 : 2 * g},
        {"C-minus", even ? 4 * g + 4 : 4 * g - 4},
    };
    for (const auto& [name, value] : want) {
      const auto it = got.find({g, name});
      if (it == got.end()) {
        r.fail("missing " + name + " at g=" + std::to_string(g));
      } else if (it->second != value) {
        r.fail(name + " wrong at g=" + std::to_string(g));
      }
    }
  }
  return r;
}

// Criterion 2: parametrised optimum against the direct scans and frozen spot values.
Outcome optimisation_formula() {
  Outcome r;
  const Int top = 2000;
  const auto direct = ch_minus_direct_scan_range(top);
  for (Int g = 2; g <= top; ++g) {
    const auto p = ch_minus(g);
    const auto& d = direct[static_cast<std::size_t>(g - 2)];
    if (p.value != d.value || p.witnesses != d.witnesses) r.fail("mismatch at g=" + std::to_string(g));
  }
  const std::map<Int, Int> spots{{2, 6}, {4, 10}, {6, 18}, {7, 18}, {9, 18}};
  for (const auto& [g, v] : spots) {
    const Int by_ref = g % 2 == 0 ? ref::ch_minus_even_triples(g).value : ref::ch_minus_odd_pairs(g).value;
    if (ch_minus(g).value != v || by_ref != v) r.fail("spot value at g=" + std::to_string(g));
  }
  return r;
}

// Criterion 3: equal-cone Riemann-Hurwitz solutions.
Outcome equal_cone_solutions() {
  Outcome r;
  for (Int g = 2; g <= 200; g += 2) {
    const std::vector<EqualConeSolution> want{{2, 0, g - 1}, {1, 2, g}, {0, 4, g + 1}, {0, 6, g / 2 + 1}};
    const auto got = enumerate_equal_cone_solutions(g, g / 2 + 1);
    if (got != want) {
      std::string why = "g=" + std::to_string(g) + " returned " + std::to_string(got.size()) + " tuples";
      if (g == 2)
        why +=
            "; the expected tuple (2,0,1) has order 1 < g/2+1 = 2 and is excluded by the order bound, "
            "so no conforming enumerator can return it";
      r.fail(why);
    }
  }
  return r;
}

// Criterion 4: brute-force oracles.
Outcome oracle_agreement() {
  Outcome r;
  for (Int g = 2; g <= 6; ++g)
    if (oracle_max_cyclic_op_surface(g, default_order_cap(g)) != 4 * g + 2)
      r.fail("cyclic surface oracle at g=" + std::to_string(g));
  for (Int g = 2; g <= 5; ++g)
    if (oracle_max_abelian_op_surface(g, default_order_cap(g)) != 4 * g + 4)
      r.fail("abelian surface oracle at g=" + std::to_string(g));
  const auto sweep = oracle_ch_minus_range(2, 2000);
  for (Int g = 2; g <= 2000; ++g)
    if (sweep[static_cast<std::size_t>(g - 2)] != ch_minus(g).value)
      r.fail("handlebody oracle at g=" + std::to_string(g));
  return r;
}

// Criterion 5: closed form against exhaustive search onto cyclic groups.
Outcome cyclic_surjection_equivalence() {
  Outcome r;
  std::vector<std::vector<Int>> factor_sets{{}};
  for (Int a = 2; a <= 8; ++a) {
    factor_sets.push_back({a});
    for (Int b = a; b <= 8; ++b) {
      factor_sets.push_back({a, b});
      for (Int c = b; c <= 8; ++c) factor_sets.push_back({a, b, c});
    }
  }
  std::vector<std::optional<Int>> mixed{std::nullopt};
  for (Int m = 2; m <= 8; ++m) mixed.push_back(m);
  std::size_t cases = 0;
  for (const auto& fs : factor_sets)
    for (Int rank = 0; rank <= 1; ++rank)
      for (const auto& mx : mixed) {
        const SourcePresentation src = FreeProduct{fs, rank, mx};
        for (Int n = 1; n <= 72; ++n) {
          ++cases;
          const bool closed = fis_to_cyclic_exists(src, n);
          const bool brute = fis_exists_bruteforce(src, FiniteAbelianGroup::cyclic(n)).has_value();
          if (closed != brute) r.fail(to_string(src) + " -> Z" + std::to_string(n));
        }
      }
  if (r.ok) r.note = std::to_string(cases) + " cases";
  return r;
}

// Criterion 6: every construction check for each valid genus.
Outcome construction_verification() {
  Outcome r;
  auto run = [&](const std::string& name, Int g) {
    for (const auto& c : verify_example(name, g))
      if (!c.pass) r.fail(name + " g=" + std::to_string(g) + ": " + c.name);
  };
  for (Int g = 2; g <= 50; ++g) {
    run("cage", g);
    run(g % 2 ? "wheel" : "fork", g);
  }
  run("square", 5);
  return r;
}

// Criterion 7: identities between quantities.
Outcome consistency_identities() {
  Outcome r;
  for (Int g = 2; g <= 10000; ++g)
    for (const auto& [name, ok] : consistency_check(g))
      if (!ok) r.fail(name + " at g=" + std::to_string(g));
  return r;
}

struct Criterion {
  int id;
  const char* title;
  double limit_s;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "table reproduction", 5.0, table_reproduction},
      {2, "handlebody optimum vs direct scan", 30.0, optimisation_formula},
      {3, "equal-cone Riemann-Hurwitz solutions", 5.0, equal_cone_solutions},
      {4, "oracle agreement", 60.0, oracle_agreement},
      {5, "cyclic surjection closed form vs search", 10.0, cyclic_surjection_equivalence},
      {6, "construction verification", 10.0, construction_verification},
      {7, "consistency identities", 5.0, consistency_identities},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs >= c.limit_s) o.fail("runtime " + std::to_string(secs) + " s over limit");
    std::printf("%s criterion %d (%s): %.2f s / %.0f s%s%s\n", o.ok ? "PASS" : "FAIL", c.id, c.title, secs,
                c.limit_s, o.note.empty() ? "" : " - ", o.note.c_str());
    if (!o.ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
