#include <algorithm>
#include <cctype>
#include <charconv>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "surfsym/cli.hpp"
#include "surfsym/constructions.hpp"
#include "surfsym/errors.hpp"
#include "surfsym/oracle.hpp"
#include "surfsym/quantities.hpp"

namespace surfsym::cli {

namespace {

constexpr Int kMaxTableGenus = 1000000;

struct Options {
  std::optional<Int> genus;
  std::string range;
  std::string quantity;
  std::string example;
  std::string format = "table";
  std::optional<Int> cap;
  bool slow = false;
  bool force = false;
};

struct Outcome {
  std::vector<OutputRecord> records;
  ExitCode code = ExitCode::Ok;
};

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

Int parse_int(const std::string& s) {
  Int v = 0;
  const auto* end = s.data() + s.size();
  auto [p, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || p != end) throw InvalidInput("not an integer: '" + s + "'");
  return v;
}

// Genus list from --genus or --range A..B.
std::pair<Int, Int> genus_span(const Options& o) {
  if (o.genus && !o.range.empty()) throw InvalidInput("use either --genus or --range");
  Int lo, hi;
  if (o.genus) {
    lo = hi = *o.genus;
  } else if (!o.range.empty()) {
    const auto dots = o.range.find("..");
    if (dots == std::string::npos) throw InvalidInput("range must look like A..B");
    lo = parse_int(o.range.substr(0, dots));
    hi = parse_int(o.range.substr(dots + 2));
    if (hi < lo) throw InvalidInput("range end precedes its start");
  } else {
    throw InvalidInput("--genus or --range is required");
  }
  require_genus(lo);
  return {lo, hi};
}

std::vector<std::string> witness_strings(const std::vector<ChMinusWitness>& ws) {
  std::vector<std::string> out;
  for (const auto& w : ws) out.push_back(to_string(w));
  return out;
}

Outcome cmd_orders(const Options& o) {
  auto [lo, hi] = genus_span(o);
  if (hi > kMaxTableGenus) throw InvalidInput("genus range limited to 2..1000000");
  std::vector<Quantity> qs = all_quantities();
  if (!o.quantity.empty()) {
    auto q = Quantity::parse(o.quantity);
    if (!q) throw InvalidInput("unknown quantity: " + o.quantity);
    qs = {*q};
  }
  Outcome out;
  for (Int g = lo; g <= hi; ++g)
    for (const auto& q : qs) {
      auto r = evaluate(q, g);
      out.records.push_back({g, q.name(), r.value, witness_strings(r.witnesses), "formula", std::nullopt, ""});
    }
  return out;
}

Outcome cmd_witnesses(const Options& o) {
  const std::string q = lower(o.quantity.empty() ? "ch-minus" : o.quantity);
  std::string name;
  if (q == "ch-minus") name = "CH-minus";
  else if (q == "full-cyclic-handlebody" || q == "ch-full") name = "CH-full";
  else throw InvalidInput("witnesses supports ch-minus and full-cyclic-handlebody");
  auto [lo, hi] = genus_span(o);
  if (hi > kMaxTableGenus) throw InvalidInput("genus range limited to 2..1000000");
  Outcome out;
  for (Int g = lo; g <= hi; ++g) {
    const auto r = ch_minus(g);
    out.records.push_back({g, name, r.value, witness_strings(r.witnesses), "formula", std::nullopt,
                           std::to_string(r.witnesses.size()) + " optimal pair(s)"});
  }
  return out;
}

Outcome cmd_verify(const Options& o) {
  const std::string ex = lower(o.example);
  if (ex.empty()) throw InvalidInput("--example is required");
  std::vector<Int> gs;
  if (ex == "square") {
    gs = {5};
  } else {
    auto [lo, hi] = genus_span(o);
    if (hi > 1000) throw InvalidInput("verify limited to genus <= 1000");
    // Over a range, genera of the wrong parity for wheel or fork are skipped.
    for (Int g = lo; g <= hi; ++g) {
      const bool skip = lo != hi && ((ex == "wheel" && g % 2 == 0) || (ex == "fork" && g % 2 == 1));
      if (!skip) gs.push_back(g);
    }
  }
  Outcome out;
  for (Int g : gs)
    for (const auto& c : verify_example(ex, g)) {
      out.records.push_back({g, ex, std::nullopt, {}, "construction", c.pass, c.name});
      if (!c.pass) out.code = ExitCode::VerificationFailed;
    }
  return out;
}

Outcome cmd_oracle(const Options& o) {
  const std::string q = lower(o.quantity);
  auto [lo, hi] = genus_span(o);
  Int bound;
  if (q == "c-surface") bound = o.slow ? kCyclicSurfaceOracleMax : 6;
  else if (q == "a-surface") bound = o.slow ? kAbelianSurfaceOracleMax : 5;
  else if (q == "ch-minus") bound = kChMinusOracleMax;
  else throw InvalidInput("oracle quantities: c-surface, a-surface, ch-minus");
  if (hi > bound && !o.force)
    throw InvalidInput("genus " + std::to_string(hi) + " exceeds the " + q + " oracle bound " + std::to_string(bound) +
                       " (use --slow or --force)");
  if (o.cap && q == "ch-minus") throw InvalidInput("--cap applies to the surface oracles only");

  Outcome out;
  auto push = [&](Int g, Int expected, Int observed) {
    const bool pass = expected == observed;
    out.records.push_back({g, q, observed, {}, "oracle", pass, "expected " + std::to_string(expected)});
    if (!pass) out.code = ExitCode::VerificationFailed;
  };
  if (q == "ch-minus") {
    const auto got = oracle_ch_minus_range(lo, hi);
    for (Int g = lo; g <= hi; ++g) push(g, ch_minus(g).value, got[static_cast<std::size_t>(g - lo)]);
    return out;
  }
  for (Int g = lo; g <= hi; ++g) {
    const Int cap = o.cap ? *o.cap : default_order_cap(g);
    if (q == "c-surface")
      push(g, classical_order(QuantityTag::C, g), oracle_max_cyclic_op_surface(g, cap));
    else
      push(g, classical_order(QuantityTag::A, g), oracle_max_abelian_op_surface(g, cap));
  }
  return out;
}

Outcome cmd_consistency(const Options& o) {
  auto [lo, hi] = genus_span(o);
  if (hi > kMaxTableGenus) throw InvalidInput("genus range limited to 2..1000000");
  Outcome out;
  for (Int g = lo; g <= hi; ++g)
    for (const auto& [name, holds] : consistency_check(g)) {
      out.records.push_back({g, "identity", std::nullopt, {}, "formula", holds, name});
      if (!holds) out.code = ExitCode::VerificationFailed;
    }
  return out;
}

void emit_table(const std::vector<OutputRecord>& rs, std::ostream& out) {
  out << std::left << std::setw(8) << "genus" << std::setw(14) << "quantity" << std::setw(10) << "value"
      << std::setw(7) << "pass" << "detail\n";
  for (const auto& r : rs) {
    std::string detail = r.detail;
    for (const auto& w : r.witnesses) detail += (detail.empty() ? "" : " ") + w;
    out << std::left << std::setw(8) << (r.genus ? std::to_string(*r.genus) : "-") << std::setw(14) << r.quantity
        << std::setw(10) << (r.value ? std::to_string(*r.value) : "---") << std::setw(7)
        << (r.pass ? (*r.pass ? "PASS" : "FAIL") : "") << detail << '\n';
  }
}

void emit(const std::vector<OutputRecord>& rs, const std::string& format, std::ostream& out) {
  if (format == "json") {
    for (const auto& r : rs) out << to_json_line(r) << '\n';
  } else if (format == "csv") {
    out << csv_header() << "\r\n";
    for (const auto& r : rs) out << to_csv_row(r) << "\r\n";
  } else {
    emit_table(rs, out);
  }
}

void add_genus_flags(CLI::App* sub, Options& o) {
  sub->add_option("--genus", o.genus, "Surface genus g > 1");
  sub->add_option("--range", o.range, "Genus range A..B");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Maximum orders of cyclic and abelian actions on surfaces and handlebodies", "surfsym"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"table", "json", "csv"}))
      ->capture_default_str();

  auto* orders = app.add_subcommand("orders", "Closed-form maximum orders");
  add_genus_flags(orders, o);
  orders->add_option("--quantity", o.quantity, "Single quantity, e.g. CH-minus or CE(-,+)");

  auto* witnesses = app.add_subcommand("witnesses", "Optimal (m,n) or (k,n) pairs for the handlebody maximum");
  add_genus_flags(witnesses, o);
  witnesses->add_option("--quantity", o.quantity, "ch-minus or full-cyclic-handlebody");

  auto* verify = app.add_subcommand("verify", "Check an explicit construction");
  add_genus_flags(verify, o);
  verify->add_option("--example", o.example, "cage, wheel, fork or square")->required();

  auto* oracle = app.add_subcommand("oracle", "Brute-force oracle against the closed forms");
  add_genus_flags(oracle, o);
  oracle->add_option("--quantity", o.quantity, "c-surface, a-surface or ch-minus")->required();
  oracle->add_option("--cap", o.cap, "Largest order searched (default 4g+12)");
  oracle->add_flag("--slow", o.slow, "Allow the larger surface oracle bounds");
  oracle->add_flag("--force", o.force, "Run beyond the default bounds");

  auto* consistency = app.add_subcommand("consistency", "Identities between quantities");
  add_genus_flags(consistency, o);

  for (auto* sub : {orders, witnesses, verify, oracle, consistency})
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"table", "json", "csv"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return static_cast<int>(ExitCode::InvalidInput);
  }

  try {
    Outcome result;
    if (orders->parsed()) result = cmd_orders(o);
    else if (witnesses->parsed()) result = cmd_witnesses(o);
    else if (verify->parsed()) result = cmd_verify(o);
    else if (oracle->parsed()) result = cmd_oracle(o);
    else result = cmd_consistency(o);
    emit(result.records, o.format, out);
    return static_cast<int>(result.code);
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
  } catch (const SearchTooLarge& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return static_cast<int>(ExitCode::InvalidInput);
}

}  // namespace surfsym::cli
