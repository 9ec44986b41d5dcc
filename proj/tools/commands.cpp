#include "commands.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "document.hpp"
#include "ooc/construct.hpp"
#include "ooc/errors.hpp"
#include "ooc/search.hpp"

namespace ooc::cli {

using nlohmann::json;

json report_json(const VerificationReport& report) {
  json witnesses = json::array();
  for (const Witness& w : report.witnesses) {
    witnesses.push_back({{"first", w.first},
                         {"second", w.second},
                         {"row_i", w.row_i},
                         {"row_j", w.row_j},
                         {"difference", w.difference},
                         {"multiplicity", w.multiplicity}});
  }
  return {{"auto_ok", report.auto_ok},
          {"cross_ok", report.cross_ok},
          {"max_auto_multiplicity", report.max_auto_multiplicity},
          {"witnesses", std::move(witnesses)},
          {"dropped_witnesses", report.dropped_witnesses}};
}

json bound_json(const BoundReport& report) {
  json deps = json::array();
  for (const Dependency& d : report.dependencies) deps.push_back({{"name", d.name}, {"value", d.value}});
  return {{"value", report.value}, {"kind", to_string(report.kind)}, {"branch", report.branch}, {"dependencies", deps}};
}

namespace {

json composition_json(const CompositionCensus& c) {
  return {{"alpha", c.alpha}, {"alpha2", c.alpha2}, {"alpha3", c.alpha3}, {"alpha4", c.alpha4},
          {"alpha5", c.alpha5}, {"alpha6", c.alpha6}, {"beta", c.beta},     {"beta1", c.beta1},
          {"beta2", c.beta2},   {"gamma", c.gamma}};
}

json parity_json(const ParityCensus& c) {
  return {{"c_o", c.c_o}, {"c_e", c.c_e}, {"c_d", c.c_d}, {"n_oe", c.n_oe}, {"n_od", c.n_od}, {"n_e", c.n_e}, {"n_d", c.n_d}};
}

// Options shared by all subcommands; unset numeric options are nullopt.
struct Options {
  std::string target;
  std::optional<int> n, m, g, s, r, p, u;
  std::string id;
  std::string variant = "standard";
  std::string format = "json";
  std::string input = "-";
  std::string range;
  std::string strategy;
  int lambda_a = 2;
  std::uint64_t seed = 1;
  double budget_seconds = 60.0;
  std::uint64_t nodes = 1'000'000'000;
};

int need(const std::optional<int>& v, const char* flag, const std::string& what) {
  if (!v) throw ParameterError(std::string(flag) + " is required for " + what);
  return *v;
}

SearchConfig search_config(const Options& o) {
  SearchConfig c;
  c.time_budget_seconds = o.budget_seconds;
  c.node_budget = o.nodes;
  c.seed = o.seed;
  if (!o.strategy.empty()) c.strategy = strategy_from_string(o.strategy);
  return c;
}

void emit_document(const CodeDocument& doc, const std::string& format, std::ostream& out) {
  if (format == "text") {
    out << render_text(doc);
  } else if (format == "matrix") {
    out << render_matrix(doc);
  } else {
    out << render(doc);
  }
}

ConstructionResult build(const Options& o) {
  const std::string& f = o.target;
  if (f == "equi-2mod4") return equi_2mod4(need(o.m, "--m", f));
  if (f == "g-regular") return g_regular_4g(need(o.g, "--g", f));
  if (f == "power4") {
    const EquiVariant v = o.variant == "half-free" ? EquiVariant::half_free : EquiVariant::standard;
    return equi_power4(need(o.s, "--s", f), need(o.r, "--r", f), v);
  }
  if (f == "tight") return tight_derived(need(o.r, "--r", f), o.s.value_or(0), search_config(o));
  if (f == "prime") return prime_derived(need(o.p, "--p", f), o.s.value_or(0), search_config(o));
  if (f == "explicit") {
    if (o.id.empty()) throw ParameterError("--id is required for explicit");
    return explicit_code(o.id);
  }
  if (f == "2xm") return ooc_2xm(need(o.m, "--m", f));
  if (f == "3xm") return ooc_3xm(need(o.m, "--m", f));
  if (f == "compose") return compose_0mod3(need(o.n, "--n", f), need(o.m, "--m", f), search_config(o));
  throw ParameterError("unknown construction family: " + f);
}

int cmd_construct(const Options& o, std::ostream& out, std::ostream& err) {
  try {
    const ConstructionResult result = build(o);
    emit_document(make_document(result, "construct " + o.target), o.format, out);
    return kExitOk;
  } catch (const VerificationFailure& e) {
    err << "verification failure: " << e.what() << '\n' << report_json(e.report()).dump(2) << '\n';
    return kExitInternalFailure;
  }
}

std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::ifstream file(path);
  if (!file) throw ParameterError("cannot open " + path);
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

int cmd_verify(const Options& o, std::istream& in, std::ostream& out) {
  const CodeDocument doc = parse(read_input(o.input, in));
  const VerificationReport report = verify_code(doc.code);
  json j = {{"report", report_json(report)}};
  const CodeParams& p = doc.code.params;
  if (p.k == 3) j["composition_census"] = composition_json(composition_census(doc.code));
  if (p.k == 3 && p.n == 1 && p.m % 4 == 0) j["parity_census"] = parity_json(parity_census(doc.code));
  if (o.format == "text") {
    out << "auto: " << (report.auto_ok ? "ok" : "FAIL") << "\ncross: " << (report.cross_ok ? "ok" : "FAIL")
        << "\nwitnesses: " << report.witnesses.size() + report.dropped_witnesses << '\n';
  } else {
    out << j.dump(2) << '\n';
  }
  return report.ok() ? kExitOk : kExitVerifyFailed;
}

int cmd_bound(const Options& o, std::ostream& out) {
  BoundReport r;
  const std::string& w = o.target;
  if (w == "phi") {
    r = phi_exact(need(o.n, "--n", w), need(o.m, "--m", w));
  } else if (w == "psi_e") {
    r = psi_e_exact(need(o.m, "--m", w));
  } else if (w == "cac") {
    r = cac_optimal_size(need(o.m, "--m", w));
  } else if (w == "me") {
    r = me_prime(o.p ? *o.p : need(o.m, "--m", w));
  } else {
    throw ParameterError("unknown bound: " + w);
  }
  out << bound_json(r).dump(2) << '\n';
  return kExitOk;
}

int cmd_search(const Options& o, std::ostream& out) {
  SearchConfig config = search_config(o);
  const std::string& k = o.target;
  SearchOutcome outcome;
  if (k == "optimal") {
    outcome = optimal_search(need(o.n, "--n", k), need(o.m, "--m", k), o.lambda_a, config);
  } else if (k == "equi") {
    outcome = equi_search(need(o.m, "--m", k), o.lambda_a, config);
  } else if (k == "tight") {
    outcome = tight_search(need(o.m, "--m", k), config);
  } else if (k == "gdd") {
    if (o.strategy.empty()) config.strategy = Strategy::exact_cover;
    outcome = gdd_search(need(o.u, "--u", k), need(o.m, "--m", k), config);
  } else {
    throw ParameterError("unknown search: " + k);
  }
  json j = {{"search", k},
            {"best_size", outcome.best_size},
            {"success", outcome.success},
            {"proven_optimal", outcome.proven_optimal},
            {"nodes", outcome.nodes},
            {"elapsed_ms", static_cast<std::int64_t>(outcome.elapsed_seconds * 1000.0)},
            {"strategy", to_string(config.strategy)}};
  if (std::holds_alternative<Code>(outcome.best)) {
    CodeDocument doc;
    doc.code = outcome.code();
    doc.metadata.branch = "search/" + k;
    doc.metadata.claimed_size = outcome.best_size;
    doc.metadata.verified = verify_code(doc.code).ok();
    doc.metadata.provenance = "search " + k;
    j["witness"] = to_json(doc);
  } else {
    j["witness"] = gdd_to_json(outcome.gdd());
  }
  out << j.dump(2) << '\n';
  return kExitOk;
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const int v = std::stoi(text);
      return {v, v};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw ParameterError("range must look like A..B: " + text);
  }
}

std::optional<ConstructionResult> catalog_entry(int n, int m, const SearchConfig& config) {
  if (n == 1 && m == 48) return explicit_code("1d48");
  if (n == 2 && m >= 4 && m % 4 == 0) return ooc_2xm(m);
  if (n == 3 && ooc_3xm_supported(m)) return ooc_3xm(m);
  if (n >= 12 && n % 3 == 0 && m != 4 && ooc_3xm_supported(m)) return compose_0mod3(n, m, config);
  return std::nullopt;
}

int cmd_catalog(const Options& o, std::ostream& out) {
  const int n = need(o.n, "--n", "catalog");
  if (o.range.empty()) throw ParameterError("--m is required for catalog");
  const auto [lo, hi] = parse_range(o.range);
  if (lo < 1 || hi < lo) throw ParameterError("empty or invalid m range");
  json rows = json::array();
  for (int m = lo; m <= hi; ++m) {
    const std::optional<ConstructionResult> built = catalog_entry(n, m, search_config(o));
    if (!built) continue;
    const BoundReport bound = phi_exact(n, m);
    rows.push_back({{"n", n},
                    {"m", m},
                    {"size", built->code.size()},
                    {"bound", bound.value},
                    {"kind", to_string(bound.kind)},
                    {"verified", built->verified},
                    {"branch", built->branch}});
  }
  if (o.format == "text") {
    out << std::left << std::setw(5) << "n" << std::setw(7) << "m" << std::setw(8) << "size" << std::setw(8) << "bound"
        << std::setw(13) << "kind" << std::setw(10) << "verified" << "branch\n";
    for (const json& r : rows) {
      out << std::setw(5) << r["n"].get<int>() << std::setw(7) << r["m"].get<int>() << std::setw(8)
          << r["size"].get<std::int64_t>() << std::setw(8) << r["bound"].get<std::int64_t>() << std::setw(13)
          << r["kind"].get<std::string>() << std::setw(10) << (r["verified"].get<bool>() ? "yes" : "no")
          << r["branch"].get<std::string>() << '\n';
    }
  } else {
    out << rows.dump(2) << '\n';
  }
  return kExitOk;
}

void add_search_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--seed", o.seed, "Seed for randomized strategies");
  cmd->add_option("--budget-seconds", o.budget_seconds, "Wall-clock budget per search");
  cmd->add_option("--nodes", o.nodes, "Node budget per search");
  cmd->add_option("--strategy", o.strategy, "exhaustive | branch_and_bound | exact_cover | hill_climb_restart");
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Optical orthogonal codes: construct, verify, bound, search, catalog"};
  app.require_subcommand(1);
  const std::vector<std::string> formats{"json", "text", "matrix"};

  auto* construct = app.add_subcommand("construct", "Build a code from a construction family");
  construct->add_option("family", o.target, "equi-2mod4 | g-regular | power4 | tight | prime | explicit | 2xm | 3xm | compose")
      ->required();
  construct->add_option("--m", o.m);
  construct->add_option("--n", o.n);
  construct->add_option("--g", o.g);
  construct->add_option("--s", o.s);
  construct->add_option("--r", o.r);
  construct->add_option("--p", o.p);
  construct->add_option("--id", o.id, "Explicit code id");
  construct->add_option("--variant", o.variant)->check(CLI::IsMember({"standard", "half-free"}));
  construct->add_option("--format", o.format)->check(CLI::IsMember(formats));
  add_search_flags(construct, o);

  auto* verify = app.add_subcommand("verify", "Check a code document against the correlation bounds");
  verify->add_option("--input", o.input, "Document path, '-' for stdin");
  verify->add_option("--format", o.format)->check(CLI::IsMember({"json", "text"}));

  auto* bound = app.add_subcommand("bound", "Closed-form size or upper bound");
  bound->add_option("which", o.target, "phi | psi_e | cac | me")->required();
  bound->add_option("--n", o.n);
  bound->add_option("--m", o.m);
  bound->add_option("--p", o.p);

  auto* search = app.add_subcommand("search", "Run a search oracle");
  search->add_option("kind", o.target, "optimal | equi | tight | gdd")->required();
  search->add_option("--n", o.n);
  search->add_option("--m", o.m);
  search->add_option("--u", o.u);
  search->add_option("--lambda-a", o.lambda_a);
  add_search_flags(search, o);

  auto* catalog = app.add_subcommand("catalog", "Construct and tabulate a parameter range");
  catalog->add_option("--n", o.n)->required();
  catalog->add_option("--m", o.range, "Single value or A..B")->required();
  catalog->add_option("--format", o.format)->check(CLI::IsMember({"json", "text"}));
  add_search_flags(catalog, o);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (construct->parsed()) return cmd_construct(o, out, err);
    if (verify->parsed()) return cmd_verify(o, in, out);
    if (bound->parsed()) return cmd_bound(o, out);
    if (search->parsed()) return cmd_search(o, out);
    if (catalog->parsed()) return cmd_catalog(o, out);
  } catch (const VerificationFailure& e) {
    err << "verification failure: " << e.what() << '\n' << report_json(e.report()).dump(2) << '\n';
    return kExitInternalFailure;
  } catch (const BudgetExhausted& e) {
    err << "budget exhausted: " << e.what() << '\n';
    return kExitResource;
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "unsupported: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace ooc::cli
