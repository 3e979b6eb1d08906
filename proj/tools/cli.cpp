#include "cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include "paleytype/census.hpp"
#include "paleytype/cycles.hpp"
#include "paleytype/error.hpp"
#include "paleytype/graph.hpp"
#include "paleytype/graph_io.hpp"
#include "paleytype/report.hpp"
#include "paleytype/spectra.hpp"
#include "paleytype/symmetry.hpp"
#include "paleytype/verify.hpp"

namespace paleytype::cli {

using nlohmann::json;

namespace {

struct Config {
  std::string primes;
  std::string format;
  double tolerance = 1e-6;
  std::uint64_t budget = 10'000'000;
  std::string output;
  bool no_witness = false;
  int max_aut_v = 250;
  int max_conn_v = 300;
  int max_cycle_v = 250;
  int max_eig_v = 1200;
  int length = 0;
  bool numeric = false;
};

struct Outcome {
  int code = kOk;
  std::string body;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

PrimeSet parse_primes(const std::string& text) {
  std::vector<std::int64_t> values;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string_view token(text.data() + pos, comma - pos);
    std::int64_t v = 0;
    const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (token.empty() || ec != std::errc{} || end != token.data() + token.size())
      throw UsageError("--primes: '" + std::string(token) + "' is not an integer");
    values.push_back(v);
    pos = comma + 1;
  }
  return validate_primes(values);
}

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

std::string dump(json j, std::chrono::steady_clock::time_point t0) {
  j["timing"] = {{"elapsed_ms", elapsed_ms(t0)}};
  return j.dump(2) + "\n";
}

std::string join(const std::vector<std::int64_t>& values, const char* sep) {
  std::ostringstream os;
  for (std::size_t i = 0; i < values.size(); ++i) os << (i ? sep : "") << values[i];
  return os.str();
}

Outcome cmd_construct(const Config& cfg, const PrimeSet& ps) {
  const auto t0 = std::chrono::steady_clock::now();
  const ResidueTable table(ps);
  const Graph g = build_paley_type(table);
  const std::vector<std::int64_t> qr(table.residues().begin(), table.residues().end());
  const int degree = g.order() ? g.degree(0) : 0;
  if (cfg.format == "edgelist") return {kOk, to_edge_list(g)};
  if (cfg.format == "graph6") return {kOk, to_graph6(g) + "\n"};
  if (cfg.format == "dot") return {kOk, to_dot(g)};
  if (cfg.format == "json") {
    json j = report_header(ps);
    j["graph"] = {{"label", g.label()}, {"V", g.order()}, {"E", g.edge_count()}, {"degree", degree}, {"QR_N", qr}};
    if (!cfg.no_witness) j["graph"]["edges"] = g.edges();
    return {kOk, dump(j, t0)};
  }
  std::ostringstream os;
  os << "graph  " << g.label() << "\nV      " << g.order() << "\n|E|    " << g.edge_count() << "\ndegree "
     << degree << "\nQR_N   " << join(qr, " ") << '\n';
  return {kOk, os.str()};
}

Outcome cmd_spectrum(const Config& cfg, const PrimeSet& ps) {
  const auto t0 = std::chrono::steady_clock::now();
  const SpectrumTable table = closed_form_spectrum(ps);
  const SpectrumEntry least = least_eigenvalue(ps);
  std::optional<ReconcileReport> rec;
  std::vector<EigenCluster> clusters;
  std::string numeric_note;
  if (cfg.numeric) {
    const int order = static_cast<int>(ps.modulus());
    if (order > cfg.max_eig_v) {
      numeric_note = "numeric spectrum skipped: order " + std::to_string(order) + " exceeds eigensolver guard " +
                     std::to_string(cfg.max_eig_v);
    } else {
      clusters = numeric_spectrum(build_paley_type(ps), cfg.tolerance);
      rec = reconcile(table, clusters, cfg.tolerance);
    }
  }
  const int code = rec && !rec->ok ? kVerificationFailed : kOk;
  if (cfg.format == "json") {
    json j = report_header(ps);
    j["spectrum"] = to_json(table);
    j["least"] = to_json(least);
    if (rec) {
      j["numeric"] = to_json(std::span<const EigenCluster>(clusters));
      j["reconcile"] = to_json(*rec);
    } else if (!numeric_note.empty()) {
      j["numeric"] = numeric_note;
    }
    return {code, dump(j, t0)};
  }
  std::ostringstream os;
  os << spectrum_text(table) << "distinct " << table.entries.size() << "\ntrace " << table.trace()
     << "\ntrace_of_square " << table.trace_of_square() << "\nleast " << least.radical() << " = "
     << std::setprecision(12) << least.value << '\n';
  if (rec) os << "reconcile " << (rec->ok ? "ok" : "FAILED") << " max_difference " << rec->max_difference
              << (rec->message.empty() ? "" : " " + rec->message) << '\n';
  if (!numeric_note.empty()) os << numeric_note << '\n';
  return {code, os.str()};
}

Outcome cmd_census(const Config& cfg, const PrimeSet& ps) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto records = full_census(ps);
  const CensusSummary s = summarize(records);
  const int code = s.mismatches || s.rule_formula_mismatches ? kVerificationFailed : kOk;
  if (cfg.format == "csv") return {code, census_csv(records)};
  if (cfg.format == "json") {
    json j = report_header(ps);
    j["records"] = to_json(std::span<const CensusRecord>(records));
    j["summary"] = {{"records", s.records},
                    {"mismatches", s.mismatches},
                    {"rule_formula_mismatches", s.rule_formula_mismatches},
                    {"total", s.predicted_total}};
    return {code, dump(j, t0)};
  }
  std::ostringstream os;
  os << std::left << std::setw(8) << "z" << std::setw(16) << "class" << std::setw(19) << "rule" << std::right
     << std::setw(10) << "predicted" << std::setw(10) << "observed" << "  match\n";
  for (const auto& r : records)
    os << std::left << std::setw(8) << r.z << std::setw(16) << to_string(r.case_label) << std::setw(19)
       << r.rule << std::right << std::setw(10) << r.predicted << std::setw(10) << r.observed << "  "
       << (r.match ? "yes" : "NO") << '\n';
  os << "records " << s.records << ", mismatches " << s.mismatches << ", rule formula mismatches "
     << s.rule_formula_mismatches << ", total " << s.predicted_total << '\n';
  return {code, os.str()};
}

Outcome cmd_aut(const Config& cfg, const PrimeSet& ps) {
  const auto t0 = std::chrono::steady_clock::now();
  AutReport report = aut_report(ps, 0, cfg.budget);
  const int order = static_cast<int>(ps.modulus());
  std::optional<AutSearchResult> search;
  if (order <= cfg.max_aut_v) {
    search = search_automorphisms(build_paley_type(ps), cfg.budget);
    report.brute_force_count = search->count;
  }
  bool ok = report.affine_verified && report.affine_count == report.formula_count && report.vertex_transitive &&
            report.edge_transitive;
  if (report.brute_force_count)
    ok = ok && *report.brute_force_count == static_cast<std::uint64_t>(report.formula_count);
  const int code = ok ? kOk : kVerificationFailed;
  if (cfg.format == "json") {
    json j = report_header(ps);
    j["automorphisms"] = to_json(report);
    if (search) j["search"] = to_json(*search, !cfg.no_witness);
    else j["search"] = "skipped: order " + std::to_string(order) + " exceeds automorphism guard " +
                       std::to_string(cfg.max_aut_v);
    return {code, dump(j, t0)};
  }
  std::ostringstream os;
  os << "formula            " << report.formula_count << "\naffine family      " << report.affine_count
     << (report.affine_verified ? " (verified)" : " (NOT verified)") << "\nbrute force        ";
  if (report.brute_force_count) os << *report.brute_force_count;
  else os << "skipped (order " << order << " > " << cfg.max_aut_v << ")";
  os << "\nvertex transitive  " << (report.vertex_transitive ? "yes" : "no") << "\nedge transitive    "
     << (report.edge_transitive ? "yes" : "no") << '\n';
  if (search) {
    os << "orbit sizes        ";
    for (std::size_t i = 0; i < search->orbit_sizes.size(); ++i) os << (i ? " " : "") << search->orbit_sizes[i];
    os << '\n';
  }
  return {code, os.str()};
}

json cycle_json(const CycleSearchResult& r, bool witness) {
  json j = {{"status", std::string(to_string(r.status))}, {"nodes", r.nodes}};
  if (witness && r.status == CycleStatus::Found) j["cycle"] = r.cycle;
  return j;
}

Outcome cmd_cycles(const Config& cfg, const PrimeSet& ps) {
  const auto t0 = std::chrono::steady_clock::now();
  const Graph g = build_paley_type(ps);
  CycleSearchOptions opts;
  opts.budget = cfg.budget;
  opts.vertex_transitive = true;
  const bool witness = !cfg.no_witness;
  json j = report_header(ps);
  std::ostringstream os;
  int code = kOk;
  if (cfg.length) {
    const CycleSearchResult r = find_cycle_of_length(g, cfg.length, opts);
    if (r.status == CycleStatus::BudgetExceeded) code = kVerificationFailed;
    j["length"] = cfg.length;
    j["result"] = cycle_json(r, witness);
    os << "length " << cfg.length << ": " << to_string(r.status) << " (" << r.nodes << " nodes)\n";
    if (witness && r.status == CycleStatus::Found) os << "cycle " << json(r.cycle).dump() << '\n';
  } else {
    const CycleSearchResult h = hamiltonian_check(g, opts);
    if (h.status != CycleStatus::Found) code = kVerificationFailed;
    j["hamiltonian"] = cycle_json(h, witness);
    os << "hamiltonian: " << to_string(h.status) << '\n';
    if (g.order() > cfg.max_cycle_v) {
      const std::string note = "skipped: order " + std::to_string(g.order()) + " exceeds cycle guard " +
                               std::to_string(cfg.max_cycle_v);
      j["pancyclicity"] = note;
      os << "pancyclicity " << note << '\n';
    } else {
      const CycleReport report = pancyclicity_sweep(g, opts);
      j["pancyclicity"] = to_json(report, witness);
      if (!report.pancyclic() && ps.prime(0) > 5) code = kVerificationFailed;
      os << "pancyclic: " << (report.pancyclic() ? "yes" : "no") << " (lengths 3.." << g.order() << ")\n";
      if (!report.missing().empty()) os << "missing lengths " << json(report.missing()).dump() << '\n';
    }
  }
  if (cfg.format == "json") return {code, dump(j, t0)};
  return {code, os.str()};
}

Outcome cmd_verify(const Config& cfg, const PrimeSet& ps) {
  const auto t0 = std::chrono::steady_clock::now();
  VerifyOptions opts;
  opts.tolerance = cfg.tolerance;
  opts.budget = cfg.budget;
  opts.max_connectivity_order = cfg.max_conn_v;
  opts.max_aut_order = cfg.max_aut_v;
  opts.max_cycle_order = cfg.max_cycle_v;
  opts.max_eigen_order = cfg.max_eig_v;
  opts.witnesses = !cfg.no_witness;
  const VerifyReport report = run_verify(ps, opts);
  const int code = report.ok() ? kOk : kVerificationFailed;
  if (cfg.format == "json") return {code, dump(to_json(report), t0)};
  std::ostringstream os;
  for (const auto& c : report.checks) {
    os << std::left << std::setw(24) << c.tag << std::setw(8) << to_string(c.status) << std::right << std::fixed
       << std::setprecision(1) << std::setw(10) << c.elapsed_ms << " ms";
    if (!c.reason.empty()) os << "  " << c.reason;
    os << '\n';
  }
  os << (report.ok() ? "verify: ok\n" : "verify: FAILED\n");
  return {code, os.str()};
}

using Command = Outcome (*)(const Config&, const PrimeSet&);

struct CommandSpec {
  const char* name;
  const char* help;
  Command run;
  std::vector<std::string> formats;
  const char* default_format;
};

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::Empty:
    case Errc::NotPrime:
    case Errc::NotPythagorean:
    case Errc::Duplicate:
    case Errc::NotAscending:
    case Errc::TooLarge:
    case Errc::CoordOutOfRange:
    case Errc::InvalidArgument:
    case Errc::Parse:
      return kUsage;
    default:
      return kVerificationFailed;
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  const std::vector<CommandSpec> commands = {
      {"construct", "Build Gamma_N and export it", cmd_construct, {"text", "json", "graph6", "edgelist", "dot"}, "text"},
      {"spectrum", "Closed-form spectrum, optionally reconciled numerically", cmd_spectrum, {"text", "json"}, "text"},
      {"census", "Quadratic-residue difference census", cmd_census, {"text", "json", "csv"}, "text"},
      {"aut", "Automorphism count and transitivity", cmd_aut, {"text", "json"}, "text"},
      {"cycles", "Hamiltonian cycle, pancyclicity sweep or a single cycle length", cmd_cycles, {"text", "json"}, "text"},
      {"verify", "Run the full verification suite", cmd_verify, {"text", "json"}, "json"},
  };

  CLI::App app{"Paley-type graphs on products of Pythagorean primes", "paleytype"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  Config cfg;
  std::vector<std::pair<CLI::App*, const CommandSpec*>> subs;
  for (const auto& spec : commands) {
    CLI::App* sub = app.add_subcommand(spec.name, spec.help);
    sub->add_option("--primes", cfg.primes, "Ascending distinct primes p = 1 mod 4, e.g. 5,13")->required();
    sub->add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember(spec.formats))
        ->default_str(spec.default_format);
    sub->add_option("--tol", cfg.tolerance, "Numeric tolerance")->check(CLI::PositiveNumber)->capture_default_str();
    sub->add_option("--budget", cfg.budget, "Search node budget")->capture_default_str();
    sub->add_option("--out", cfg.output, "Write to this file instead of standard output");
    sub->add_flag("--no-witness", cfg.no_witness, "Omit cycles, generators and edge lists from reports");
    sub->add_option("--max-aut-v", cfg.max_aut_v, "Automorphism search guard")->capture_default_str();
    sub->add_option("--max-conn-v", cfg.max_conn_v, "Connectivity guard")->capture_default_str();
    sub->add_option("--max-cycle-v", cfg.max_cycle_v, "Pancyclicity guard")->capture_default_str();
    sub->add_option("--max-eig-v", cfg.max_eig_v, "Eigensolver guard")->capture_default_str();
    if (std::string_view(spec.name) == "cycles")
      sub->add_option("--length", cfg.length, "Search for a single cycle of this length")
          ->check(CLI::Range(3, std::numeric_limits<int>::max()));
    if (std::string_view(spec.name) == "spectrum")
      sub->add_flag("--numeric", cfg.numeric, "Also compute and reconcile the numeric spectrum");
    subs.emplace_back(sub, &spec);
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  const CommandSpec* chosen = nullptr;
  for (const auto& [sub, spec] : subs)
    if (sub->parsed()) chosen = spec;
  if (cfg.format.empty()) cfg.format = chosen->default_format;

  Outcome outcome;
  try {
    const PrimeSet ps = parse_primes(cfg.primes);
    outcome = chosen->run(cfg, ps);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  }

  if (cfg.output.empty()) {
    out << outcome.body;
    out.flush();
    if (!out) {
      err << "error: failed writing standard output\n";
      return kIo;
    }
  } else {
    std::ofstream file(cfg.output, std::ios::binary);
    if (!file) {
      err << "error: cannot open " << cfg.output << " for writing\n";
      return kIo;
    }
    file << outcome.body;
    file.close();
    if (!file) {
      err << "error: failed writing " << cfg.output << '\n';
      return kIo;
    }
  }
  return outcome.code;
}

}  // namespace paleytype::cli
