#include "paleytype/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace paleytype {

using nlohmann::json;

namespace {

std::string join_classes(std::span<const ResidueClass> classes, char sep) {
  std::string out;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (i) out += sep;
    out += to_string(classes[i]);
  }
  return out;
}

json class_list(std::span<const ResidueClass> classes) {
  json a = json::array();
  for (auto c : classes) a.push_back(std::string(to_string(c)));
  return a;
}

json optional_count(const std::optional<std::int64_t>& v) { return v ? json(*v) : json(nullptr); }

}  // namespace

json report_header(const PrimeSet& ps) {
  json primes = json::array();
  for (auto p : ps.primes()) primes.push_back(p);
  return {{"tool", "paleytype"}, {"version", kToolVersion}, {"primes", primes}, {"N", ps.modulus()}};
}

json to_json(const ResidueProfile& p) {
  return {{"z", p.z},
          {"per_prime", class_list(p.per_prime)},
          {"unit", p.unit},
          {"jacobi", p.jacobi},
          {"class", std::string(to_string(p.global))}};
}

json to_json(const CensusRecord& r) {
  return {{"z", r.z},
          {"class", std::string(to_string(r.case_label))},
          {"per_prime", class_list(r.per_prime)},
          {"qnr_positions", r.qnr_positions},
          {"rule", r.rule},
          {"rule_formula", optional_count(r.rule_formula)},
          {"predicted", r.predicted},
          {"observed", r.observed},
          {"match", r.match}};
}

json to_json(std::span<const CensusRecord> records) {
  json a = json::array();
  for (const auto& r : records) a.push_back(to_json(r));
  return a;
}

json to_json(const SpectrumEntry& e) {
  json branches = json::array();
  for (auto b : e.branch) branches.push_back(std::string(to_string(b)));
  return {{"branch", branches}, {"radical", e.radical()}, {"value", e.value}, {"multiplicity", e.multiplicity}};
}

json to_json(const SpectrumTable& t) {
  json entries = json::array();
  for (const auto& e : t.entries) entries.push_back(to_json(e));
  return {{"entries", entries},
          {"distinct", t.entries.size()},
          {"total_multiplicity", t.total_multiplicity()},
          {"trace", t.trace()},
          {"trace_of_square", t.trace_of_square()},
          {"min_gap", t.min_gap()}};
}

json to_json(std::span<const EigenCluster> clusters) {
  json a = json::array();
  for (const auto& c : clusters) a.push_back({{"value", c.value}, {"multiplicity", c.multiplicity}});
  return a;
}

json to_json(const ReconcileReport& r) {
  json pairs = json::array();
  for (const auto& p : r.pairs)
    pairs.push_back({{"entry", p.entry}, {"cluster", p.cluster}, {"difference", p.difference}});
  return {{"ok", r.ok},
          {"failure", std::string(to_string(r.failure))},
          {"message", r.message},
          {"max_difference", r.max_difference},
          {"pairs", pairs}};
}

json to_json(const AutReport& r) {
  return {{"formula", r.formula_count},
          {"affine_count", r.affine_count},
          {"affine_verified", r.affine_verified},
          {"brute_force", r.brute_force_count ? json(*r.brute_force_count) : json(nullptr)},
          {"vertex_transitive", r.vertex_transitive},
          {"edge_transitive", r.edge_transitive}};
}

json to_json(const AutSearchResult& r, bool with_generators) {
  json j = {{"count", r.count}, {"base", r.base}, {"orbit_sizes", r.orbit_sizes}, {"nodes", r.nodes},
            {"generator_count", r.generators.size()}};
  if (with_generators) j["generators"] = r.generators;
  return j;
}

json to_json(const HammackReport& r) {
  return {{"connected", r.connected},
          {"non_bipartite", r.non_bipartite},
          {"r_thin", r.r_thin},
          {"least_eigenvalue", r.least_eigenvalue},
          {"degree", r.degree},
          {"product_count", r.product_count},
          {"factor_counts", r.factor_counts},
          {"holds", r.holds}};
}

json to_json(const CycleReport& r, bool with_witnesses) {
  json outcomes = json::array();
  for (const auto& o : r.outcomes())
    outcomes.push_back({{"length", o.length}, {"status", std::string(to_string(o.status))}, {"nodes", o.nodes}});
  json j = {{"min_length", r.min_length()},
            {"max_length", r.max_length()},
            {"pancyclic", r.pancyclic()},
            {"missing", r.missing()},
            {"outcomes", outcomes}};
  if (with_witnesses) {
    json w = json::object();
    for (const auto& [k, cycle] : r.witnesses()) w[std::to_string(k)] = cycle;
    j["witnesses"] = w;
  }
  return j;
}

json to_json(const VerifyReport& r) {
  json checks = json::array();
  std::size_t passed = 0, failed = 0, skipped = 0;
  for (const auto& c : r.checks) {
    checks.push_back({{"tag", c.tag},
                      {"claim", c.claim},
                      {"status", std::string(to_string(c.status))},
                      {"reason", c.reason},
                      {"detail", c.detail},
                      {"elapsed_ms", c.elapsed_ms}});
    switch (c.status) {
      case CheckStatus::Pass: ++passed; break;
      case CheckStatus::Fail: ++failed; break;
      case CheckStatus::Skipped: ++skipped; break;
    }
  }
  json j = report_header(r.primes);
  j["ok"] = r.ok();
  j["summary"] = {{"pass", passed}, {"fail", failed}, {"skipped", skipped}};
  j["checks"] = checks;
  return j;
}

std::string census_csv(std::span<const CensusRecord> records) {
  std::ostringstream os;
  os << "z,case,per_prime,predicted,observed,match\n";
  for (const auto& r : records)
    os << r.z << ',' << to_string(r.case_label) << ',' << join_classes(r.per_prime, ';') << ','
       << r.predicted << ',' << r.observed << ',' << (r.match ? "true" : "false") << '\n';
  return os.str();
}

std::string spectrum_text(const SpectrumTable& t) {
  std::vector<std::string> branches, radicals, values, mults;
  for (const auto& e : t.entries) {
    std::string b;
    for (std::size_t i = 0; i < e.branch.size(); ++i) {
      if (i) b += ',';
      b += to_string(e.branch[i]);
    }
    branches.push_back(b);
    radicals.push_back(e.radical());
    std::ostringstream v;
    v << std::fixed << std::setprecision(6) << e.value;
    values.push_back(v.str());
    mults.push_back(std::to_string(e.multiplicity));
  }
  auto width = [](const std::vector<std::string>& col, std::size_t min) {
    std::size_t w = min;
    for (const auto& s : col) w = std::max(w, s.size());
    return static_cast<int>(w);
  };
  const int wb = width(branches, 6), wr = width(radicals, 7), wv = width(values, 5), wm = width(mults, 12);
  std::ostringstream os;
  os << std::left << std::setw(wb) << "branch" << "  " << std::setw(wr) << "radical" << "  " << std::right
     << std::setw(wv) << "value" << "  " << std::setw(wm) << "multiplicity" << '\n';
  for (std::size_t i = 0; i < t.entries.size(); ++i)
    os << std::left << std::setw(wb) << branches[i] << "  " << std::setw(wr) << radicals[i] << "  " << std::right
       << std::setw(wv) << values[i] << "  " << std::setw(wm) << mults[i] << '\n';
  return os.str();
}

json strip_timing(json j) {
  if (j.is_object()) {
    j.erase("elapsed_ms");
    j.erase("timing");
    for (auto& [k, v] : j.items()) v = strip_timing(std::move(v));
  } else if (j.is_array()) {
    for (auto& v : j) v = strip_timing(std::move(v));
  }
  return j;
}

}  // namespace paleytype
