#pragma once

#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "paleytype/census.hpp"
#include "paleytype/cycles.hpp"
#include "paleytype/graph.hpp"
#include "paleytype/spectra.hpp"
#include "paleytype/symmetry.hpp"
#include "paleytype/verify.hpp"

namespace paleytype {

inline constexpr const char* kToolVersion = PALEYTYPE_VERSION;

/// {"tool", "version", "primes", "N"} header shared by every JSON report.
nlohmann::json report_header(const PrimeSet& ps);

nlohmann::json to_json(const ResidueProfile& p);
nlohmann::json to_json(const CensusRecord& r);
nlohmann::json to_json(std::span<const CensusRecord> records);
nlohmann::json to_json(const SpectrumEntry& e);
nlohmann::json to_json(const SpectrumTable& t);
nlohmann::json to_json(std::span<const EigenCluster> clusters);
nlohmann::json to_json(const ReconcileReport& r);
nlohmann::json to_json(const AutReport& r);
nlohmann::json to_json(const AutSearchResult& r, bool with_generators);
nlohmann::json to_json(const HammackReport& r);
nlohmann::json to_json(const CycleReport& r, bool with_witnesses);
nlohmann::json to_json(const VerifyReport& r);

/// Header "z,case,per_prime,predicted,observed,match"; per-prime classes
/// joined with ';'.
std::string census_csv(std::span<const CensusRecord> records);

/// Aligned text table: branch, radical, value, multiplicity.
std::string spectrum_text(const SpectrumTable& t);

/// Same JSON with every "elapsed_ms" member removed, for comparing runs.
nlohmann::json strip_timing(nlohmann::json j);

}  // namespace paleytype
