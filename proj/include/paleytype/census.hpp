#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "paleytype/numtheory.hpp"

namespace paleytype {

// Counting convention throughout: ordered pairs (a, b) of residue values with
// a, b in QR_N and a - b = z (mod N). Pairs of square roots are not counted.

/// Difference count for a single Pythagorean prime:
/// (p-1)/2 at z = 0, (p-5)/4 for z a QR, (p-1)/4 for z a QNR.
std::int64_t per_prime_count(std::int64_t z, std::int64_t p);

/// CRT product of per_prime_count over the coordinates of z.
std::int64_t predicted_count(std::int64_t z, const PrimeSet& ps);

/// Exhaustive count over QR_N x QR_N.
std::int64_t oracle_count(std::int64_t z, const ResidueTable& table);
std::int64_t oracle_count(std::int64_t z, const PrimeSet& ps);

/// Closed-form rule that applies to z, with the count it gives on its own
/// terms. Rules:
///   "qr"                z in QR_N
///   "jplus_all_qnr"     Jacobi +1, every coordinate a QNR
///   "jplus_some_qnr"    Jacobi +1, some but not all coordinates QNR
///   "jminus_all_qnr"    Jacobi -1, every coordinate a QNR
///   "jminus_some_qnr"   Jacobi -1, some but not all coordinates QNR
///   "nonunit_single_qr" non-unit vanishing at n-1 primes, QR at the remaining one
///   "nonunit_all_qnr"   non-unit, non-zero, QNR at every non-vanishing coordinate
///   "nonunit_mixed"     non-unit mixing QR and QNR coordinates
/// `formula` is empty for "nonunit_mixed", which has no closed form of its
/// own, and for z = 0 ("zero").
struct CaseRule {
  std::string label;
  std::optional<std::int64_t> formula;
};

CaseRule case_rule(const ResidueProfile& profile, const PrimeSet& ps);

struct CensusRecord {
  std::int64_t z = 0;
  GlobalClass case_label = GlobalClass::Zero;
  std::vector<ResidueClass> per_prime;
  int qnr_positions = 0;
  std::string rule;
  std::optional<std::int64_t> rule_formula;
  std::int64_t predicted = 0;
  std::int64_t observed = 0;
  bool match = false;
};

/// One record per z in [0, N), ordered by z.
std::vector<CensusRecord> full_census(const PrimeSet& ps);

struct CensusSummary {
  std::size_t records = 0;
  std::size_t mismatches = 0;
  std::size_t rule_formula_mismatches = 0;
  std::int64_t predicted_total = 0;
};

CensusSummary summarize(const std::vector<CensusRecord>& records);

}  // namespace paleytype
