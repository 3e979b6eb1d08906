#include "paleytype/census.hpp"

#include "paleytype/error.hpp"

namespace paleytype {

std::int64_t per_prime_count(std::int64_t z, std::int64_t p) {
  if (p % 4 != 1 || !is_prime(p))
    throw Error(Errc::NotPythagorean, std::to_string(p) + " is not a Pythagorean prime");
  if (z < 0 || z >= p)
    throw Error(Errc::CoordOutOfRange, std::to_string(z) + " is outside [0, " +
                                           std::to_string(p) + ")");
  switch (legendre_symbol(z, p)) {
    case 0: return (p - 1) / 2;
    case 1: return (p - 5) / 4;
    default: return (p - 1) / 4;
  }
}

std::int64_t predicted_count(std::int64_t z, const PrimeSet& ps) {
  std::int64_t count = 1;
  const auto coords = crt_split(z, ps);
  for (std::size_t i = 0; i < coords.size(); ++i) count *= per_prime_count(coords[i], ps.prime(i));
  return count;
}

std::int64_t oracle_count(std::int64_t z, const ResidueTable& table) {
  const std::int64_t n = table.modulus();
  if (z < 0 || z >= n)
    throw Error(Errc::CoordOutOfRange, std::to_string(z) + " is outside [0, " +
                                           std::to_string(n) + ")");
  std::int64_t count = 0;
  for (std::int64_t a : table.residues())
    for (std::int64_t b : table.residues())
      if (((a - b) % n + n) % n == z) ++count;
  return count;
}

std::int64_t oracle_count(std::int64_t z, const PrimeSet& ps) {
  return oracle_count(z, ResidueTable(ps));
}

CaseRule case_rule(const ResidueProfile& profile, const PrimeSet& ps) {
  const int n = static_cast<int>(ps.size());
  const int r = profile.qnr_positions();
  const int zeros = profile.zero_positions();
  CaseRule out;

  // Every case formula is a product over primes of (p-1) or (p-5) factors
  // divided by a power of two; accumulate numerator and denominator exactly.
  auto evaluate = [&](auto factor_for) -> std::int64_t {
    std::int64_t num = 1;
    std::int64_t den = 1;
    for (int i = 0; i < n; ++i) {
      auto [f, d] = factor_for(i);
      num *= f;
      den *= d;
    }
    return num / den;
  };
  auto unit_factor = [&](int i) -> std::pair<std::int64_t, std::int64_t> {
    const std::int64_t p = ps.prime(static_cast<std::size_t>(i));
    return {profile.per_prime[static_cast<std::size_t>(i)] == ResidueClass::QNR ? p - 1 : p - 5, 4};
  };

  switch (profile.global) {
    case GlobalClass::Zero:
      out.label = "zero";
      break;
    case GlobalClass::QR_N:
      out.label = "qr";
      out.formula = evaluate(unit_factor);
      break;
    case GlobalClass::JplusNotQR:
      out.label = r == n ? "jplus_all_qnr" : "jplus_some_qnr";
      out.formula = evaluate(unit_factor);
      break;
    case GlobalClass::Jminus:
      out.label = r == n ? "jminus_all_qnr" : "jminus_some_qnr";
      out.formula = evaluate(unit_factor);
      break;
    case GlobalClass::NonUnitNonZero:
      if (zeros == n - 1 && r == 0) {
        out.label = "nonunit_single_qr";
        out.formula = evaluate([&](int i) -> std::pair<std::int64_t, std::int64_t> {
          const std::int64_t p = ps.prime(static_cast<std::size_t>(i));
          if (profile.per_prime[static_cast<std::size_t>(i)] == ResidueClass::Zero) return {p - 1, 2};
          return {p - 5, 4};
        });
      } else if (r + zeros == n) {
        out.label = "nonunit_all_qnr";
        out.formula = evaluate([&](int i) -> std::pair<std::int64_t, std::int64_t> {
          const std::int64_t p = ps.prime(static_cast<std::size_t>(i));
          return {p - 1, profile.per_prime[static_cast<std::size_t>(i)] == ResidueClass::Zero ? 2 : 4};
        });
      } else {
        out.label = "nonunit_mixed";
      }
      break;
  }
  return out;
}

std::vector<CensusRecord> full_census(const PrimeSet& ps) {
  const ResidueTable table(ps);
  const std::int64_t n = ps.modulus();

  // Difference histogram over QR_N x QR_N; observed(z) is its z-th bin.
  std::vector<std::int64_t> histogram(static_cast<std::size_t>(n), 0);
  for (std::int64_t a : table.residues())
    for (std::int64_t b : table.residues()) ++histogram[static_cast<std::size_t>(((a - b) % n + n) % n)];

  std::vector<CensusRecord> records;
  records.reserve(static_cast<std::size_t>(n));
  for (std::int64_t z = 0; z < n; ++z) {
    const ResidueProfile profile = classify(z, ps);
    const CaseRule pc = case_rule(profile, ps);
    CensusRecord rec;
    rec.z = z;
    rec.case_label = profile.global;
    rec.per_prime = profile.per_prime;
    rec.qnr_positions = profile.qnr_positions();
    rec.rule = pc.label;
    rec.rule_formula = pc.formula;
    rec.predicted = predicted_count(z, ps);
    rec.observed = histogram[static_cast<std::size_t>(z)];
    rec.match = rec.predicted == rec.observed;
    records.push_back(std::move(rec));
  }
  return records;
}

CensusSummary summarize(const std::vector<CensusRecord>& records) {
  CensusSummary s;
  s.records = records.size();
  for (const auto& r : records) {
    if (!r.match) ++s.mismatches;
    if (r.rule_formula && *r.rule_formula != r.observed) ++s.rule_formula_mismatches;
    s.predicted_total += r.predicted;
  }
  return s;
}

}  // namespace paleytype
