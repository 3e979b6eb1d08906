#include <doctest.h>

#include "oracles.hpp"
#include "paleytype/census.hpp"
#include "support.hpp"

using namespace paleytype;

TEST_CASE("per-prime difference counts") {
  CHECK(per_prime_count(0, 13) == 6);
  CHECK(per_prime_count(1, 13) == 2);
  CHECK(per_prime_count(2, 13) == 3);
  for (std::int64_t p : {5, 13, 17, 29, 37})
    for (std::int64_t z = 0; z < p; ++z) CHECK(per_prime_count(z, p) == oracle::difference_pairs(z, p));
}

TEST_CASE("single prime pairs for 13") {
  // QR_13 = {1,3,4,9,10,12}
  const auto qr = oracle::squares_of_units(13);
  std::vector<std::pair<std::int64_t, std::int64_t>> ones, twos;
  for (auto a : qr)
    for (auto b : qr) {
      if ((a - b + 13) % 13 == 1) ones.emplace_back(a, b);
      if ((a - b + 13) % 13 == 2) twos.emplace_back(a, b);
    }
  CHECK(ones == std::vector<std::pair<std::int64_t, std::int64_t>>{{4, 3}, {10, 9}});
  CHECK(twos.size() == 3);
  for (auto pr : {std::pair<std::int64_t, std::int64_t>{3, 1}, {12, 10}, {1, 12}})
    CHECK(std::find(twos.begin(), twos.end(), pr) != twos.end());
}

TEST_CASE("predicted count for composite moduli") {
  const PrimeSet ps = validate_primes({5, 13});
  CHECK(predicted_count(0, ps) == 12);
  CHECK(predicted_count(16, ps) == 0);
  CHECK(predicted_count(2, ps) == 3);
  CHECK(oracle_count(0, ps) == 12);
  CHECK(oracle_count(1, validate_primes({13})) == 2);
  CHECK(oracle_count(2, ps) == oracle::difference_pairs(2, 65));
}

TEST_CASE("census agrees with the pair oracle") {
  for (const std::vector<std::int64_t> s : {std::vector<std::int64_t>{13}, {5, 13}, {5, 17}, {13, 17}}) {
    const PrimeSet ps = validate_primes(s);
    const auto records = full_census(ps);
    REQUIRE(records.size() == static_cast<std::size_t>(ps.modulus()));
    std::int64_t sum = 0;
    for (const auto& r : records) {
      CHECK(r.observed == oracle::difference_pairs(r.z, ps.modulus()));
      CHECK(r.predicted == r.observed);
      CHECK(r.match);
      sum += r.observed;
    }
    const std::int64_t q = static_cast<std::int64_t>(oracle::squares_of_units(ps.modulus()).size());
    CHECK(sum == q * q);
    const CensusSummary summary = summarize(records);
    CHECK(summary.mismatches == 0);
    CHECK(summary.rule_formula_mismatches == 0);
    CHECK(summary.predicted_total == q * q);
  }
}

TEST_CASE("census on three primes") {
  const PrimeSet ps = validate_primes({5, 13, 17});
  const auto records = full_census(ps);
  CHECK(records.size() == 1105);
  const CensusSummary s = summarize(records);
  CHECK(s.mismatches == 0);
  CHECK(s.rule_formula_mismatches == 0);
  CHECK(s.predicted_total == 96 * 96);
  // Spot checks against the quadratic pair oracle.
  for (std::int64_t z : {0, 1, 2, 3, 5, 13, 17, 65, 85, 221, 1104})
    CHECK(records[static_cast<std::size_t>(z)].observed == oracle::difference_pairs(z, 1105));
}

TEST_CASE("case rule labels") {
  const PrimeSet ps = validate_primes({5, 13});
  CHECK(case_rule(classify(0, ps), ps).label == "zero");
  CHECK(!case_rule(classify(0, ps), ps).formula);
  CHECK(case_rule(classify(16, ps), ps).label == "qr");
  CHECK(case_rule(classify(2, ps), ps).label == "jplus_all_qnr");
  CHECK(case_rule(classify(3, ps), ps).label == "jminus_some_qnr");
  // 5 is 0 mod 5 and 5 mod 13, a QNR mod 13: one zero, a QNR at the other coordinate.
  CHECK(case_rule(classify(5, ps), ps).label == "nonunit_all_qnr");
  // 10 is 0 mod 5 and 10 mod 13, a QR.
  CHECK(case_rule(classify(10, ps), ps).label == "nonunit_single_qr");

  const PrimeSet p3 = validate_primes({5, 13, 17});
  for (std::int64_t z = 0; z < p3.modulus(); ++z) {
    const ResidueProfile prof = classify(z, p3);
    if (prof.zero_positions() == 1) {
      int qr = 0, qnr = 0;
      for (auto c : prof.per_prime) {
        qr += c == ResidueClass::QR;
        qnr += c == ResidueClass::QNR;
      }
      if (qr && qnr) {
        const CaseRule pc = case_rule(prof, p3);
        CHECK(pc.label == "nonunit_mixed");
        CHECK(!pc.formula);
      }
    }
  }
}
