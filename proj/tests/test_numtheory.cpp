#include <doctest.h>

#include "oracles.hpp"
#include "paleytype/numtheory.hpp"
#include "support.hpp"

using namespace paleytype;

namespace {

const std::vector<std::vector<std::int64_t>> kSets = {{5}, {13}, {17}, {5, 13}, {5, 17}, {13, 17}, {5, 13, 17}};

}  // namespace

TEST_CASE("validate_primes accepts ascending Pythagorean primes") {
  const PrimeSet a = validate_primes({5, 13});
  CHECK(a.modulus() == 65);
  CHECK(a.size() == 2);
  CHECK(a.to_string() == "5,13");
  const PrimeSet b = validate_primes({13});
  CHECK(b.modulus() == 13);
  CHECK(b.size() == 1);
}

TEST_CASE("validate_primes rejects bad input without normalizing") {
  CHECK_ERRC(validate_primes({5, 7}), Errc::NotPythagorean);
  CHECK_ERRC(validate_primes({3}), Errc::NotPythagorean);
  CHECK_ERRC(validate_primes({2}), Errc::NotPythagorean);
  CHECK_ERRC(validate_primes({9}), Errc::NotPrime);
  CHECK_ERRC(validate_primes({1}), Errc::NotPrime);
  CHECK_ERRC(validate_primes({-5}), Errc::NotPrime);
  CHECK_ERRC(validate_primes({13, 5}), Errc::NotAscending);
  CHECK_ERRC(validate_primes({5, 5}), Errc::Duplicate);
  CHECK_ERRC(validate_primes(std::vector<std::int64_t>{}), Errc::Empty);
  CHECK_ERRC(validate_primes({5, 13, 17, 29, 37, 41}), Errc::TooLarge);
  try {
    validate_primes({5, 7});
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find('7') != std::string::npos);
  }
}

TEST_CASE("is_prime and gcd agree with trial division") {
  for (std::int64_t n = -3; n < 400; ++n) {
    bool expected = n >= 2;
    for (std::int64_t d = 2; d * d <= n && expected; ++d)
      if (n % d == 0) expected = false;
    CHECK(is_prime(n) == expected);
  }
  CHECK(gcd(12, 18) == 6);
  CHECK(gcd(0, 7) == 7);
  CHECK(pow_mod(3, 0, 7) == 1);
  CHECK(pow_mod(2, 10, 1000) == 24);
}

TEST_CASE("euler_phi") {
  CHECK(euler_phi(validate_primes({5, 13})) == 48);
  CHECK(euler_phi(validate_primes({13})) == 12);
  CHECK(euler_phi(validate_primes({5, 13, 17})) == 768);
  for (const auto& s : kSets) CHECK(euler_phi(validate_primes(s)) == oracle::units(oracle::modulus_of(s)));
}

TEST_CASE("quadratic residues match squaring oracle") {
  CHECK(quadratic_residues(validate_primes({5})) == std::vector<std::int64_t>{1, 4});
  CHECK(quadratic_residues(validate_primes({13})) == std::vector<std::int64_t>{1, 3, 4, 9, 10, 12});
  const auto qr65 = quadratic_residues(validate_primes({5, 13}));
  CHECK(qr65.size() == 12);
  for (std::int64_t x : {1, 4, 9, 16}) CHECK(std::count(qr65.begin(), qr65.end(), x) == 1);
  for (const auto& s : kSets) {
    const PrimeSet ps = validate_primes(s);
    const auto o = oracle::squares_of_units(ps.modulus());
    const std::vector<std::int64_t> expected(o.begin(), o.end());
    CHECK(quadratic_residues(ps) == expected);
    CHECK(quadratic_residues_by_crt(ps) == expected);
    const ResidueTable t(ps);
    for (std::int64_t z = -1; z <= ps.modulus(); ++z) CHECK(t.contains(z) == (o.count(z) > 0));
  }
}

TEST_CASE("jacobi and legendre symbols") {
  const PrimeSet p13 = validate_primes({13});
  const PrimeSet p65 = validate_primes({5, 13});
  CHECK(jacobi_symbol(1, p13) == 1);
  CHECK(jacobi_symbol(1, p65) == 1);
  CHECK(jacobi_symbol(5, p13) == -1);
  CHECK(jacobi_symbol(13, p65) == 0);
  CHECK_ERRC(jacobi_symbol(65, p65), Errc::CoordOutOfRange);
  CHECK_ERRC(jacobi_symbol(-1, p65), Errc::CoordOutOfRange);
  for (std::int64_t p : {5, 13, 17, 29})
    for (std::int64_t a = 0; a < 2 * p; ++a) CHECK(legendre_symbol(a, p) == oracle::legendre_by_squares(a, p));
  for (const auto& s : kSets) {
    const PrimeSet ps = validate_primes(s);
    for (std::int64_t z = 0; z < ps.modulus(); ++z) CHECK(jacobi_symbol(z, ps) == oracle::jacobi_by_squares(z, s));
  }
}

TEST_CASE("classify") {
  const PrimeSet ps = validate_primes({5, 13});
  CHECK(classify(0, ps).global == GlobalClass::Zero);
  const ResidueProfile z16 = classify(16, ps);
  CHECK(z16.global == GlobalClass::QR_N);
  CHECK(z16.per_prime == std::vector<ResidueClass>{ResidueClass::QR, ResidueClass::QR});
  const ResidueProfile z2 = classify(2, ps);
  CHECK(z2.global == GlobalClass::JplusNotQR);
  CHECK(z2.qnr_positions() == 2);
  CHECK(z2.jacobi == 1);
  CHECK(classify(13, ps).global == GlobalClass::NonUnitNonZero);
  CHECK(classify(13, ps).zero_positions() == 1);
  CHECK(classify(3, ps).global == GlobalClass::Jminus);
  CHECK_ERRC(classify(65, ps), Errc::CoordOutOfRange);

  for (const auto& s : kSets) {
    const PrimeSet p = validate_primes(s);
    const auto qr = oracle::squares_of_units(p.modulus());
    for (std::int64_t z = 0; z < p.modulus(); ++z) {
      const ResidueProfile r = classify(z, p);
      const int j = oracle::jacobi_by_squares(z, s);
      GlobalClass expected = GlobalClass::NonUnitNonZero;
      if (z == 0) expected = GlobalClass::Zero;
      else if (qr.count(z)) expected = GlobalClass::QR_N;
      else if (j == 1) expected = GlobalClass::JplusNotQR;
      else if (j == -1) expected = GlobalClass::Jminus;
      CHECK(r.global == expected);
      CHECK(r.unit == (j != 0));
    }
  }
}

TEST_CASE("crt split and join") {
  const PrimeSet ps = validate_primes({5, 13});
  CHECK(crt_split(64, ps) == std::vector<std::int64_t>{4, 12});
  const std::vector<std::int64_t> c{4, 12};
  CHECK(crt_join(c, ps) == 64);
  for (std::int64_t z = 0; z < 65; ++z) CHECK(crt_join(crt_split(z, ps), ps) == z);
  const PrimeSet big = validate_primes({5, 13, 17});
  for (std::int64_t z = 0; z < big.modulus(); ++z) CHECK(crt_join(crt_split(z, big), big) == z);
  const std::vector<std::int64_t> bad{5, 0};
  CHECK_ERRC(crt_join(bad, ps), Errc::CoordOutOfRange);
  const std::vector<std::int64_t> short_coords{1};
  CHECK_ERRC(crt_join(short_coords, ps), Errc::CoordOutOfRange);
}

TEST_CASE("minus one is a quadratic residue") {
  CHECK(minus_one_is_qr(validate_primes({5})));
  CHECK(minus_one_is_qr(validate_primes({5, 13})));
  CHECK(minus_one_is_qr(validate_primes({13, 17})));
  for (const auto& s : kSets) {
    const std::int64_t n = oracle::modulus_of(s);
    CHECK(minus_one_is_qr(validate_primes(s)) == (oracle::squares_of_units(n).count(n - 1) > 0));
  }
  CHECK(8 * 8 % 65 == 64);
}

TEST_CASE("cardinalities") {
  const Cardinalities c = enumerate_cardinalities(validate_primes({5, 13}));
  CHECK(c.phi == 48);
  CHECK(c.qr == 12);
  CHECK(c.jacobi_plus == 24);
  CHECK(c.jacobi_minus == 24);
  for (const auto& s : kSets) {
    const PrimeSet ps = validate_primes(s);
    const std::int64_t n = ps.modulus();
    std::int64_t plus = 0, minus = 0;
    for (std::int64_t z = 0; z < n; ++z) {
      const int j = oracle::jacobi_by_squares(z, s);
      plus += j == 1;
      minus += j == -1;
    }
    const Cardinalities e = enumerate_cardinalities(ps);
    CHECK(e.phi == oracle::units(n));
    CHECK(e.qr == static_cast<std::int64_t>(oracle::squares_of_units(n).size()));
    CHECK(e.qr == e.phi >> s.size());
    CHECK(e.jacobi_plus == plus);
    CHECK(e.jacobi_minus == minus);
  }
}
