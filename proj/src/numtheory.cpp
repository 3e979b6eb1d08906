#include "paleytype/numtheory.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "paleytype/error.hpp"

namespace paleytype {

std::string PrimeSet::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < primes_.size(); ++i) {
    if (i) os << ',';
    os << primes_[i];
  }
  return os.str();
}

bool is_prime(std::int64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::int64_t gcd(std::int64_t a, std::int64_t b) noexcept {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t mod) noexcept {
  if (mod == 1) return 0;
  // Operands stay below 2^31 at desk scale, but widen anyway.
  __int128 result = 1;
  __int128 b = ((base % mod) + mod) % mod;
  while (exp > 0) {
    if (exp & 1) result = (result * b) % mod;
    b = (b * b) % mod;
    exp >>= 1;
  }
  return static_cast<std::int64_t>(result);
}

PrimeSet validate_primes(std::span<const std::int64_t> raw) {
  if (raw.empty()) throw Error(Errc::Empty, "at least one prime is required");
  for (std::int64_t p : raw) {
    if (!is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
    if (p % 4 != 1)
      throw Error(Errc::NotPythagorean,
                  std::to_string(p) + " is not congruent to 1 mod 4");
  }
  std::set<std::int64_t> seen;
  for (std::int64_t p : raw)
    if (!seen.insert(p).second)
      throw Error(Errc::Duplicate, std::to_string(p) + " appears more than once");
  for (std::size_t i = 1; i < raw.size(); ++i)
    if (raw[i] < raw[i - 1])
      throw Error(Errc::NotAscending, std::to_string(raw[i]) + " follows " +
                                          std::to_string(raw[i - 1]) +
                                          "; primes must be listed in ascending order");
  std::int64_t n = 1;
  for (std::int64_t p : raw) {
    if (n > kMaxModulus / p)
      throw Error(Errc::TooLarge, "product of primes exceeds " + std::to_string(kMaxModulus));
    n *= p;
  }
  return PrimeSet(std::vector<std::int64_t>(raw.begin(), raw.end()), n);
}

PrimeSet validate_primes(std::initializer_list<std::int64_t> raw) {
  return validate_primes(std::span<const std::int64_t>(raw.begin(), raw.size()));
}

std::int64_t euler_phi(const PrimeSet& ps) noexcept {
  std::int64_t phi = 1;
  for (std::int64_t p : ps.primes()) phi *= p - 1;
  return phi;
}

std::string_view to_string(ResidueClass c) noexcept {
  switch (c) {
    case ResidueClass::Zero: return "Zero";
    case ResidueClass::QR: return "QR";
    case ResidueClass::QNR: return "QNR";
  }
  return "?";
}

std::string_view to_string(GlobalClass c) noexcept {
  switch (c) {
    case GlobalClass::Zero: return "Zero";
    case GlobalClass::NonUnitNonZero: return "NonUnitNonZero";
    case GlobalClass::QR_N: return "QR_N";
    case GlobalClass::JplusNotQR: return "JplusNotQR";
    case GlobalClass::Jminus: return "Jminus";
  }
  return "?";
}

int legendre_symbol(std::int64_t a, std::int64_t p) noexcept {
  std::int64_t r = ((a % p) + p) % p;
  if (r == 0) return 0;
  return pow_mod(r, (p - 1) / 2, p) == 1 ? 1 : -1;
}

namespace {

void check_range(std::int64_t z, const PrimeSet& ps) {
  if (z < 0 || z >= ps.modulus())
    throw Error(Errc::CoordOutOfRange, std::to_string(z) + " is outside [0, " +
                                           std::to_string(ps.modulus()) + ")");
}

}  // namespace

int jacobi_symbol(std::int64_t z, const PrimeSet& ps) {
  check_range(z, ps);
  int sign = 1;
  for (std::int64_t p : ps.primes()) sign *= legendre_symbol(z, p);
  return sign;
}

int ResidueProfile::qnr_positions() const noexcept {
  return static_cast<int>(std::count(per_prime.begin(), per_prime.end(), ResidueClass::QNR));
}

int ResidueProfile::zero_positions() const noexcept {
  return static_cast<int>(std::count(per_prime.begin(), per_prime.end(), ResidueClass::Zero));
}

ResidueProfile classify(std::int64_t z, const PrimeSet& ps) {
  check_range(z, ps);
  ResidueProfile out;
  out.z = z;
  out.per_prime.reserve(ps.size());
  int sign = 1;
  for (std::int64_t p : ps.primes()) {
    int l = legendre_symbol(z, p);
    sign *= l;
    out.per_prime.push_back(l == 0 ? ResidueClass::Zero
                                   : (l == 1 ? ResidueClass::QR : ResidueClass::QNR));
  }
  out.unit = out.zero_positions() == 0;
  out.jacobi = out.unit ? sign : 0;
  if (z == 0)
    out.global = GlobalClass::Zero;
  else if (!out.unit)
    out.global = GlobalClass::NonUnitNonZero;
  else if (out.qnr_positions() == 0)
    out.global = GlobalClass::QR_N;
  else if (out.jacobi == 1)
    out.global = GlobalClass::JplusNotQR;
  else
    out.global = GlobalClass::Jminus;
  return out;
}

std::vector<std::int64_t> crt_split(std::int64_t z, const PrimeSet& ps) {
  check_range(z, ps);
  std::vector<std::int64_t> coords;
  coords.reserve(ps.size());
  for (std::int64_t p : ps.primes()) coords.push_back(z % p);
  return coords;
}

std::int64_t crt_join(std::span<const std::int64_t> coords, const PrimeSet& ps) {
  if (coords.size() != ps.size())
    throw Error(Errc::CoordOutOfRange, "expected " + std::to_string(ps.size()) +
                                           " coordinates, got " + std::to_string(coords.size()));
  const std::int64_t n = ps.modulus();
  std::int64_t z = 0;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    const std::int64_t p = ps.prime(i);
    if (coords[i] < 0 || coords[i] >= p)
      throw Error(Errc::CoordOutOfRange, "coordinate " + std::to_string(coords[i]) +
                                             " is outside [0, " + std::to_string(p) + ")");
    const std::int64_t m = n / p;
    // m^(p-2) is the inverse of m mod p.
    const std::int64_t inv = pow_mod(m % p, p - 2, p);
    const std::int64_t term = static_cast<std::int64_t>(
        (static_cast<__int128>(coords[i]) * inv % p) * m % n);
    z = (z + term) % n;
  }
  return z;
}

ResidueTable::ResidueTable(const PrimeSet& ps)
    : primes_(ps), member_(static_cast<std::size_t>(ps.modulus()), 0) {
  const std::int64_t n = ps.modulus();
  for (std::int64_t x = 1; x < n; ++x) {
    if (gcd(x, n) != 1) continue;
    member_[static_cast<std::size_t>(x * x % n)] = 1;
  }
  for (std::int64_t z = 0; z < n; ++z)
    if (member_[static_cast<std::size_t>(z)]) residues_.push_back(z);
}

std::vector<std::int64_t> quadratic_residues(const PrimeSet& ps) {
  ResidueTable table(ps);
  return {table.residues().begin(), table.residues().end()};
}

std::vector<std::int64_t> quadratic_residues_by_crt(const PrimeSet& ps) {
  // Enumerate tuples of per-prime residues and join them.
  std::vector<std::vector<std::int64_t>> per_prime;
  for (std::int64_t p : ps.primes()) {
    std::vector<std::int64_t> qr;
    for (std::int64_t a = 1; a < p; ++a)
      if (legendre_symbol(a, p) == 1) qr.push_back(a);
    per_prime.push_back(std::move(qr));
  }
  std::vector<std::int64_t> out;
  std::vector<std::size_t> idx(per_prime.size(), 0);
  std::vector<std::int64_t> coords(per_prime.size());
  while (true) {
    for (std::size_t i = 0; i < idx.size(); ++i) coords[i] = per_prime[i][idx[i]];
    out.push_back(crt_join(coords, ps));
    std::size_t i = 0;
    while (i < idx.size() && ++idx[i] == per_prime[i].size()) idx[i++] = 0;
    if (i == idx.size()) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool minus_one_is_qr(const PrimeSet& ps) {
  return ResidueTable(ps).contains(ps.modulus() - 1);
}

Cardinalities enumerate_cardinalities(const PrimeSet& ps) {
  Cardinalities c;
  for (std::int64_t z = 0; z < ps.modulus(); ++z) {
    ResidueProfile prof = classify(z, ps);
    if (!prof.unit) continue;
    ++c.phi;
    if (prof.global == GlobalClass::QR_N) ++c.qr;
    if (prof.jacobi == 1) ++c.jacobi_plus;
    if (prof.jacobi == -1) ++c.jacobi_minus;
  }
  return c;
}

}  // namespace paleytype
