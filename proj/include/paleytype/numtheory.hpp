#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace paleytype {

/// Ordered set of distinct primes p1 < p2 < ... < pn, each congruent to 1 mod 4.
/// Only obtainable through validate_primes(), so every instance is valid.
class PrimeSet {
 public:
  std::span<const std::int64_t> primes() const noexcept { return primes_; }
  std::int64_t prime(std::size_t i) const { return primes_.at(i); }
  std::size_t size() const noexcept { return primes_.size(); }
  /// The modulus N = p1 * ... * pn.
  std::int64_t modulus() const noexcept { return modulus_; }

  /// "5,13" style rendering, matching the CLI input syntax.
  std::string to_string() const;

  friend bool operator==(const PrimeSet&, const PrimeSet&) = default;

 private:
  friend PrimeSet validate_primes(std::span<const std::int64_t> raw);
  PrimeSet(std::vector<std::int64_t> primes, std::int64_t modulus)
      : primes_(std::move(primes)), modulus_(modulus) {}

  std::vector<std::int64_t> primes_;
  std::int64_t modulus_ = 1;
};

/// Largest modulus accepted by validate_primes.
inline constexpr std::int64_t kMaxModulus = 10'000'000;

/// Throws Error{Empty|NotPrime|NotPythagorean|Duplicate|NotAscending|TooLarge}.
/// Unsorted input is rejected, never normalized.
PrimeSet validate_primes(std::span<const std::int64_t> raw);
PrimeSet validate_primes(std::initializer_list<std::int64_t> raw);

bool is_prime(std::int64_t n) noexcept;
std::int64_t gcd(std::int64_t a, std::int64_t b) noexcept;
std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t mod) noexcept;

/// phi(N) = prod (p_i - 1).
std::int64_t euler_phi(const PrimeSet& ps) noexcept;

enum class ResidueClass : std::uint8_t { Zero, QR, QNR };

enum class GlobalClass : std::uint8_t {
  Zero,
  NonUnitNonZero,
  QR_N,
  JplusNotQR,
  Jminus,
};

std::string_view to_string(ResidueClass c) noexcept;
std::string_view to_string(GlobalClass c) noexcept;

/// Legendre symbol (a/p) by Euler's criterion; returns 0, +1 or -1.
int legendre_symbol(std::int64_t a, std::int64_t p) noexcept;

/// Product of the per-prime Legendre symbols; 0 for non-units.
int jacobi_symbol(std::int64_t z, const PrimeSet& ps);

struct ResidueProfile {
  std::int64_t z = 0;
  std::vector<ResidueClass> per_prime;
  bool unit = false;
  int jacobi = 0;
  GlobalClass global = GlobalClass::Zero;

  /// Number of QNR coordinates (the "r" of the difference-count cases).
  int qnr_positions() const noexcept;
  int zero_positions() const noexcept;
};

/// Throws Error{CoordOutOfRange} unless 0 <= z < N.
ResidueProfile classify(std::int64_t z, const PrimeSet& ps);

std::vector<std::int64_t> crt_split(std::int64_t z, const PrimeSet& ps);
/// Inverse of crt_split; throws Error{CoordOutOfRange} for coords outside [0, p_i).
std::int64_t crt_join(std::span<const std::int64_t> coords, const PrimeSet& ps);

/// Quadratic residues among the units of Z_N, obtained by squaring every
/// unit. Holds both the sorted list and an O(1) membership bitmap.
class ResidueTable {
 public:
  explicit ResidueTable(const PrimeSet& ps);

  const PrimeSet& primes() const noexcept { return primes_; }
  std::int64_t modulus() const noexcept { return primes_.modulus(); }
  std::span<const std::int64_t> residues() const noexcept { return residues_; }
  std::size_t size() const noexcept { return residues_.size(); }

  bool contains(std::int64_t z) const noexcept {
    return z >= 0 && z < modulus() && member_[static_cast<std::size_t>(z)] != 0;
  }

 private:
  PrimeSet primes_;
  std::vector<std::int64_t> residues_;
  std::vector<std::uint8_t> member_;
};

/// Sorted QR_N by squaring all units mod N.
std::vector<std::int64_t> quadratic_residues(const PrimeSet& ps);

/// Sorted QR_N by per-prime Legendre tests combined through the CRT.
/// Independent route used to cross-check quadratic_residues().
std::vector<std::int64_t> quadratic_residues_by_crt(const PrimeSet& ps);

/// Whether N - 1 is a square of a unit mod N.
bool minus_one_is_qr(const PrimeSet& ps);

struct Cardinalities {
  std::int64_t phi = 0;
  std::int64_t qr = 0;
  std::int64_t jacobi_plus = 0;
  std::int64_t jacobi_minus = 0;
};

/// Counts obtained by enumerating and classifying every z in Z_N.
Cardinalities enumerate_cardinalities(const PrimeSet& ps);

}  // namespace paleytype
