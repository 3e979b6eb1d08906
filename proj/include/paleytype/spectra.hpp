#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "paleytype/graph.hpp"
#include "paleytype/numtheory.hpp"

namespace paleytype {

/// Per-prime choice of eigenvalue of the Paley graph factor:
/// Plain -> (p-1)/2, PlusRoot -> (sqrt(p)-1)/2, MinusRoot -> (-sqrt(p)-1)/2.
enum class Branch : std::uint8_t { Plain, PlusRoot, MinusRoot };

std::string_view to_string(Branch b) noexcept;

/// Numerator factor of one coordinate, kept symbolic: (p-1) for Plain,
/// (sign*sqrt(p) - 1) for the root branches.
struct ExactFactor {
  Branch branch = Branch::Plain;
  std::int64_t prime = 0;

  double value() const noexcept;
  std::string to_string() const;
};

struct SpectrumEntry {
  std::vector<Branch> branch;
  std::vector<ExactFactor> factors;
  double value = 0.0;
  std::int64_t multiplicity = 0;

  /// e.g. "(-sqrt(5)-1)*12/4"
  std::string radical() const;
};

struct SpectrumTable {
  PrimeSet primes;
  /// Descending by value.
  std::vector<SpectrumEntry> entries;

  std::int64_t total_multiplicity() const noexcept;
  double trace() const noexcept;
  double trace_of_square() const noexcept;
  /// Smallest gap between consecutive (distinct-expected) values.
  double min_gap() const noexcept;
};

/// All 3^n branch vectors with their product eigenvalue and multiplicity
/// prod over root positions of (p_i - 1)/2.
SpectrumTable closed_form_spectrum(const PrimeSet& ps);

/// Minimum-value entry. Throws Error{VerificationFailed} if it is not the
/// MinusRoot-at-p1 branch or does not exceed -degree.
SpectrumEntry least_eigenvalue(const PrimeSet& ps);

struct EigenResult {
  /// Ascending.
  std::vector<double> values;
  int sweeps = 0;
  /// Frobenius norm of the off-diagonal part at exit.
  double off_diagonal = 0.0;
};

inline constexpr int kDefaultMaxSweeps = 100;

/// Cyclic Jacobi rotation diagonalization of the symmetric row-major n x n
/// matrix `a`. Iterates until the off-diagonal Frobenius norm is below
/// tol / 100, which bounds every eigenvalue error by tol / 100.
/// Throws Error{NoConvergence} after max_sweeps sweeps.
EigenResult jacobi_eigenvalues(std::vector<double> a, int n, double tol,
                               int max_sweeps = kDefaultMaxSweeps);

struct EigenCluster {
  double value = 0.0;
  std::int64_t multiplicity = 0;
};

/// Groups sorted values whose consecutive gaps are at most `spacing`.
/// Output is descending by value.
std::vector<EigenCluster> cluster_eigenvalues(std::span<const double> values, double spacing);

/// Adjacency eigenvalues of g to within tol, clustered at spacing 10*tol.
std::vector<EigenCluster> numeric_spectrum(const Graph& g, double tol);

enum class ReconcileFailure : std::uint8_t { None, ValueGap, MismatchedMultiplicity };

std::string_view to_string(ReconcileFailure f) noexcept;

struct ReconcilePair {
  std::size_t entry = 0;
  std::size_t cluster = 0;
  double difference = 0.0;
};

struct ReconcileReport {
  bool ok = false;
  ReconcileFailure failure = ReconcileFailure::None;
  std::string message;
  std::vector<ReconcilePair> pairs;
  double max_difference = 0.0;
};

/// Greedy one-to-one matching of table entries (descending) to the nearest
/// unmatched cluster; values must agree within tol and multiplicities exactly.
ReconcileReport reconcile(const SpectrumTable& table, std::span<const EigenCluster> numeric,
                          double tol);

}  // namespace paleytype
