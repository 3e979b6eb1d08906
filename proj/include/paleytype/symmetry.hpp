#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "paleytype/graph.hpp"
#include "paleytype/numtheory.hpp"

namespace paleytype {

/// x -> scale * x + shift (mod modulus).
struct AffineMap {
  std::int64_t scale = 1;
  std::int64_t shift = 0;
  std::int64_t modulus = 1;

  Vertex operator()(Vertex x) const noexcept {
    return static_cast<Vertex>((scale * x + shift) % modulus);
  }
  Permutation to_permutation() const;
  friend bool operator==(const AffineMap&, const AffineMap&) = default;
};

/// this after other: x -> this(other(x)).
AffineMap compose(const AffineMap& outer, const AffineMap& inner);

/// N * phi(N) / 2^n.
std::int64_t automorphism_formula(const PrimeSet& ps) noexcept;

/// Every x -> s*x + t with s in QR_N and t in Z_N, ordered by (s, t).
std::vector<AffineMap> affine_automorphisms(const PrimeSet& ps);

/// Translation by one plus multiplication by each non-identity s in QR_N.
/// Generates the same group as affine_automorphisms().
std::vector<AffineMap> affine_generators(const PrimeSet& ps);

bool preserves_adjacency(const Graph& g, std::span<const Vertex> perm);

struct AffineFamilyCheck {
  std::int64_t count = 0;
  bool distinct = false;
  bool all_preserve = false;
  /// True when every map was checked against every edge; otherwise the
  /// multiplier subgroup property was checked for all s and edge
  /// preservation on a deterministic sample of maps.
  bool exhaustive = false;
  std::int64_t maps_checked = 0;
};

inline constexpr int kExhaustiveAffineLimit = 300;

AffineFamilyCheck verify_affine_family(const PrimeSet& ps, const Graph& g,
                                       int exhaustive_limit = kExhaustiveAffineLimit);

struct AutSearchResult {
  std::uint64_t count = 0;
  /// Base points in the order they were fixed, with the orbit size of each
  /// under the stabilizer of the earlier ones. count = product of orbits.
  std::vector<Vertex> base;
  std::vector<std::uint64_t> orbit_sizes;
  /// One automorphism per non-trivial orbit element discovered by search;
  /// together they generate the whole group.
  std::vector<Permutation> generators;
  std::uint64_t nodes = 0;
};

inline constexpr std::uint64_t kDefaultAutBudget = 10'000'000;

/// Exact automorphism group order by individualization-refinement
/// backtracking and the orbit-stabilizer product. Throws
/// Error{BudgetExceeded} once more than `budget` search nodes are visited.
AutSearchResult search_automorphisms(const Graph& g, std::uint64_t budget = kDefaultAutBudget);

std::uint64_t brute_force_aut_count(const Graph& g, std::uint64_t budget = kDefaultAutBudget);

struct Transitivity {
  bool vertex_transitive = false;
  bool edge_transitive = false;
};

/// Orbits of vertex 0 and of the edge (0, smallest neighbor of 0) under the
/// group generated by `auts`. Every element of `auts` must be an automorphism.
Transitivity transitivity_check(const Graph& g, std::span<const Permutation> auts);

struct HammackReport {
  bool connected = false;
  bool non_bipartite = false;
  bool r_thin = false;
  double least_eigenvalue = 0.0;
  int degree = 0;
  std::uint64_t product_count = 0;
  std::vector<std::uint64_t> factor_counts;
  bool holds = false;
};

/// Checks |Aut(Gamma_N)| = prod |Aut(Gamma_p_i)| together with the
/// hypotheses of unique prime factorization for Kronecker products (connected,
/// non-bipartite by the spectral certificate, R-thin).
HammackReport hammack_assembly(const PrimeSet& ps, std::uint64_t budget = kDefaultAutBudget);

/// Same, with |Aut(Gamma_N)| already computed; only the factors are searched.
HammackReport hammack_assembly_with_count(const PrimeSet& ps, std::uint64_t product_count,
                                          std::uint64_t budget = kDefaultAutBudget);

/// Throws Error{PreconditionFailed} naming the failed hypothesis.
bool hammack_assembly_check(const PrimeSet& ps, std::uint64_t budget = kDefaultAutBudget);

struct AutReport {
  std::int64_t formula_count = 0;
  std::int64_t affine_count = 0;
  bool affine_verified = false;
  std::optional<std::uint64_t> brute_force_count;
  bool vertex_transitive = false;
  bool edge_transitive = false;
};

/// Brute force is attempted only when the order is at most `brute_force_limit`.
AutReport aut_report(const PrimeSet& ps, int brute_force_limit, std::uint64_t budget = kDefaultAutBudget);

}  // namespace paleytype
