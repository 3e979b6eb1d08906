#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string_view>
#include <vector>

#include "paleytype/graph.hpp"

namespace paleytype {

enum class CycleStatus : std::uint8_t { Found, ExhaustedNoCycle, BudgetExceeded };

std::string_view to_string(CycleStatus s) noexcept;

inline constexpr std::uint64_t kDefaultCycleBudget = 10'000'000;

struct CycleSearchOptions {
  std::uint64_t budget = kDefaultCycleBudget;
  /// Only cycles through vertex 0 are searched. Sound for vertex-transitive
  /// graphs; otherwise every start vertex s is tried in turn, restricted to
  /// cycles whose smallest vertex is s.
  bool vertex_transitive = false;
};

struct CycleSearchResult {
  CycleStatus status = CycleStatus::ExhaustedNoCycle;
  std::vector<Vertex> cycle;
  std::uint64_t nodes = 0;
};

/// k distinct vertices, consecutive ones adjacent, last adjacent to first.
bool is_valid_cycle(const Graph& g, std::span<const Vertex> cycle);

/// Deterministic depth-first search for a simple cycle on exactly k vertices,
/// extending paths through neighbors in ascending index order.
CycleSearchResult find_cycle_of_length(const Graph& g, int k, const CycleSearchOptions& opts = {});

CycleSearchResult hamiltonian_check(const Graph& g, const CycleSearchOptions& opts = {});

struct LengthOutcome {
  int length = 0;
  CycleStatus status = CycleStatus::ExhaustedNoCycle;
  std::uint64_t nodes = 0;
};

class CycleReport {
 public:
  int min_length() const noexcept { return 3; }
  int max_length() const noexcept { return order_; }

  const std::vector<LengthOutcome>& outcomes() const noexcept { return outcomes_; }
  const std::map<int, std::vector<Vertex>>& witnesses() const noexcept { return found_; }
  std::vector<int> missing() const;
  bool pancyclic() const noexcept;

 private:
  friend CycleReport pancyclicity_sweep(const Graph&, const CycleSearchOptions&);
  /// Re-validates the witness; throws Error{VerificationFailed} if invalid.
  void record(const Graph& g, int k, const CycleSearchResult& r);

  int order_ = 0;
  std::vector<LengthOutcome> outcomes_;
  std::map<int, std::vector<Vertex>> found_;
};

/// find_cycle_of_length for every k in [3, V]; opts.budget applies per length.
CycleReport pancyclicity_sweep(const Graph& g, const CycleSearchOptions& opts = {});

/// Diagonal sequence ((x_1, y_1), ..., (x_k, y_k)) in the Kronecker product
/// indexing x * h_order + y. Both cycles must have the same length.
std::vector<Vertex> diagonal_product_cycle(std::span<const Vertex> cycle_g,
                                           std::span<const Vertex> cycle_h, int h_order);

}  // namespace paleytype
