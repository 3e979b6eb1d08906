#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "paleytype/numtheory.hpp"

namespace paleytype {

struct VerifyOptions {
  double tolerance = 1e-6;
  /// Reconcile tolerance used instead of `tolerance` when it is looser and
  /// the graph has more than kLargeSpectrumOrder vertices.
  double large_tolerance = 1e-5;
  std::uint64_t budget = 10'000'000;
  int max_connectivity_order = 300;
  int max_aut_order = 250;
  int max_cycle_order = 250;
  int max_eigen_order = 1200;
  bool witnesses = true;
};

inline constexpr int kLargeSpectrumOrder = 500;

enum class CheckStatus { Pass, Fail, Skipped };

std::string_view to_string(CheckStatus s) noexcept;

struct CheckResult {
  std::string tag;
  std::string claim;
  CheckStatus status = CheckStatus::Skipped;
  std::string reason;
  nlohmann::json detail = nlohmann::json::object();
  double elapsed_ms = 0.0;
};

struct VerifyReport {
  PrimeSet primes;
  std::vector<CheckResult> checks;

  bool ok() const noexcept;
  const CheckResult* find(std::string_view tag) const noexcept;
};

/// Runs every structural claim about Gamma_N in a fixed order. Checks whose
/// cost guard is exceeded are reported as Skipped, never as Fail.
VerifyReport run_verify(const PrimeSet& ps, const VerifyOptions& opts = {});

}  // namespace paleytype
