#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace paleytype {

enum class Errc {
  Empty,
  NotPrime,
  NotPythagorean,
  Duplicate,
  NotAscending,
  TooLarge,
  CoordOutOfRange,
  InvalidArgument,
  VerificationFailed,
  NoConvergence,
  BudgetExceeded,
  PreconditionFailed,
  Inconclusive,
  Parse,
};

std::string_view errc_name(Errc code) noexcept;

// All library failures are reported through this type; code() identifies the
// contract violation, what() carries a message naming the offending input.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace paleytype
