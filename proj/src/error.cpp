#include "paleytype/error.hpp"

namespace paleytype {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::Empty: return "Empty";
    case Errc::NotPrime: return "NotPrime";
    case Errc::NotPythagorean: return "NotPythagorean";
    case Errc::Duplicate: return "Duplicate";
    case Errc::NotAscending: return "NotAscending";
    case Errc::TooLarge: return "TooLarge";
    case Errc::CoordOutOfRange: return "CoordOutOfRange";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::VerificationFailed: return "VerificationFailed";
    case Errc::NoConvergence: return "NoConvergence";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::PreconditionFailed: return "PreconditionFailed";
    case Errc::Inconclusive: return "Inconclusive";
    case Errc::Parse: return "Parse";
  }
  return "Unknown";
}

}  // namespace paleytype
