#include "straightknot/error.hpp"

namespace sk {

const char* kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::EdgeDegree: return "EdgeDegree";
    case ErrorKind::MultiComponent: return "MultiComponent";
    case ErrorKind::NonPlanar: return "NonPlanar";
    case ErrorKind::BadOrientation: return "BadOrientation";
    case ErrorKind::InvalidGauss: return "InvalidGauss";
    case ErrorKind::NotPermutation: return "NotPermutation";
    case ErrorKind::CrossingArches: return "CrossingArches";
    case ErrorKind::MalformedCode: return "MalformedCode";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::Io: return "Io";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::InvalidPd: return "InvalidPd";
    case ErrorKind::NotAKnot: return "NotAKnot";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::RegionInvalid: return "RegionInvalid";
    case ErrorKind::NotAlternating: return "NotAlternating";
    case ErrorKind::SpecInvalid: return "SpecInvalid";
    case ErrorKind::NonPrime: return "NonPrime";
  }
  return "Unknown";
}

}  // namespace sk
