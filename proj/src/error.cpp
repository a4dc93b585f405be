#include "stretchkit/error.hpp"

namespace stretchkit {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::EmptyGenerators: return "EmptyGenerators";
    case ErrorKind::InvalidGenerator: return "InvalidGenerator";
    case ErrorKind::GcdNotOne: return "GcdNotOne";
    case ErrorKind::NotMember: return "NotMember";
    case ErrorKind::TrivialSemigroup: return "TrivialSemigroup";
    case ErrorKind::GeneratorNotInRing: return "GeneratorNotInRing";
    case ErrorKind::BaseMismatch: return "BaseMismatch";
    case ErrorKind::ZeroIdeal: return "ZeroIdeal";
    case ErrorKind::UnitIdeal: return "UnitIdeal";
    case ErrorKind::NotNested: return "NotNested";
    case ErrorKind::NotStabilized: return "NotStabilized";
    case ErrorKind::NotAReduction: return "NotAReduction";
    case ErrorKind::OracleMismatch: return "OracleMismatch";
    case ErrorKind::TheoremViolation: return "TheoremViolation";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::CapExceeded: return "CapExceeded";
  }
  return "Unknown";
}

}  // namespace stretchkit
