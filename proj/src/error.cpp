#include "tgwa/error.hpp"

namespace tgwa {

const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::ZeroInput: return "ZeroInput";
    case ErrorKind::RingMismatch: return "RingMismatch";
    case ErrorKind::SingularAffineMap: return "SingularAffineMap";
    case ErrorKind::UnsupportedAutomorphismShape: return "UnsupportedAutomorphismShape";
    case ErrorKind::InfiniteOrder: return "InfiniteOrder";
    case ErrorKind::NonCommutingSigmas: return "NonCommutingSigmas";
    case ErrorKind::ZeroT: return "ZeroT";
    case ErrorKind::ZeroMu: return "ZeroMu";
    case ErrorKind::NotTypeA1n: return "NotTypeA1n";
    case ErrorKind::ProfileMismatch: return "ProfileMismatch";
    case ErrorKind::DenominatorVanishes: return "DenominatorVanishes";
    case ErrorKind::ZeroLambda2: return "ZeroLambda2";
    case ErrorKind::CoprimalityViolation: return "CoprimalityViolation";
    case ErrorKind::FiniteOrbitUnsupported: return "FiniteOrbitUnsupported";
    case ErrorKind::PositionOutsideSupport: return "PositionOutsideSupport";
    case ErrorKind::RelationViolated: return "RelationViolated";
    case ErrorKind::SpinInconclusive: return "SpinInconclusive";
    case ErrorKind::WindowTooSmall: return "WindowTooSmall";
    case ErrorKind::UnsupportedResidueComputation: return "UnsupportedResidueComputation";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::SchemaError: return "SchemaError";
    case ErrorKind::UnsupportedFeature: return "UnsupportedFeature";
  }
  return "Error";
}

}  // namespace tgwa
