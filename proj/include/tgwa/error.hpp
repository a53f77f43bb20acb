#pragma once

#include <stdexcept>
#include <string>

namespace tgwa {

enum class ErrorKind {
  DivisionByZero,
  FieldMismatch,
  ZeroInput,
  RingMismatch,
  SingularAffineMap,
  UnsupportedAutomorphismShape,
  InfiniteOrder,
  NonCommutingSigmas,
  ZeroT,
  ZeroMu,
  NotTypeA1n,
  ProfileMismatch,
  DenominatorVanishes,
  ZeroLambda2,
  CoprimalityViolation,
  FiniteOrbitUnsupported,
  PositionOutsideSupport,
  RelationViolated,
  SpinInconclusive,
  WindowTooSmall,
  UnsupportedResidueComputation,
  InvalidArgument,
  SyntaxError,
  SchemaError,
  UnsupportedFeature,
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what),
        kind_(kind),
        detail_(what) {}
  ErrorKind kind() const { return kind_; }
  // Message without the kind prefix.
  const std::string& detail() const { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

}  // namespace tgwa
