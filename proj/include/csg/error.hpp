#pragma once

#include <stdexcept>
#include <string>

namespace csg {

enum class ErrorKind {
  DivisionByZero,
  MixedFields,
  InfiniteField,
  UnknownField,
  Overflow,
  WrongGroup,
  InvalidAlgebra,
  MixedAlgebras,
  OddArgument,
  NoUnit,
  CheckFailed,
  ZeroAlpha,
  NotHurwitz,
  WrongCharacteristic,
  BadAutomorphism,
  NoCubeRoot,
  NotIsotropic,
  NotSplit,
  TripleNotZeroSum,
  SupportTooLarge,
  DimensionTooLarge,
  FieldConditionUnmet,
  InvalidGrading,
  Unsupported,
  Parse,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace csg
