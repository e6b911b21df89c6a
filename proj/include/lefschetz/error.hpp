#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lefschetz {

enum class ErrorCode {
  RankMismatch,
  NotDivisible,
  SingularElement,
  GenericNotEvaluable,
  ZeroWeight,
  WrongOperatorKind,
  ZeroTangentWeight,
  InvalidScenario,
  MissingPointEntry,
  KindMismatch,
  SharedPointMismatch,
  UnsupportedDenominator,
  SingularRegularVector,
  InvalidRootSystem,
  GroupTooLarge,
  SingularLambda,
  NonIntegralLambda,
  NegativeTruncation,
  RadiusOutOfRange,
  InvalidTestFunction,
  ParseError,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the engine. The code is what callers dispatch on
/// (the CLI maps codes to exit statuses); the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code), detail_(message) {}

  ErrorCode code() const noexcept { return code_; }
  /// The message without the code prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace lefschetz
