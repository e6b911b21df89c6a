#include "lefschetz/error.hpp"

namespace lefschetz {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::RankMismatch: return "RankMismatch";
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::SingularElement: return "SingularElement";
    case ErrorCode::GenericNotEvaluable: return "GenericNotEvaluable";
    case ErrorCode::ZeroWeight: return "ZeroWeight";
    case ErrorCode::WrongOperatorKind: return "WrongOperatorKind";
    case ErrorCode::ZeroTangentWeight: return "ZeroTangentWeight";
    case ErrorCode::InvalidScenario: return "InvalidScenario";
    case ErrorCode::MissingPointEntry: return "MissingPointEntry";
    case ErrorCode::KindMismatch: return "KindMismatch";
    case ErrorCode::SharedPointMismatch: return "SharedPointMismatch";
    case ErrorCode::UnsupportedDenominator: return "UnsupportedDenominator";
    case ErrorCode::SingularRegularVector: return "SingularRegularVector";
    case ErrorCode::InvalidRootSystem: return "InvalidRootSystem";
    case ErrorCode::GroupTooLarge: return "GroupTooLarge";
    case ErrorCode::SingularLambda: return "SingularLambda";
    case ErrorCode::NonIntegralLambda: return "NonIntegralLambda";
    case ErrorCode::NegativeTruncation: return "NegativeTruncation";
    case ErrorCode::RadiusOutOfRange: return "RadiusOutOfRange";
    case ErrorCode::InvalidTestFunction: return "InvalidTestFunction";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "UnknownError";
}

}  // namespace lefschetz
