#include "cskew/errors.hpp"

namespace cskew {

const char* error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DomainEscape: return "DomainEscape";
    case ErrorCode::EmptyInterval: return "EmptyInterval";
    case ErrorCode::ResourceLimit: return "ResourceLimit";
    case ErrorCode::NonTerminating: return "NonTerminating";
    case ErrorCode::DegenerateDenominator: return "DegenerateDenominator";
    case ErrorCode::NotParabolic: return "NotParabolic";
    case ErrorCode::NoFixedPoint: return "NoFixedPoint";
    case ErrorCode::NotHyperbolicPair: return "NotHyperbolicPair";
    case ErrorCode::CouplingHypothesisViolated: return "CouplingHypothesisViolated";
    case ErrorCode::NotDisjoint: return "NotDisjoint";
    case ErrorCode::ContainsZeroSequence: return "ContainsZeroSequence";
    case ErrorCode::CrossingViolated: return "CrossingViolated";
    case ErrorCode::NoContraction: return "NoContraction";
    case ErrorCode::NoExitCase: return "NoExitCase";
    case ErrorCode::NoSignChange: return "NoSignChange";
    case ErrorCode::ConfigError: return "ConfigError";
  }
  return "Unknown";
}

}  // namespace cskew
