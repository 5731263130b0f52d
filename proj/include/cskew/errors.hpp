#pragma once

#include <stdexcept>
#include <string>

namespace cskew {

enum class ErrorCode {
  InvalidArgument = 1,
  DomainEscape,
  EmptyInterval,
  ResourceLimit,
  NonTerminating,
  DegenerateDenominator,
  NotParabolic,
  NoFixedPoint,
  NotHyperbolicPair,
  CouplingHypothesisViolated,
  NotDisjoint,
  ContainsZeroSequence,
  CrossingViolated,
  NoContraction,
  NoExitCase,
  NoSignChange,
  ConfigError,
};

const char* error_name(ErrorCode code);

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what, int step = -1)
      : std::runtime_error(what), code_(code), step_(step) {}

  ErrorCode code() const noexcept { return code_; }
  // index of the offending symbol for DomainEscape, -1 otherwise
  int step() const noexcept { return step_; }

private:
  ErrorCode code_;
  int step_;
};

}  // namespace cskew
