#pragma once

#include <functional>
#include <string>
#include <vector>

#include "cskew/bifurcation.hpp"
#include "cskew/config.hpp"

namespace cskew {

// Fixed families used by the acceptance suite.
BifFamily family_case_ia();       // f1 = moebius(16,1,0) + t, f1'(1) = 4, C = 1/2
BifFamily family_case_ii();       // f1 = moebius(2,1,0) + t, exit point sqrt(2) - 1
BifFamily family_reference_shift(const RunConfig& cfg);  // the configured f1 shifted by t

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

int criterion_count();
CriterionResult run_criterion(int id, const RunConfig& cfg);
std::vector<CriterionResult> run_suite(const RunConfig& cfg,
                                       const std::function<void(const CriterionResult&)>& on_done = {});

}  // namespace cskew
