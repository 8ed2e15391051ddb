#pragma once

#include <string>
#include <vector>

namespace spansub {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string details;
  double seconds = 0.0;
};

// The acceptance battery; every threshold is pinned in code.
//  smoke:        gallery generators and their self-validations only
//  desk:         all twelve criteria
//  exhaustive-5: the 5-vertex tournament sweep against the oracle
std::vector<CriterionResult> run_verify_suite(const std::string& level);

CriterionResult run_criterion(int id);

}  // namespace spansub
