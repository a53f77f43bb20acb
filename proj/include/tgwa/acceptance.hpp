#pragma once

#include <string>
#include <vector>

namespace tgwa {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  int checks = 0;
  std::vector<std::string> failures;  // first few
  double seconds = 0;
  double limit = 0;  // runtime bound in seconds
  std::string line(bool timing = true) const;
};

struct AcceptanceOptions {
  // Directory holding the cylinder goldens; empty skips the file comparison.
  std::string golden_dir;
};

constexpr int kCriterionCount = 8;

CriterionResult run_criterion(int id, const AcceptanceOptions& opt = {});
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt = {});

// Names of the cylinder golden files, paired with their rendered contents.
std::vector<std::pair<std::string, std::string>> cylinder_goldens();

}  // namespace tgwa
