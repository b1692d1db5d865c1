#pragma once

#include <functional>
#include <string>
#include <vector>

namespace tsurf::selftest {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

// Runs the acceptance suite on built-in fixtures. `onResult` is called as each
// criterion finishes; the returned results are ordered by criterion.
std::vector<CriterionResult> run_all(int threads = 1, const std::function<void(const CriterionResult&)>& onResult = {});

std::string format_line(const CriterionResult& r);

}  // namespace tsurf::selftest
