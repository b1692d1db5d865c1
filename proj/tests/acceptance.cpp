#include <cstdio>

#include "selftest.hpp"

// One line per acceptance criterion; the exit status is nonzero when any fails.
int main() {
  int failed = 0;
  tsurf::selftest::run_all(1, [&](const tsurf::selftest::CriterionResult& r) {
    std::fputs(tsurf::selftest::format_line(r).c_str(), stdout);
    std::fflush(stdout);
    failed += !r.pass;
  });
  std::printf("%d criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}
