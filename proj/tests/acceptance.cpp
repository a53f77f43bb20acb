#include <cstdio>

#include "tgwa/acceptance.hpp"

int main() {
  tgwa::AcceptanceOptions opt;
  opt.golden_dir = TGWA_GOLDEN_DIR;
  bool all = true;
  for (const auto& r : tgwa::run_acceptance(opt)) {
    std::printf("%s\n", r.line().c_str());
    std::fflush(stdout);
    all = all && r.passed;
  }
  return all ? 0 : 1;
}
