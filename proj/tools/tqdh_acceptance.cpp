#include <cstdio>
#include <cstdlib>
#include <exception>

#include "tqdh/acceptance.hpp"

int main() {
  tqdh::AcceptanceOptions opt;
  if (const char* s = std::getenv("TQDH_SAMPLES")) {
    long v = std::strtol(s, nullptr, 10);
    if (v > 0) opt.samples = v;
  }
  try {
    int failed = 0;
    for (const auto& c : tqdh::run_acceptance(opt)) {
      std::printf("[%s] %d. %s (%.2fs): %s\n", c.passed ? "PASS" : "FAIL", c.id, c.title.c_str(), c.seconds,
                  c.detail.c_str());
      failed += c.passed ? 0 : 1;
    }
    std::printf("%d/9 criteria passed\n", 9 - failed);
    return failed == 0 ? 0 : 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "acceptance aborted: %s\n", e.what());
    return 2;
  }
}
