#include <cstdio>

#include "pyramidal/acceptance.hpp"

int main() {
  int failed = 0;
  for (const auto& c : pyr::acceptance::criteria()) {
    const auto r = pyr::acceptance::run_criterion(c);
    std::printf("%s  criterion %2d  %-28s %8.3f s", r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(), r.seconds);
    if (r.limit_seconds > 0) std::printf(" (limit %g s)", r.limit_seconds);
    std::printf("  %s\n", r.detail.c_str());
    std::fflush(stdout);
    failed += !r.passed;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(pyr::acceptance::criteria().size()) - failed,
              pyr::acceptance::criteria().size());
  return failed == 0 ? 0 : 1;
}
