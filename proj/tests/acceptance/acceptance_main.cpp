// One line per acceptance criterion; exit status 1 if any fails.
#include <cstdio>
#include <exception>

#include "qes/verification.hpp"

int main() {
  try {
    const auto results = qes::verify::run();
    int failed = 0;
    for (const auto& r : results) {
      std::printf("%s criterion %2d %-18s %s\n", r.passed ? "PASS" : "FAIL", r.criterion, r.name.c_str(),
                  r.summary.c_str());
      if (!r.passed) ++failed;
    }
    std::printf("%zu/%zu criteria passed\n", results.size() - failed, results.size());
    return failed == 0 ? 0 : 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "acceptance: %s\n", e.what());
    return 1;
  }
}
