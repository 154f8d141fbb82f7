// One PASS/FAIL line per acceptance criterion; nonzero exit if any fails.

#include <cstdio>

#include "nanores/verification.hpp"

int main() {
  using namespace nanores::verification;
  const auto results = run_all();
  bool all = true;
  for (const auto& r : results) {
    all = all && r.passed;
    std::printf("%s [%d] %s (%.3g s)\n", r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(), r.seconds);
    for (const auto& m : r.measurements) {
      if (m.target != 0.0)
        std::printf("    %-4s %-36s %.6g (target %.6g +- %.3g)\n", m.passed ? "ok" : "BAD", m.name.c_str(), m.value,
                    m.target, m.tolerance);
      else
        std::printf("    %-4s %-36s %.6g (< %.3g)\n", m.passed ? "ok" : "BAD", m.name.c_str(), m.value, m.tolerance);
    }
  }
  std::printf("%s\n", all ? "acceptance: all criteria passed" : "acceptance: FAILED");
  return all ? 0 : 1;
}
