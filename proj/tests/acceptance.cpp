// Acceptance gate: runs every catalog experiment once and prints one
// pass/fail line per criterion. Exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>

#include "khess/experiments.hpp"

int main() {
  const std::uint64_t seed = 20260823;
  int failures = 0;
  int criterion = 0;
  for (const auto& entry : khess::experiment_catalog()) {
    ++criterion;
    const auto t0 = std::chrono::steady_clock::now();
    bool pass = false;
    std::string note;
    try {
      const khess::json result = entry.run(seed);
      pass = result.value("pass", false);
    } catch (const std::exception& e) {
      note = std::string(" (") + e.what() + ")";
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s criterion %d: %-22s [%s] %.1fs%s\n", pass ? "PASS" : "FAIL",
                criterion, entry.id.c_str(), entry.anchor.c_str(), secs, note.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
