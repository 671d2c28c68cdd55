// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. `skel verify` runs the same checks.

#include "skeletal/acceptance.hpp"

#include <iostream>

int main() {
    const auto results = skeletal::acceptance::run_all(&std::cout);
    const bool ok = skeletal::acceptance::all_passed(results);
    std::cout << (ok ? "ALL CRITERIA PASSED" : "CRITERIA FAILED") << " (" << results.size()
              << " total)" << std::endl;
    return ok ? 0 : 1;
}
