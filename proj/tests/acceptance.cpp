// Runs every acceptance criterion and prints one PASS/FAIL line per item.
#include <iostream>

#include "gaq/selftest.hpp"

int main() {
    const gaq::SelftestSummary s = gaq::run_selftest("", &std::cout);
    int failed = 0;
    for (const auto& r : s.results) failed += r.outcome.passed ? 0 : 1;
    std::cout << (s.results.size() - failed) << "/" << s.results.size() << " criteria passed in " << s.seconds
              << " s\n";
    return failed == 0 ? 0 : 1;
}
