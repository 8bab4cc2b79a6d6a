// Acceptance gate: runs the ten acceptance criteria and prints one pass/fail
// line per criterion. Exit status 0 only if every criterion passes.
#include <cstdio>
#include <iomanip>
#include <iostream>

#include "scrollift/acceptance.hpp"

int main() {
    const std::vector<scrollift::CriterionResult> results = scrollift::run_acceptance();
    bool all = true;
    for (const scrollift::CriterionResult& r : results) {
        std::cout << (r.pass ? "[PASS]" : "[FAIL]") << " criterion " << r.index << ": " << r.name;
        if (!r.detail.empty()) std::cout << " - " << r.detail;
        std::cout << " (" << std::fixed << std::setprecision(2) << r.seconds << " s)\n";
        all = all && r.pass;
    }
    std::cout << (all ? "acceptance: all criteria passed" : "acceptance: FAILURES above") << "\n";
    return all ? 0 : 1;
}
