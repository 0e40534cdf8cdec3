#pragma once

// End-to-end acceptance checks, shared by the acceptance test binary and the
// `selftest` subcommand. Every check is exact; the only tolerance is the
// wall-clock limit on the (Z/2, Z/4) enumeration.

#include <ostream>
#include <string>
#include <vector>

namespace bcg::acceptance {

inline constexpr double kEnumerationTimeLimitSeconds = 30.0;

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

/// Runs criteria 1 to 9 in order and prints one PASS/FAIL line per criterion.
std::vector<CriterionResult> run_all(std::ostream& out, unsigned parallel = 1);

}  // namespace bcg::acceptance
