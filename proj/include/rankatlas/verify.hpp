// Self-verification suite: re-derives the published inventory numbers and
// model invariants and reports one result per check. Two known deviations
// from the reference tables are marked documented_deviation; README.md
// carries the full analysis of both.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace rankatlas {

struct CheckResult {
    int criterion = 0;  // stable check-group number, 1..10
    std::string name;
    bool pass = false;
    // true when the mismatch against the reference tables is the documented,
    // reproducible discrepancy of this implementation rather than a defect
    bool documented_deviation = false;
    std::string detail;
};

struct VerifyOptions {
    bool full = true;          // false = fast n <= 2 subset
    std::uint64_t seed = 1729; // Monte-Carlo oracle and sampling seed
};

std::vector<CheckResult> run_acceptance_checks(const VerifyOptions& options = {});

}  // namespace rankatlas
