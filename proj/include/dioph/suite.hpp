#pragma once

// Cross-module verification suites: small exhaustive instances checked end to end.

#include <cstdint>
#include <string>
#include <vector>

namespace dioph {

struct SuiteCheck {
    std::string name;
    std::string topic;  // the statement the check exercises
    bool passed = false;
    std::string detail;
    double seconds = 0;
};

struct SuiteReport {
    std::string suite;
    std::uint64_t seed = 0;
    double budget_seconds = 0;
    std::vector<SuiteCheck> checks;
    bool complete = true;  // false when the budget ran out before every check was run

    bool passed() const;
};

inline constexpr std::uint64_t kDefaultSeed = 20240611;

const std::vector<std::string>& suite_names();

/// Runs the named suite ("prop21", "prop51", "prop61", "potpourri"); throws std::invalid_argument
/// on an unknown name. Checks that would start after the budget is spent are skipped and the
/// report is marked incomplete.
SuiteReport run_verification_suite(const std::string& name, double budget_seconds = 120,
                                   std::uint64_t seed = kDefaultSeed);

}  // namespace dioph
