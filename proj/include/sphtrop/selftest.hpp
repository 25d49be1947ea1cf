#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sphtrop {

struct SuiteResult {
    std::string name;
    bool passed;
    std::string detail;
};

/// Quick invariant suites over every module; all draws come from `seed`.
std::vector<SuiteResult> run_selftest(std::uint64_t seed = 1);

}  // namespace sphtrop
