#pragma once

#include <string>
#include <vector>

namespace primetree {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

// Quick oracle checks behind `primetree selftest`.
std::vector<CheckResult> run_selftest();

}  // namespace primetree
