#pragma once

// Fast built-in invariant suite covering every module; used by the CLI
// selftest command.

#include <cstddef>
#include <string>
#include <vector>

namespace setrec {

struct SelfTestReport {
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::vector<std::string> failures;  // names of failed checks

    bool ok() const { return failed == 0; }
};

SelfTestReport run_selftest();

}  // namespace setrec
