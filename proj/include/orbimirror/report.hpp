#pragma once

#include <string>
#include <vector>

namespace orbimirror {

// One named verification with an optional first-failure witness.
struct CheckResult {
    std::string name;
    bool pass = true;
    std::string witness; // empty when passing
};

inline bool all_pass(const std::vector<CheckResult>& checks) {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

} // namespace orbimirror
