#pragma once

#include <string>
#include <vector>

namespace ptlens {

// Accumulates invariant violations. Validators return a Report instead of
// throwing, so callers can collect every problem in one pass.
struct Report {
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }

    void add(std::string message) { violations.push_back(std::move(message)); }

    void merge(const Report& other) {
        violations.insert(violations.end(), other.violations.begin(),
                          other.violations.end());
    }
};

} // namespace ptlens
