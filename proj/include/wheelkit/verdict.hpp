#pragma once

#include <algorithm>
#include <string>
#include <string_view>
#include <vector>

namespace wheelkit {

struct Violation {
    std::string condition;  // short tag, e.g. "i", "vi", "edge", "uncolored"
    std::string detail;     // human-readable witness
};

/// Result of a certificate check; valid iff no violations were recorded.
struct Verdict {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
    explicit operator bool() const { return ok(); }
    bool has(std::string_view condition) const {
        return std::any_of(violations.begin(), violations.end(),
                           [&](const Violation& v) { return v.condition == condition; });
    }
    void add(std::string condition, std::string detail) {
        violations.push_back({std::move(condition), std::move(detail)});
    }
};

}  // namespace wheelkit
