#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

namespace faulhaber {

struct CheckResult {
    std::string label;
    bool pass = false;
    std::string detail;
};

/// Outcome of a batch of exact checks. Passes iff every check passes.
struct VerificationReport {
    std::string name;
    std::vector<CheckResult> checks;

    bool passed() const
    {
        return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
    }

    std::optional<CheckResult> first_failure() const
    {
        auto it = std::find_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.pass; });
        if (it == checks.end())
            return std::nullopt;
        return *it;
    }

    void add(std::string label, bool pass, std::string detail = {})
    {
        checks.push_back({std::move(label), pass, std::move(detail)});
    }
};

}  // namespace faulhaber
