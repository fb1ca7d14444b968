#pragma once

#include "faulhaber/report.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace faulhaber {

struct SuiteInfo {
    std::string_view name;
    long default_max;
    long minimum_max;
    std::string_view summary;
};

/// Every runnable suite, in the order `all` runs them.
const std::vector<SuiteInfo>& verification_suites();

std::optional<SuiteInfo> find_suite(std::string_view name);

/// Runs one named suite up to `max` (the suite default when empty).
/// Throws std::invalid_argument on an unknown name or a max below the suite
/// minimum.
VerificationReport run_suite(std::string_view name, std::optional<long> max);

}  // namespace faulhaber
