#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "mistab/limits.hpp"

namespace mistab {

/// One checked claim of the reference suite.
struct SuiteRow {
    std::string family;
    std::string parameter;
    std::string claim;
    std::string expected;
    std::string computed;
    bool pass = false;
};

struct SuiteOptions {
    /// Parameter values for the parameterized families. Families that need
    /// c >= 2 skip smaller entries.
    std::vector<int> c_values = {1, 2, 3};
    /// Overrides every family's default horizon when positive.
    int horizon_override = 0;
    /// Instances per randomized property block.
    int random_count = 50;
    Limits limits;
};

/// Runs every bundled family against its published stability data and the
/// randomized property blocks. One row per claim.
std::vector<SuiteRow> reference_suite(const SuiteOptions& options = {});

bool suite_passed(const std::vector<SuiteRow>& rows);
nlohmann::json suite_to_json(const std::vector<SuiteRow>& rows);

} // namespace mistab
