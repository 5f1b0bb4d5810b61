#pragma once

#include <string>
#include <vector>

namespace eisenspec::cli {

struct ClaimResult {
    std::string claim;
    bool pass = false;
    bool skipped = false;
    std::string detail;
};

const std::vector<std::string>& reproduce_targets();

/// Throws std::invalid_argument for an unknown target.
std::vector<ClaimResult> reproduce(const std::string& target, int threads);

}  // namespace eisenspec::cli
