#pragma once

#include <functional>
#include <string>
#include <vector>

#include "lcdunkl/config.hpp"

namespace lcd {

struct CheckResult {
    std::string name;
    double measured = 0;
    double bound = 0;
    bool pass = false;
};

// Runs every property check on the configuration's k, matrix, grids, windows,
// signal and parameters. Oracle comparisons that need O(n^3) work run on
// small grids chosen to satisfy the resolution guard for the configured
// matrix. `progress` is called after each check.
std::vector<CheckResult> run_validation(const RunConfig& cfg,
                                        const std::function<void(const CheckResult&)>& progress = {});

// {"checks": [{"check_name", "measured", "bound", "pass"}...], "passed", "failed"}
// with numbers at 17 significant digits.
std::string validation_report_json(const std::vector<CheckResult>& checks);

}  // namespace lcd
