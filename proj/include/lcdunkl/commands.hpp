#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "lcdunkl/config.hpp"
#include "lcdunkl/csv.hpp"

namespace lcd {

struct CommandOutput {
    CsvTable table;
    std::string sidecar_json;  // extremal only
};

// lambda, re, im, abs of the signal's transform on the frequency grid
CommandOutput cmd_transform(const RunConfig& cfg);
// alpha, beta, re, im, abs over scales x space grid
CommandOutput cmd_cwt(const RunConfig& cfg);
// epsilon, delta, l2_error over the nested windows
CommandOutput cmd_calderon(const RunConfig& cfg);
// y, re, im of f* at the last rho of the list; the sidecar has one record per rho
CommandOutput cmd_extremal(const RunConfig& cfg);
// x, y, ks_re, ks_im, r_re, r_im at the first rho. 17 x 17 probe nodes in
// [-4, 4]; force_large takes every grid node there for x.
CommandOutput cmd_kernels(const RunConfig& cfg, bool force_large);

// {"header": [...], "rows": [[...], ...]}
std::string table_json(const CsvTable& t);

struct CliOptions {
    std::string command;
    std::string config_path;  // empty: defaults
    std::string out;          // overrides output.path; empty: stdout
    bool force_large = false;
    int workers = 0;  // 0 leaves the current setting
};

// Exit codes: 0 success, 1 failed check, 2 usage, config or runtime error.
int run_cli(const CliOptions& opts, std::ostream& out, std::ostream& err);

}  // namespace lcd
