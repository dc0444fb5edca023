#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lcdunkl/calderon.hpp"
#include "lcdunkl/sobolev.hpp"

namespace lcd {

// "<source>:<line>: <message>"; line is 0 when no position is known.
struct ConfigError : std::runtime_error {
    ConfigError(const std::string& source, int line, const std::string& msg);
    int line;
};

struct SignalConfig {
    std::string name = "gaussian";  // gaussian | hermite | table
    double center = 0;
    double width = 1;
    int order = 0;     // hermite: H_order((x-center)/width) e^{-((x-center)/width)^2/2}
    std::string path;  // table: CSV with columns x, re, im
};

struct RunConfig {
    double k = 0;
    std::array<double, 4> matrix{1, 1, 0.5, 1.5};
    double x_max = 12;
    int n = 2049;
    std::optional<double> lambda_max;  // frequency grid; defaults to the space grid
    std::optional<int> freq_n;
    double alpha_min = 1e-2, alpha_max = 1e2;
    int m = 64;
    std::string window = "hermite2";
    std::string synthesis_window = "hermite4";
    double s = 2;
    std::vector<double> rho_list{1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6};
    std::vector<double> epsilon_list{1e-1, 1e-2, 1e-3, 1e-4};
    std::vector<double> delta_list{1e1, 1e2, 1e3, 1e4};
    SignalConfig signal;
    std::string output_path;
    std::string output_format = "csv";
    std::uint64_t seed = 20240611;
    std::string source = "<default>";
    std::string base_dir;  // relative paths in the config resolve against this

    KernelContext context() const;
    CanonicalMatrix canonical() const;
    GridPtr space_grid() const;
    GridPtr freq_grid() const;
    ScaleGrid scale_grid() const;
    WaveletSpec analysis_spec() const;
    WaveletSpec synthesis_spec() const;
    std::vector<CalderonWindow> windows() const;
};

// Defaults above, checked like a loaded file.
RunConfig default_config();
RunConfig parse_config(const std::string& text, const std::string& source, const std::string& base_dir = "");
RunConfig load_config(const std::string& path);

// Test signal on the space grid. Tables are resampled by cubic interpolation;
// a warning goes to `warnings` when the table does not decay at its ends or
// does not cover the grid.
SampledSignal make_signal(const RunConfig& cfg, const GridPtr& grid, std::vector<std::string>* warnings = nullptr);

}  // namespace lcd
