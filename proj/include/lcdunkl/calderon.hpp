#pragma once

#include <vector>

#include "lcdunkl/wavelet.hpp"

namespace lcd {

struct CalderonWindow {
    double epsilon;
    double delta;
    CalderonWindow(double eps, double del);
};

struct MultiplierValue {
    cplx value = 0;
    bool at_origin = false;  // lambda == 0: value set to 0, not integrated
};

// K(lambda) = (1/C12) int_eps^delta conj(W1(lambda a)) W2(lambda a) da/a
MultiplierValue k_multiplier(const WaveletSpec& w1, const WaveletSpec& w2, const CalderonWindow& win, double lambda);
// same, with C12 supplied
MultiplierValue k_multiplier(const WaveletSpec& w1, const WaveletSpec& w2, const CalderonWindow& win, double lambda,
                             double c12);

SampledSignal reconstruct_spectral(const SampledSignal& f, const WaveletSpec& w1, const WaveletSpec& w2,
                                   const CalderonWindow& win, const KernelContext& ctx);

// Double sum over m log-spaced scales in [eps, delta] and the space grid.
SampledSignal reconstruct_direct(const SampledSignal& f, const WaveletSpec& w1, const WaveletSpec& w2,
                                 const CalderonWindow& win, const KernelContext& ctx, int m = 32,
                                 bool force_large = false);

struct SweepRow {
    double epsilon, delta, l2_error;
};

// windows must be nested: epsilon non-increasing, delta non-decreasing
std::vector<SweepRow> convergence_sweep(const SampledSignal& f, const WaveletSpec& w1, const WaveletSpec& w2,
                                        const std::vector<CalderonWindow>& windows, const KernelContext& ctx);

}  // namespace lcd
