#pragma once

#include "lcdunkl/transform.hpp"

namespace lcd {

// f(-x)
SampledSignal reflect(const SampledSignal& f);
// f(x) e^{i rate x^2}
SampledSignal chirp_modulate(const SampledSignal& f, double rate);

// Spectral multiplier of T^M_{x0}: e^{-(i/2)(a/b)x0^2} E_k(i lambda/b, x0).
cplx translation_symbol(const KernelContext& ctx, double x0, double lambda);

// T^M_{x0} f = inverse(symbol * forward(f)). At k = -1/2 with the Fourier
// matrix this is f(. + x0).
SampledSignal translate(const SampledSignal& f, double x0, const KernelContext& ctx);
// Same, for an input given by its spectrum on the grid.
SampledSignal translate_spectrum(const SpectralSignal& F, double x0, const KernelContext& ctx, const GridPtr& space);

// inverse(e^{-(i/2)(d/b)lambda^2} Df Dg)
SampledSignal convolve(const SampledSignal& f, const SampledSignal& g, const KernelContext& ctx);

// Literal definition c_b sum_y e^{i(a/b)y^2} (T_x f)(-y) g(y) w(y). O(n^3).
SampledSignal convolve_direct(const SampledSignal& f, const SampledSignal& g, const KernelContext& ctx,
                              bool force_large = false);
inline constexpr int kDirectMaxNodes = 513;

// || D(f*g) - e^{-(i/2)(d/b)l^2} Df Dg || / (||f|| ||g||) for a given f*g
double factorization_residual(const SampledSignal& conv, const SampledSignal& f, const SampledSignal& g,
                              const KernelContext& ctx);
// | ||f*g||^2 - int |Df|^2 |Dg|^2 dmu | / int |Df|^2 |Dg|^2 dmu
double l2_identity_residual(const SampledSignal& f, const SampledSignal& g, const KernelContext& ctx);

}  // namespace lcd
