#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>

#include "lcdunkl/interp.hpp"
#include "lcdunkl/transform.hpp"

namespace lcd {

// Even real spectral window W with D^M psi := W.
struct WaveletSpec {
    std::string name;
    int power = 0;  // W(u) = u^power e^{-u^2} for the hermite windows
    std::shared_ptr<const CubicSpline> table;  // W on u >= 0 for table windows
    std::optional<double> analytic_C;

    double W(double u) const;
    // W is treated as zero outside [inner(), support()] in scale integrals
    double support() const;
    double inner() const;

    static WaveletSpec hermite2();
    static WaveletSpec hermite4();
    // samples of W at u >= 0, u strictly increasing starting at 0 with W(0) = 0
    static WaveletSpec from_table(std::vector<double> u, std::vector<double> w);
    static WaveletSpec by_name(const std::string& name);
};

// int_{a_lo}^{a_hi} F(|lambda| alpha) d alpha / alpha, Gauss-Legendre panels
// in log alpha restricted to u in [u_lo, u_hi].
double scale_integral(const std::function<double(double)>& F, double lambda, double a_lo, double a_hi, double u_lo,
                      double u_hi);

struct AdmissibilityResult {
    double value = 0;  // lambda average
    std::vector<double> lambdas;
    std::vector<double> per_lambda;
    double max_rel_dev = 0;
    bool vanishing = false;
};

AdmissibilityResult admissibility(const WaveletSpec& w, const std::vector<double>& lambdas = {0.3, 1, 3, -2});
// int W1(lambda a) conj(W2(lambda a)) da/a; real for real windows
AdmissibilityResult cross_admissibility(const WaveletSpec& w1, const WaveletSpec& w2,
                                        const std::vector<double>& lambdas = {0.3, 1, 3, -2});

struct Wavelet {
    WaveletSpec spec;
    double C = 0;             // admissibility constant
    SampledSignal samples;    // psi = inverse LCDT of W
    SpectralSignal spectral;  // W on the frequency grid
    double edge_ratio = 0;    // max |psi| on the outer 5% of the grid over max |psi|
};

Wavelet make_wavelet(const WaveletSpec& spec, const KernelContext& ctx, const GridPtr& space);

// psi^M_alpha(x) = alpha^{-(2k+2)} e^{-(i/2)(a/b)(1 - 1/alpha^2) x^2} psi(x/alpha)
SampledSignal dilate(const Wavelet& psi, double alpha, const KernelContext& ctx);
// alpha^{k+1} T^M_beta psi^M_alpha
SampledSignal family_member(const Wavelet& psi, double alpha, double beta, const KernelContext& ctx);
// closed form of D^M psi^M_{alpha,beta}(lambda)
cplx family_member_spectrum(const WaveletSpec& w, double alpha, double beta, double lambda, const KernelContext& ctx);

// Phi(alpha_i, beta_j) on scales x space grid. Each scale also carries the
// frequency grid it was computed on and, when produced by cwt(), the spectral
// slice S_i(lambda) = Df e^{(i/2)(d/b)alpha^2 lambda^2} W(lambda alpha), so that
// Phi(alpha, .) = e^{-i pi (k+1) sgn b} alpha^{k+1} e^{i(a/b)beta^2} inverse(S)(-beta).
struct TimeScaleField {
    ScaleGrid scales;
    GridPtr space;
    CanonicalMatrix M;
    double k;
    std::vector<cvec> values;
    std::vector<GridPtr> freq;
    std::vector<cvec> spectra;

    TimeScaleField(ScaleGrid s, GridPtr sp, CanonicalMatrix m, double kk);
    bool has_spectra() const { return !spectra.empty(); }
    int m() const { return scales.m; }
    int n() const { return space->n; }
};

// Frequency grid per scale: the space grid when it resolves the net chirp of
// the scale and has enough nodes inside the window support |lambda| <= u/alpha,
// otherwise a finer grid covering that support.
std::vector<GridPtr> scale_frequency_grids(const ScaleGrid& scales, const GridPtr& space, const CanonicalMatrix& M,
                                           double u_support);

TimeScaleField cwt(const SampledSignal& f, const Wavelet& psi, const ScaleGrid& scales, const KernelContext& ctx);
// Spectral slices only; values stay zero. Enough for the spectral beta rule.
TimeScaleField cwt_slices(const SampledSignal& f, const Wavelet& psi, const ScaleGrid& scales,
                          const KernelContext& ctx);
// (1/(ib)^{k+1}) <f, psi_{alpha,beta}> by quadrature. O(m n^3).
TimeScaleField cwt_direct(const SampledSignal& f, const Wavelet& psi, const ScaleGrid& scales,
                          const KernelContext& ctx, bool force_large = false);

enum class BetaRule {
    Spectral,  // exact beta integral through the spectral slices
    Grid       // quadrature over the space grid
};

// int int Phi1 conj(Phi2) dnu_k
cplx cwt_inner(const TimeScaleField& a, const TimeScaleField& b, BetaRule rule);

struct CwtIdentity {
    double residual = 0;       // spectral beta rule
    double residual_grid = 0;  // beta over the space grid
    cplx lhs = 0, lhs_grid = 0, rhs = 0;
};

CwtIdentity cwt_plancherel_residual(const SampledSignal& f, const Wavelet& psi, const ScaleGrid& scales,
                                    const KernelContext& ctx);
// normalized by sqrt(C_psi C_phi) ||f|| ||g||
CwtIdentity cwt_orthogonality_residual(const SampledSignal& f, const SampledSignal& g, const Wavelet& psi,
                                       const Wavelet& phi, const ScaleGrid& scales, const KernelContext& ctx);

// B_i(lambda) = sum_beta w Phi(alpha_i, beta) e^{-(i/2)(a/b)beta^2} E_k(i lambda/b, beta) on freq[i]
cvec beta_projection(const TimeScaleField& field, int i, const KernelContext& ctx, BetaRule rule);

// Per frequency grid (first-appearance order):
// sum_i nu_i alpha^{k+1} e^{-(i/2)(d/b)(alpha^2-1)lambda^2} W(lambda alpha) B_i(lambda).
// Its inverse transform over (-ib)^{k+1} is the L^2 adjoint of the CWT applied to the field.
std::vector<std::pair<GridPtr, cvec>> cwt_synthesis_spectra(const TimeScaleField& field, const WaveletSpec& phi,
                                                            const KernelContext& ctx, BetaRule rule);

// (1/((-ib)^{k+1} c)) sum sum Phi phi_{alpha,beta} nu, assembled per scale in
// the transform domain.
SampledSignal cwt_inverse(const TimeScaleField& field, const Wavelet& phi, cplx c_cross, const KernelContext& ctx,
                          BetaRule rule = BetaRule::Spectral);

}  // namespace lcd
