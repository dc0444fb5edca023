#pragma once

#include <complex>
#include <string>
#include <vector>

#include "lcdunkl/wavelet.hpp"

namespace lcd {

struct SobolevParams {
    double s;
    double rho = 1.0;
    SobolevParams(double s_, double rho_ = 1.0);
};

// Kernel operations need int (1+lambda^2)^{-s} dmu_k < inf, i.e. s > k+1.
void require_kernel_order(double s, double k);

// m(lambda) = (1+lambda^2)^p (rho (1+lambda^2)^s + C)^{-q}
struct SpectralWeight {
    double p = 0;
    double s = 0;
    double rho = 0;
    double C = 1;
    double q = 0;

    template <class T>
    T operator()(T lambda) const {
        const T u = T(1) + lambda * lambda;
        T r = std::pow(u, p);
        if (q != 0) r *= std::pow(rho * std::pow(u, s) + C, -q);
        return r;
    }
    // the weight is analytic for |lambda| > pole_radius()
    double pole_radius() const;
};

// 2 int_0^inf [j_k(lX) j_k(lY) + sgn(xy) q_k(lX) q_k(lY)] m(l) dmu_k(l) with
// X = |x|, q_k(z) = z j_{k+1}(z)/(2k+2). Equals int E_k(i l, x) E_k(-i l, y) m dmu_k.
// Head by Gauss-Legendre panels, tail through the Hankel expansion on rotated
// contours.
double kernel_integral(double k, double x, double y, const SpectralWeight& m);

// ---- Sobolev space ----

// int (1+lambda^2)^s Df conj(Dg) dmu_k on the frequency grid of the transform
cplx sobolev_inner(const SampledSignal& f, const SampledSignal& g, double s, const KernelContext& ctx);
double sobolev_norm(const SampledSignal& f, double s, const KernelContext& ctx);
// same, for spectra already on a grid
cplx sobolev_inner(const SpectralSignal& F, const SpectralSignal& G, double s);
double sobolev_norm(const SpectralSignal& F, double s);

// C_s = (|b|^{-(2k+2)} int (1+lambda^2)^{-s} dmu_k)^{1/2}
double constant_Cs(double s, const KernelContext& ctx);

// K_s(x,y) = int conj(E^M(lambda,x)) E^M(lambda,y) (1+lambda^2)^{-s} dmu_k
cplx kernel_Ks(double x, double y, double s, const KernelContext& ctx);

// |<f, K_s(., y)>_{W^s} - f(y)| / ||f||_{W^s}, with D K_s(., y) = c_b E^M(., y)(1+lambda^2)^{-s}.
// y must be a grid node.
double reproducing_check(const SampledSignal& f, double y, double s, const KernelContext& ctx);

// R(x,y) = int conj(E^M(lambda,x)) E^M(lambda,y) / (rho (1+lambda^2)^s + C) dmu_k
cplx kernel_Rrho(double x, double y, const SobolevParams& p, double C, const KernelContext& ctx);

struct RNorms {
    double r_ws = 0;         // ||R(., y)||_{W^s}
    double phi_r = 0;        // ||Phi R(., y)||_{L^2(nu)}
    double phistar_phi_r = 0;  // ||Phi* Phi R(., y)||_{W^s}
    double Cs = 0;
    double rho = 1;
    // bound(i) C_s/rho, bound(ii) C_s/sqrt(rho), bound(iii) C_s
    bool holds() const;
};
RNorms r_norms(double y, const SobolevParams& p, double C, const KernelContext& ctx);

enum class KernelKind { Ks, Rrho };

struct KernelTable {
    std::vector<double> xs, ys;
    std::vector<cvec> values;  // values[i][j] = kernel(xs[i], ys[j])
    KernelKind kind;
    // max |K(x,y) - conj(K(y,x))| over pairs present in both orders
    double hermitian_defect() const;
};
KernelTable kernel_table(KernelKind kind, const std::vector<double>& xs, const std::vector<double>& ys,
                         const SobolevParams& p, double C, const KernelContext& ctx);

// ---- extremal problems ----

// Minimizer of rho ||f||^2_{W^s} + ||g - Phi f||^2_{L^2(nu)}, assembled per scale
// in the transform domain: D f* = D(Phi^dagger g) / (rho (1+lambda^2)^s + C).
SampledSignal extremal_cwt(const TimeScaleField& g, const SobolevParams& p, const Wavelet& psi,
                           const KernelContext& ctx, BetaRule rule = BetaRule::Spectral);
// Q(alpha, beta, y) by quadrature
cplx q_kernel(double alpha, double beta, double y, const SobolevParams& p, const Wavelet& psi, const KernelContext& ctx);
// f*(y) = sum sum g Q nu at the given y, with the grid beta rule. O(m n) Q evaluations per y.
cvec extremal_cwt_pointwise(const TimeScaleField& g, const SobolevParams& p, const Wavelet& psi,
                            const std::vector<double>& ys, const KernelContext& ctx, bool force_large = false);
// consistent data g = Phi f: D f* = C/(rho (1+lambda^2)^s + C) Df
SampledSignal extremal_cwt_spectral(const SampledSignal& f, const SobolevParams& p, const Wavelet& psi,
                                    const KernelContext& ctx);
double extremal_filter(double lambda, const SobolevParams& p, double C);

// h* = inverse(g / (1 + rho (1+lambda^2)^s))
SampledSignal extremal_lcdt(const SpectralSignal& g, const SobolevParams& p, const KernelContext& ctx,
                            const GridPtr& space);
// the same by direct kernel sums at arbitrary y
cvec extremal_lcdt_integral(const SpectralSignal& g, const SobolevParams& p, const std::vector<double>& ys,
                            const KernelContext& ctx);

// (D^M)* g = D^{M^-1}((1+|.|^2)^{-s} g), adjoint from L^2 into W^s
SampledSignal adjoint_lcdt(const SpectralSignal& g, double s, const KernelContext& ctx, const GridPtr& space);

// rho ||u||^2_{W^s} + ||g - Phi u||^2_{L^2(nu)} with the spectral beta rule
double tikhonov_cwt_objective(const SampledSignal& u, const TimeScaleField& g, const SobolevParams& p,
                              const Wavelet& psi, const KernelContext& ctx);
// rho ||u||^2_{W^s} + ||g - D u||^2_{L^2}
double tikhonov_lcdt_objective(const SampledSignal& u, const SpectralSignal& g, const SobolevParams& p,
                               const KernelContext& ctx);

}  // namespace lcd
