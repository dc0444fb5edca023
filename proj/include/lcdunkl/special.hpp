#pragma once

#include <vector>

#include "lcdunkl/measure.hpp"

namespace lcd {

// Normalized Bessel functions j_k(z) = 2^k Gamma(k+1) z^{-k} J_k(z) for the
// orders k and k+1 together. Power series for |z| <= 15, Hankel expansion
// beyond.
class BesselPairEval {
public:
    explicit BesselPairEval(double k);
    double order() const { return k_; }

    struct Pair {
        double jk;
        double jk1;
    };
    Pair operator()(double z) const;

    static constexpr double kSwitch = 15.0;

    // Both branches exposed for the stitching check.
    Pair series(double z) const;
    Pair hankel(double z) const;

private:
    double k_;
    double pref_k_, pref_k1_;  // 2^nu Gamma(nu+1) sqrt(2/pi)
    std::vector<double> hk_, hk1_;  // Hankel coefficients a_m(nu)
};

double bessel_j_norm(double k, double z);

// E_k(i t, x) = j_k(tx) + i tx/(2k+2) j_{k+1}(tx)
cplx dunkl_kernel(double k, double t, double x);
cplx dunkl_kernel(const BesselPairEval& J, double z);  // z = t*x

struct KernelContext {
    Multiplicity k;
    CanonicalMatrix M;
    KernelContext(Multiplicity kk, CanonicalMatrix mm) : k(kk), M(mm), J(kk.value()) {}
    BesselPairEval J;
};

// E^M_k(lambda, x) = e^{(i/2)(d lambda^2 + a x^2)/b} E_k(-i lambda/b, x)
cplx lcdt_kernel(const KernelContext& ctx, double lambda, double x);
// E^{M^-1}_k(x, lambda) = e^{-(i/2)(a x^2 + d lambda^2)/b} E_k(i x/b, lambda)
cplx lcdt_kernel_inv(const KernelContext& ctx, double x, double lambda);

}  // namespace lcd
