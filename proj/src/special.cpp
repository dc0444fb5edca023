#include "lcdunkl/special.hpp"

#include <cmath>

namespace lcd {

namespace {

std::vector<double> hankel_coeffs(double nu) {
    // a_m = prod_{j=1..m} (4 nu^2 - (2j-1)^2) / (m! 8^m); stop once the
    // product terminates (half-integer nu) or gets large enough to be useless.
    std::vector<double> a{1.0};
    const double mu = 4 * nu * nu;
    for (int m = 1; m < 80; ++m) {
        const double f = (mu - (2.0 * m - 1) * (2.0 * m - 1)) / (m * 8.0);
        const double v = a.back() * f;
        a.push_back(v);
        if (v == 0.0) break;
    }
    return a;
}

// P cos(chi) - Q sin(chi) with chi = z - (nu/2 + 1/4) pi, given the coefficient
// table; the series is summed until terms stop shrinking.
double hankel_core(const std::vector<double>& a, double z, double cz, double sz, double nu) {
    double P = 0, Q = 0;
    double zp = 1.0;
    double prev = INFINITY;
    for (std::size_t m = 0; m < a.size(); ++m) {
        const double t = a[m] / zp;
        const double at = std::abs(t);
        if (at > prev) break;
        prev = at;
        switch (m % 4) {
            case 0: P += t; break;
            case 1: Q += t; break;
            case 2: P -= t; break;
            case 3: Q -= t; break;
        }
        if (at < 1e-17 * std::abs(P)) break;
        zp *= z;
    }
    const double phi = (nu / 2 + 0.25) * kPi;
    const double cphi = std::cos(phi), sphi = std::sin(phi);
    const double cchi = cz * cphi + sz * sphi;
    const double schi = sz * cphi - cz * sphi;
    return P * cchi - Q * schi;
}

}  // namespace

BesselPairEval::BesselPairEval(double k) : k_(k) {
    const double s2pi = std::sqrt(2.0 / kPi);
    pref_k_ = std::pow(2.0, k) * std::tgamma(k + 1) * s2pi;
    pref_k1_ = std::pow(2.0, k + 1) * std::tgamma(k + 2) * s2pi;
    hk_ = hankel_coeffs(k);
    hk1_ = hankel_coeffs(k + 1);
}

BesselPairEval::Pair BesselPairEval::series(double z) const {
    const double q = -0.25 * z * z;
    CompensatedSum s0, s1;
    double t0 = 1.0, t1 = 1.0;
    s0.add(1.0);
    s1.add(1.0);
    for (int m = 1; m < 200; ++m) {
        t0 *= q / (m * (k_ + m));
        t1 *= q / (m * (k_ + 1 + m));
        s0.add(t0);
        s1.add(t1);
        if (m > 0.5 * std::abs(z) && std::abs(t0) < 1e-18 && std::abs(t1) < 1e-18) break;
    }
    return {s0.value(), s1.value()};
}

BesselPairEval::Pair BesselPairEval::hankel(double z) const {
    const double cz = std::cos(z), sz = std::sin(z);
    const double r0 = std::pow(z, -(k_ + 0.5));
    return {pref_k_ * r0 * hankel_core(hk_, z, cz, sz, k_),
            pref_k1_ * r0 / z * hankel_core(hk1_, z, cz, sz, k_ + 1)};
}

BesselPairEval::Pair BesselPairEval::operator()(double z) const {
    z = std::abs(z);
    if (k_ == -0.5) return {std::cos(z), z == 0 ? 1.0 : std::sin(z) / z};
    return z <= kSwitch ? series(z) : hankel(z);
}

double bessel_j_norm(double k, double z) { return BesselPairEval(k)(z).jk; }

cplx dunkl_kernel(const BesselPairEval& J, double z) {
    const auto p = J(z);
    return {p.jk, z / (2 * J.order() + 2) * p.jk1};
}

cplx dunkl_kernel(double k, double t, double x) { return dunkl_kernel(BesselPairEval(Multiplicity(k)), t * x); }

cplx lcdt_kernel(const KernelContext& ctx, double lambda, double x) {
    const auto& M = ctx.M;
    const double ph = 0.5 * (M.d() * lambda * lambda + M.a() * x * x) / M.b();
    return std::polar(1.0, ph) * dunkl_kernel(ctx.J, -lambda / M.b() * x);
}

cplx lcdt_kernel_inv(const KernelContext& ctx, double x, double lambda) {
    const auto& M = ctx.M;
    const double ph = -0.5 * (M.a() * x * x + M.d() * lambda * lambda) / M.b();
    return std::polar(1.0, ph) * dunkl_kernel(ctx.J, x / M.b() * lambda);
}

}  // namespace lcd
