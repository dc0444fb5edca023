#pragma once
// Reference values computed independently of the library code paths.

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/special_functions/bessel_prime.hpp>
#include <cmath>
#include <complex>
#include <vector>

#include "lcdunkl/measure.hpp"

namespace oracle {

using cplx = std::complex<double>;
constexpr double pi = 3.14159265358979323846;

inline double norm_const(double k) { return 1.0 / (std::pow(2.0, k + 1) * std::tgamma(k + 1)); }

// j_k via Boost's J_nu
inline double jnorm(double k, double z) {
    z = std::abs(z);
    if (z == 0) return 1.0;
    return std::pow(2.0, k) * std::tgamma(k + 1) * std::pow(z, -k) * boost::math::cyl_bessel_j(k, z);
}

inline cplx dunkl(double k, double t, double x) {
    const double z = t * x;
    return {jnorm(k, z), z / (2 * k + 2) * jnorm(k + 1, z)};
}

// int |x|^{2k+1} g(x) dx / (2^{k+1} Gamma(k+1)) for even g, adaptive
template <class G>
double mu_integral_even(double k, G g) {
    boost::math::quadrature::exp_sinh<double> es;
    auto f = [&](double x) {
        const double v = g(x);
        return v == 0 ? 0.0 : std::pow(x, 2 * k + 1) * v;
    };
    return 2 * norm_const(k) * es.integrate(f, 0.0, std::numeric_limits<double>::infinity());
}

// closed form of int e^{-c x^2} dmu_k
inline double gauss_mu(double k, double c) { return std::pow(2 * c, -(k + 1)); }

// LCDT of e^{-x^2/2}: c_b e^{(i/2)(d/b)l^2} (2g)^{-(k+1)} e^{-l^2/(4 g b^2)},
// g = (b - i a) / (2b)
inline cplx gaussian_lcdt(double k, double a, double b, double d, double lambda) {
    const cplx ib = std::pow(std::abs(b), k + 1) * std::polar(1.0, pi * (k + 1) * (b > 0 ? 1 : -1) / 2);
    const cplx g = cplx(b, -a) / (2 * b);
    return 1.0 / ib * std::polar(1.0, 0.5 * d / b * lambda * lambda) * std::pow(2.0 * g, -(k + 1)) *
           std::exp(-lambda * lambda / (4.0 * g * b * b));
}

// plain double loop forward transform, Boost Bessel
inline std::vector<cplx> lcdt_bruteforce(double k, double a, double b, double d, const std::vector<double>& x,
                                         const std::vector<double>& w, const std::vector<cplx>& f,
                                         const std::vector<double>& lam) {
    const cplx ib = std::pow(std::abs(b), k + 1) * std::polar(1.0, pi * (k + 1) * (b > 0 ? 1 : -1) / 2);
    std::vector<cplx> out;
    for (double l : lam) {
        cplx s = 0;
        for (std::size_t m = 0; m < x.size(); ++m)
            s += f[m] * std::polar(1.0, 0.5 * (d * l * l + a * x[m] * x[m]) / b) * dunkl(k, -l / b, x[m]) * w[m];
        out.push_back(s / ib);
    }
    return out;
}

// classical LCT quadrature (k = -1/2): kernel e^{(i/2)(d l^2 + a x^2)/b} e^{-i l x / b} / sqrt(2 pi)
inline std::vector<cplx> lct_classical(double a, double b, double d, const std::vector<double>& x, double h,
                                       const std::vector<cplx>& f, const std::vector<double>& lam) {
    const cplx ib = std::sqrt(std::abs(b)) * std::polar(1.0, pi * 0.5 * (b > 0 ? 1 : -1) / 2);
    std::vector<cplx> out;
    for (double l : lam) {
        cplx s = 0;
        for (std::size_t m = 0; m < x.size(); ++m) {
            const double tw = (m == 0 || m + 1 == x.size()) ? 0.5 * h : h;
            s += f[m] * std::exp(cplx(0, 0.5 * (d * l * l + a * x[m] * x[m]) / b - l * x[m] / b)) * tw;
        }
        out.push_back(s / ib / std::sqrt(2 * pi));
    }
    return out;
}

inline double rel_l2(const std::vector<cplx>& a, const std::vector<cplx>& b, const std::vector<double>& w) {
    double num = 0, den = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        num += std::norm(a[i] - b[i]) * w[i];
        den += std::norm(b[i]) * w[i];
    }
    return std::sqrt(num / den);
}

inline double max_abs_diff(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    double m = 0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

// int_0^inf J_nu(l a) J_nu(l b) l (l^2 + c^2)^{-n} dl for n in {1,2,3}, from
// int J_nu(la) J_nu(lb) l/(l^2+c^2) dl = I_nu(b c) K_nu(a c), a >= b > 0,
// differentiated in c^2.
inline double bessel_pair_integral(double nu, double a, double b, int n, double c = 1) {
    namespace bm = boost::math;
    if (a < b) std::swap(a, b);
    const double zb = b * c, za = a * c;
    const double I = bm::cyl_bessel_i(nu, zb), K = bm::cyl_bessel_k(nu, za);
    if (n == 1) return I * K;
    const double Ip = bm::cyl_bessel_i_prime(nu, zb), Kp = bm::cyl_bessel_k_prime(nu, za);
    const double G1 = b * Ip * K + a * I * Kp;
    if (n == 2) return -G1 / (2 * c);
    const double Ipp = -Ip / zb + (1 + nu * nu / (zb * zb)) * I, Kpp = -Kp / za + (1 + nu * nu / (za * za)) * K;
    const double G2 = b * b * Ipp * K + 2 * a * b * Ip * Kp + a * a * I * Kpp;
    return (G2 / (c * c) - G1 / (c * c * c)) / 8;
}

// int E_k(i l, x) E_k(-i l, y) (l^2 + c^2)^{-n} dmu_k(l), x, y != 0
inline double dunkl_pair_integral(double k, double x, double y, int n, double c = 1) {
    const double X = std::abs(x), Y = std::abs(y), sg = (x < 0) != (y < 0) ? -1.0 : 1.0;
    const double ck = std::pow(2.0, k) * std::tgamma(k + 1);
    return 2 * norm_const(k) * ck * ck * std::pow(X * Y, -k) *
           (bessel_pair_integral(k, X, Y, n, c) + sg * bessel_pair_integral(k + 1, X, Y, n, c));
}

// (|b|^{-(2k+2)} int (1+l^2)^{-s} dmu_k)^{1/2} in closed form
inline double sobolev_Cs(double k, double s, double b) {
    return std::sqrt(std::pow(std::abs(b), -(2 * k + 2)) * std::tgamma(s - k - 1) / (std::pow(2.0, k + 1) * std::tgamma(s)));
}

}  // namespace oracle
