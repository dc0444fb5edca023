#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>

#include "lcdunkl/errors.hpp"
#include "lcdunkl/sobolev.hpp"
#include "lcdunkl/special.hpp"

namespace lcd {

double SpectralWeight::pole_radius() const {
    double r = p < 0 ? 1.0 : 0.0;  // lambda = +-i
    if (q != 0 && rho != 0) r = std::max(r, std::sqrt(std::pow(std::abs(C / rho), 1.0 / s) + 1.0));
    if (q != 0 && rho == 0 && C == 0) throw DomainError("spectral weight: zero denominator");
    return r;
}

namespace {

constexpr double kAsymptotic = 12.0;  // smallest z handed to the Hankel expansion
constexpr double kMinHead = 20.0;
constexpr double kMaxHead = 4000.0;

// H^{(1|2)}_nu(z) e^{-+iz} for complex z, principal branches
class HankelAmp {
public:
    explicit HankelAmp(double nu) : nu_(nu) {
        const double mu = 4 * nu * nu;
        a_.push_back(1.0);
        for (int m = 1; m < 60; ++m) {
            const double v = a_.back() * (mu - (2.0 * m - 1) * (2.0 * m - 1)) / (m * 8.0);
            a_.push_back(v);
            if (v == 0.0) break;
        }
    }
    cplx operator()(int sigma, cplx z) const {
        const cplx is(0, sigma);
        cplx sum = 0, zp = 1, ism = 1;
        double prev = INFINITY;
        for (double a : a_) {
            const cplx t = ism * a / zp;
            const double at = std::abs(t);
            if (at > prev) break;
            prev = at;
            sum += t;
            if (at < 1e-17 * std::abs(sum)) break;
            zp *= z;
            ism *= is;
        }
        const double phi = -sigma * (nu_ / 2 + 0.25) * kPi;
        return std::sqrt(2.0 / (kPi * z)) * std::polar(1.0, phi) * sum;
    }

private:
    double nu_;
    std::vector<double> a_;
};

struct Factor {
    double X;  // 0 means the constant factor p = 1, q = 0
    // p(lX) = sum_sigma e^{i sigma l X} P_sigma(l), likewise q
    cplx P(int sigma, cplx l, const HankelAmp& hk, double ck, double k) const {
        const cplx z = l * X;
        return 0.5 * ck * std::pow(z, -k) * hk(sigma, z);
    }
    cplx Q(int sigma, cplx l, const HankelAmp& hk1, double ck, double k) const {
        const cplx z = l * X;
        return 0.5 * ck * std::pow(z, -k) * hk1(sigma, z);
    }
};

}  // namespace

double kernel_integral(double k, double x, double y, const SpectralWeight& m) {
    const double X = std::abs(x), Y = std::abs(y);
    const double sxy = (x < 0) != (y < 0) ? -1.0 : 1.0;
    const double norm = 2.0 / (std::pow(2.0, k + 1) * std::tgamma(k + 1));
    const double beta = 2 * k + 1;
    const BesselPairEval J(k);

    double L = std::max(kMinHead, 2 * m.pole_radius() + 10);
    for (double v : {X, Y})
        if (v > 0) L = std::max(L, kAsymptotic / v);
    if (L > kMaxHead) throw DomainError("kernel_integral: |x| too close to 0 for the tail expansion");

    auto head_f = [&](double l) {
        const double w = std::pow(l, beta) * m(l);
        const auto a = J(l * X), c = J(l * Y);
        const double qa = l * X / (2 * k + 2) * a.jk1, qc = l * Y / (2 * k + 2) * c.jk1;
        return w * (a.jk * c.jk + sxy * qa * qc);
    };
    const double omega_max = X + Y;
    const double width = omega_max > 0 ? std::min(1.0, kPi / omega_max) : 1.0;
    const int panels = static_cast<int>(std::ceil(L / width));
    const double h = L / panels;
    CompensatedSum head;
    {
        boost::math::quadrature::tanh_sinh<double> ts;
        head.add(ts.integrate(head_f, 0.0, h, 1e-14));
    }
    for (int i = 1; i < panels; ++i)
        head.add(boost::math::quadrature::gauss<double, 20>::integrate(head_f, i * h, (i + 1) * h));

    if (X == 0 && Y == 0 && m.q == 0) {
        // l^beta (1+l^2)^p = sum_j binom(p, j) l^{beta+2p-2j}, convergent for L > 1
        CompensatedSum tail;
        double c = 1;
        for (int j = 0; j < 200; ++j) {
            const double e = beta + 2 * m.p - 2 * j + 1;
            const double t = -c * std::pow(L, e) / e;
            tail.add(t);
            if (std::abs(t) < 1e-18 * std::abs(tail.value())) break;
            c *= (m.p - j) / (j + 1.0);
        }
        return norm * (head.value() + tail.value());
    }

    // tail: products of e^{i sigma l X} amplitudes
    const double ck = std::pow(2.0, k) * std::tgamma(k + 1);
    const HankelAmp hk(k), hk1(k + 1);
    const Factor fx{X}, fy{Y};
    boost::math::quadrature::exp_sinh<double> es;
    CompensatedCSum tail;
    const int sx_n = X > 0 ? 2 : 1, sy_n = Y > 0 ? 2 : 1;
    for (int i1 = 0; i1 < sx_n; ++i1)
        for (int i2 = 0; i2 < sy_n; ++i2) {
            const int s1 = X > 0 ? (i1 == 0 ? 1 : -1) : 0;
            const int s2 = Y > 0 ? (i2 == 0 ? 1 : -1) : 0;
            const double omega = s1 * X + s2 * Y;
            auto G = [&](cplx l) {
                cplx pp = 1, qq = 0;
                if (X > 0 && Y > 0) {
                    pp = fx.P(s1, l, hk, ck, k) * fy.P(s2, l, hk, ck, k);
                    qq = fx.Q(s1, l, hk1, ck, k) * fy.Q(s2, l, hk1, ck, k);
                } else if (X > 0) {
                    pp = fx.P(s1, l, hk, ck, k);
                } else if (Y > 0) {
                    pp = fy.P(s2, l, hk, ck, k);
                }
                return std::pow(l, beta) * m(l) * (pp + sxy * qq);
            };
            cplx v;
            if (omega == 0) {
                // far out the weight underflows against overflowing powers
                auto at = [&](double l) {
                    const cplx v = G(cplx(l, 0));
                    return std::isfinite(v.real()) && std::isfinite(v.imag()) ? v : cplx(0, 0);
                };
                // lambda = L e^t turns the algebraic decay into an exponential one
                auto re = [&](double t) { return t > 700 ? 0.0 : L * std::exp(t) * at(L * std::exp(t)).real(); };
                auto im = [&](double t) { return t > 700 ? 0.0 : L * std::exp(t) * at(L * std::exp(t)).imag(); };
                v = cplx(es.integrate(re, 0.0, INFINITY, 1e-13), es.integrate(im, 0.0, INFINITY, 1e-13));
            } else {
                const double sg = omega > 0 ? 1.0 : -1.0, aw = std::abs(omega);
                auto g = [&](double t) {
                    const double e = std::exp(-aw * t);
                    if (e == 0) return cplx(0, 0);
                    const cplx v = e * G(cplx(L, sg * t));
                    return std::isfinite(v.real()) && std::isfinite(v.imag()) ? v : cplx(0, 0);
                };
                auto re = [&](double t) { return g(t).real(); };
                auto im = [&](double t) { return g(t).imag(); };
                const cplx base(es.integrate(re, 0.0, INFINITY, 1e-13), es.integrate(im, 0.0, INFINITY, 1e-13));
                v = std::polar(1.0, omega * L) * cplx(0, sg) * base;
            }
            tail.add(v);
        }
    return norm * (head.value() + tail.value().real());
}

}  // namespace lcd
