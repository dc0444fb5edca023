#include <random>

#include "doctest.h"
#include "lcdunkl/sobolev.hpp"
#include "oracles.hpp"

using namespace lcd;

namespace {

SampledSignal gauss(const GridPtr& g, double shift = 0) {
    SampledSignal f(g);
    for (int j = 0; j < g->n; ++j) f.values[j] = std::exp(-(g->nodes[j] - shift) * (g->nodes[j] - shift) / 2);
    return f;
}

// random combination of smooth bumps, resolved by the grids used here
SampledSignal random_signal(const GridPtr& g, std::mt19937_64& rng) {
    std::normal_distribution<double> nd;
    std::uniform_real_distribution<double> centre(-3, 3), width(0.6, 1.5);
    SampledSignal f(g);
    for (int r = 0; r < 6; ++r) {
        const cplx c(nd(rng), nd(rng));
        const double x0 = centre(rng), w = width(rng);
        for (int j = 0; j < g->n; ++j) f.values[j] += c * std::exp(-std::pow((g->nodes[j] - x0) / w, 2) / 2);
    }
    return f;
}

double sup_diff(const cvec& a, const cvec& b) { return oracle::max_abs_diff(a, b); }

// int (1+l^2)^{-s} conj(E^M(l,x)) E^M(l,y) dmu_k by a long trapezoid sum
cplx kernel_by_sum(const KernelContext& ctx, double x, double y, double s, double L, double h) {
    const double k = ctx.k.value();
    cplx acc = 0;
    for (double l = -L; l <= L + 1e-12; l += h) {
        const double w = (std::abs(std::abs(l) - L) < 1e-9 ? 0.5 : 1.0) * h * std::pow(std::abs(l), 2 * k + 1) *
                         oracle::norm_const(k) * std::pow(1 + l * l, -s);
        acc += w * std::conj(lcdt_kernel(ctx, l, x)) * lcdt_kernel(ctx, l, y);
    }
    return acc;
}

const CanonicalMatrix kFourier(0, -1, 1, 0);
const CanonicalMatrix kChirped(1, 1, 0.5, 1.5);

}  // namespace

TEST_CASE("sobolev parameters") {
    CHECK_THROWS_AS(SobolevParams(2, 0), DomainError);
    CHECK_THROWS_AS(SobolevParams(2, -1), DomainError);
    CHECK_THROWS_AS(SobolevParams(NAN, 1), DomainError);
    CHECK_NOTHROW(SobolevParams(-1, 1));
    CHECK_THROWS_WITH_AS(require_kernel_order(0.5, -0.5), "sobolev order too small: kernels need s > k + 1",
                         DomainError);
    CHECK_NOTHROW(require_kernel_order(0.51, -0.5));
    KernelContext ctx(Multiplicity(0), kFourier);
    CHECK_THROWS_AS(constant_Cs(1.0, ctx), DomainError);
    CHECK_THROWS_AS(kernel_Ks(0, 1, 0.9, ctx), DomainError);
}

TEST_CASE("sobolev inner product") {
    auto g = make_space_grid(Multiplicity(0), 12, 2049);
    KernelContext ctx(Multiplicity(0), kChirped);
    const auto f = gauss(g, 0.5), h = gauss(g, -1);
    const cplx a = sobolev_inner(f, h, 0.0, ctx), b = mu_inner(f, h);
    CHECK(std::abs(a - b) < 1e-12);
    double prev = 0;
    for (double s : {-1.0, 0.0, 0.5, 1.0, 2.0, 3.5}) {
        const double n = sobolev_norm(f, s, ctx);
        CHECK(n >= prev);
        prev = n;
    }
    const cplx fh = sobolev_inner(f, h, 2, ctx), hf = sobolev_inner(h, f, 2, ctx);
    CHECK(std::abs(fh - std::conj(hf)) < 1e-13);
    // embedding |f(y)| <= C_s ||f||_{W^s}
    const double bound = constant_Cs(2, ctx) * sobolev_norm(f, 2, ctx);
    for (int j = 0; j < g->n; j += 16) CHECK(std::abs(f.values[j]) <= bound);
    auto other = make_space_grid(Multiplicity(0), 12, 1025);
    CHECK_THROWS_AS(sobolev_inner(f, gauss(other), 1, ctx), MismatchError);
}

TEST_CASE("constant C_s") {
    KernelContext c0(Multiplicity(-0.5), kFourier);
    CHECK(std::abs(constant_Cs(1, c0) - std::sqrt(oracle::pi / std::sqrt(2 * oracle::pi))) < 1e-6);
    for (double k : {-0.5, 0.0, 0.7, 1.0, 2.5})
        for (double b : {1.0, -0.5, 2.0})
            for (double ds : {0.01, 0.6, 2.0}) {
                const double s = k + 1 + ds;
                KernelContext ctx(Multiplicity(k), CanonicalMatrix(1, b, 0, 1));
                CHECK(constant_Cs(s, ctx) == doctest::Approx(oracle::sobolev_Cs(k, s, b)).epsilon(1e-10));
            }
    for (double k : {-0.5, 0.0, 1.0}) {
        KernelContext c1(Multiplicity(k), CanonicalMatrix(1, 1, 0, 1)), c2(Multiplicity(k), CanonicalMatrix(1, 2, 0, 1));
        const double s = k + 2;
        CHECK(constant_Cs(s, c2) / constant_Cs(s, c1) == doctest::Approx(std::pow(2.0, -(k + 1))).epsilon(1e-12));
        CHECK(constant_Cs(k + 1.01, c1) > constant_Cs(k + 2, c1));
    }
}

TEST_CASE("sobolev kernel K_s") {
    KernelContext c0(Multiplicity(-0.5), kFourier);
    double worst = 0;
    for (double x = -6; x <= 6; x += 0.75)
        for (double y : {-3.0, -0.4, 0.0, 0.9, 2.0}) {
            if (std::abs(x - y) > 6) continue;
            const cplx v = kernel_Ks(x, y, 1, c0);
            worst = std::max(worst, std::abs(v - std::sqrt(oracle::pi / 2) * std::exp(-std::abs(x - y))));
        }
    CHECK(worst < 1e-4);
    for (double k : {-0.5, 0.0, 0.7, 1.0})
        for (int s : {2, 3}) {
            if (!(s > k + 1)) continue;
            for (auto M : {kFourier, kChirped, CanonicalMatrix(0.5, 2, -0.25, 1)}) {
                KernelContext ctx(Multiplicity(k), M);
                const double ab = std::abs(M.b());
                for (double x : {-2.5, 0.3, 1.5, 7.0})
                    for (double y : {-1.0, 0.05, 1.5, 4.0}) {
                        const cplx v = kernel_Ks(x, y, s, ctx);
                        const cplx ref = std::polar(std::pow(ab, -(2 * k + 2)) *
                                                        oracle::dunkl_pair_integral(k, x / ab, y / ab, s),
                                                    -0.5 * M.a() / M.b() * (x * x - y * y));
                        CHECK(std::abs(v - ref) < 1e-12);
                        CHECK(std::abs(v - std::conj(kernel_Ks(y, x, s, ctx))) < 1e-13);
                    }
            }
        }
    // conjugate placement and chirp against a plain sum over lambda
    KernelContext ctx(Multiplicity(0), kChirped);
    for (auto xy : {std::make_pair(0.5, 1.25), std::make_pair(-2.0, 0.75)})
        CHECK(std::abs(kernel_Ks(xy.first, xy.second, 3, ctx) - kernel_by_sum(ctx, xy.first, xy.second, 3, 60, 0.001)) <
              2e-7);
    // ||K_s(., y)||_{W^s}^2 = K_s(y, y) <= C_s^2
    const double Cs = constant_Cs(2, ctx);
    for (double y : {0.0, 0.5, -3.0, 8.0}) {
        const cplx d = kernel_Ks(y, y, 2, ctx);
        CHECK(std::abs(d.imag()) < 1e-15);
        CHECK(d.real() <= Cs * Cs * (1 + 1e-12));
    }
    CHECK(kernel_Ks(0, 0, 2, ctx).real() == doctest::Approx(Cs * Cs).epsilon(1e-12));
}

TEST_CASE("reproducing property") {
    for (double k : {-0.5, 0.0}) {
        KernelContext ctx(Multiplicity(k), kFourier);
        double prev[3] = {1, 1, 1};
        for (int n : {513, 2049}) {
            auto g = make_space_grid(Multiplicity(k), 12, n);
            const auto f = gauss(g, 0.5);
            int i = 0;
            for (double y : {0.0, 1.5, -3.0}) {
                const double r = reproducing_check(f, y, 2, ctx);
                CHECK(r < 1e-4);
                CHECK(r <= prev[i] + 1e-12);
                prev[i++] = r;
            }
            CHECK(reproducing_check(SampledSignal(g), 1.5, 2, ctx) == 0);
            CHECK_THROWS_AS(reproducing_check(f, 0.001, 2, ctx), DomainError);
        }
    }
}

TEST_CASE("kernel R_rho") {
    KernelContext c0(Multiplicity(-0.5), kFourier);
    const double C = 1.0 / 8;
    for (double rho : {1e-3, 1.0, 1e3})
        for (double x : {-2.0, 0.7, 3.0})
            for (double y : {-0.5, 1.1}) {
                // 1/(rho(1+l^2) + C) = (1/rho)/(l^2 + 1 + C/rho)
                const double ref = oracle::dunkl_pair_integral(-0.5, x, y, 1, std::sqrt(1 + C / rho)) / rho;
                const cplx v = kernel_Rrho(x, y, SobolevParams(1, rho), C, c0);
                CHECK(std::abs(v - ref) < 1e-12 * std::max(1.0, std::abs(ref)));
            }
    KernelContext ctx(Multiplicity(0), kChirped);
    const SobolevParams big(2, 1e6);
    for (double x : {0.0, 1.5, -2.0})
        for (double y : {0.5, 3.0}) {
            const cplx r = kernel_Rrho(x, y, SobolevParams(2, 0.3), C, ctx);
            CHECK(std::abs(r - std::conj(kernel_Rrho(y, x, SobolevParams(2, 0.3), C, ctx))) < 1e-13);
            const cplx K = kernel_Ks(x, y, 2, ctx);
            CHECK(std::abs(1e6 * kernel_Rrho(x, y, big, C, ctx) - K) < 1e-3 * std::abs(K));
        }
}

TEST_CASE("resolvent identity on sampled kernels") {
    // (rho + Phi*Phi) R(., y) = K_s(., y), with Phi*Phi = C (1+lambda^2)^{-s} in the transform domain
    KernelContext ctx(Multiplicity(0), kFourier);
    auto g = make_space_grid(Multiplicity(0), 12, 513);
    const SobolevParams p(3, 0.5);
    const double C = 1.0 / 8, y = 0.75;
    SampledSignal R(g);
    cvec K(g->n);
    for (int j = 0; j < g->n; ++j) {
        R.values[j] = kernel_Rrho(g->nodes[j], y, p, C, ctx);
        K[j] = kernel_Ks(g->nodes[j], y, p.s, ctx);
    }
    auto F = lcdt_forward(R, ctx);
    for (int j = 0; j < g->n; ++j) F.values[j] *= p.rho + C * std::pow(1 + F.grid->nodes[j] * F.grid->nodes[j], -p.s);
    const auto back = lcdt_inverse(F, ctx, g);
    double err = 0;
    for (int j = 0; j < g->n; ++j)
        if (std::abs(g->nodes[j]) <= 6) err = std::max(err, std::abs(back.values[j] - K[j]));
    CHECK(err < 1e-4);
}

TEST_CASE("bounds on R_rho") {
    for (double k : {-0.5, 0.0, 1.0}) {
        const double s = k == 1 ? 3 : 2;
        for (auto M : {kFourier, kChirped}) {
            KernelContext ctx(Multiplicity(k), M);
            for (double rho : {1e-3, 1.0, 1e3})
                for (double y : {0.0, 1.5, -4.0}) {
                    const auto r = r_norms(y, SobolevParams(s, rho), 1.0 / 8, ctx);
                    CHECK(r.holds());
                    CHECK(r.r_ws <= r.Cs / rho);
                    CHECK(r.phi_r <= r.Cs / std::sqrt(rho));
                    CHECK(r.phistar_phi_r <= r.Cs);
                }
        }
    }
    // spectral cross-check of ||R(., y)||_{W^s} on a grid
    KernelContext ctx(Multiplicity(0), kChirped);
    auto g = make_space_grid(Multiplicity(0), 40, 4097);
    const SobolevParams p(2, 0.2);
    const double C = 1.0 / 8, y = 1.5;
    SpectralSignal DR(g, cvec(g->n), ctx.M, 0);
    for (int j = 0; j < g->n; ++j)
        DR.values[j] = lcdt_kernel(ctx, g->nodes[j], y) / (p.rho * std::pow(1 + g->nodes[j] * g->nodes[j], p.s) + C);
    CHECK(sobolev_norm(DR, p.s) == doctest::Approx(r_norms(y, p, C, ctx).r_ws).epsilon(1e-5));
}

TEST_CASE("kernel tables") {
    KernelContext ctx(Multiplicity(0), kChirped);
    const std::vector<double> xs{-1, 0, 0.5, 2};
    for (auto kind : {KernelKind::Ks, KernelKind::Rrho}) {
        const auto t = kernel_table(kind, xs, xs, SobolevParams(2, 0.5), 1.0 / 8, ctx);
        CHECK(t.hermitian_defect() < 1e-13);
        CHECK(t.values[1][3] == (kind == KernelKind::Ks ? kernel_Ks(0, 2, 2, ctx)
                                                         : kernel_Rrho(0, 2, SobolevParams(2, 0.5), 1.0 / 8, ctx)));
    }
}

TEST_CASE("extremal filters") {
    CHECK(extremal_filter(0, SobolevParams(1, 1), 1.0 / 8) == doctest::Approx(1.0 / 9).epsilon(1e-15));
    auto g = make_space_grid(Multiplicity(0), 12, 2049);
    KernelContext ctx(Multiplicity(0), kChirped);
    SpectralSignal one(g, cvec(g->n, 1.0), ctx.M, 0);
    for (int j = 0; j < g->n; ++j) one.values[j] = std::exp(-g->nodes[j] * g->nodes[j] / 2);
    const auto h = extremal_lcdt(one, SobolevParams(2, 1), ctx, g);
    const auto H = lcdt_forward(h, ctx);
    // the spectrum is not in the range of the sampled transform, so the round trip projects
    CHECK(std::abs(H.values[g->center()] - 0.5) < 1e-4);
    CHECK_THROWS_AS(extremal_lcdt(one, SobolevParams(2, 0), ctx, g), DomainError);
}

TEST_CASE("pointwise Q kernel agrees with per-scale assembly") {
    for (double k : {-0.5, 0.0})
        for (auto M : {kFourier, CanonicalMatrix(0.25, -1, 0.9375, 0.25)}) {
            auto g = make_space_grid(Multiplicity(k), 8, 257);
            KernelContext ctx(Multiplicity(k), M);
            const auto psi = make_wavelet(WaveletSpec::hermite2(), ctx, g);
            const auto sc = make_scale_grid(Multiplicity(k), 0.3, 1.0, 6);
            const auto G = cwt(gauss(g, 0.4), psi, sc, ctx);
            const SobolevParams p(2, 0.01);
            const auto fast = extremal_cwt(G, p, psi, ctx, BetaRule::Grid);
            const std::vector<double> ys{0.0, 0.5, -1.25};
            const cvec slow = extremal_cwt_pointwise(G, p, psi, ys, ctx);
            double peak = 0;
            for (auto v : fast.values) peak = std::max(peak, std::abs(v));
            for (std::size_t i = 0; i < ys.size(); ++i) {
                const int j = g->center() + static_cast<int>(std::lround(ys[i] / g->delta));
                CHECK(std::abs(slow[i] - fast.values[j]) < 1e-6 * peak);
            }
        }
}

TEST_CASE("extremal cwt solver") {
    auto g = make_space_grid(Multiplicity(1), 12, 2049);
    KernelContext ctx(Multiplicity(1), kChirped);
    const auto psi = make_wavelet(WaveletSpec::hermite2(), ctx, g);
    const auto sc = make_scale_grid(Multiplicity(1), 1e-2, 1e2, 64);
    const auto f = gauss(g, 0.5);
    const auto G = cwt(f, psi, sc, ctx);
    TimeScaleField zero = G;
    for (auto& r : zero.values) std::fill(r.begin(), r.end(), 0.0);
    for (auto& r : zero.spectra) std::fill(r.begin(), r.end(), 0.0);
    for (auto v : extremal_cwt(zero, SobolevParams(3, 0.1), psi, ctx).values) CHECK(v == cplx(0, 0));
    const double gn = std::sqrt(cwt_inner(G, G, BetaRule::Spectral).real());
    const double Cs = constant_Cs(3, ctx), nfw = sobolev_norm(f, 3, ctx);
    double prev = INFINITY;
    for (double rho : {1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6}) {
        const SobolevParams p(3, rho);
        const auto a = extremal_cwt(G, p, psi, ctx);
        const auto b = extremal_cwt_spectral(f, p, psi, ctx);
        CHECK(oracle::rel_l2(a.values, b.values, g->mu_weights) < 1e-3);
        for (auto v : a.values) CHECK(std::abs(v) <= Cs / std::sqrt(rho) * gn);
        const double gap = sup_diff(b.values, f.values);
        CHECK(gap < prev);
        prev = gap;
        // |f(y) - f*(y)| <= rho ||f||_{W^s} ||R(., y)||_{W^s}
        for (double y : {0.0, 1.5, -3.0}) {
            const int j = g->center() + static_cast<int>(std::lround(y / g->delta));
            CHECK(std::abs(f.values[j] - b.values[j]) <= rho * nfw * r_norms(y, p, psi.C, ctx).r_ws);
        }
    }
    CHECK(prev < 1e-2);
}

TEST_CASE("tikhonov optimality") {
    std::mt19937_64 rng(20240611);
    auto g = make_space_grid(Multiplicity(0), 12, 2049);
    KernelContext ctx(Multiplicity(0), kChirped);
    const auto psi = make_wavelet(WaveletSpec::hermite2(), ctx, g);
    const auto sc = make_scale_grid(Multiplicity(0), 1e-2, 1e2, 32);
    const auto f = gauss(g, 0.5);
    const auto G = cwt(f, psi, sc, ctx);
    const SobolevParams p(2, 1e-3);
    const auto u = extremal_cwt(G, p, psi, ctx);
    const double J0 = tikhonov_cwt_objective(u, G, p, psi, ctx);
    const auto Dg = lcdt_forward(f, ctx);
    const auto h = extremal_lcdt(Dg, p, ctx, g);
    const double H0 = tikhonov_lcdt_objective(h, Dg, p, ctx);
    for (int r = 0; r < 5; ++r) {
        const auto v = random_signal(g, rng);
        for (double t : {1e-2, -1e-2, 1e-3, -1e-3}) {
            SampledSignal uu = u, hh = h;
            for (int j = 0; j < g->n; ++j) {
                uu.values[j] += t * v.values[j];
                hh.values[j] += t * v.values[j];
            }
            CHECK(J0 <= tikhonov_cwt_objective(uu, G, p, psi, ctx));
            CHECK(H0 <= tikhonov_lcdt_objective(hh, Dg, p, ctx));
        }
    }
}

TEST_CASE("extremal lcdt solver") {
    auto g = make_space_grid(Multiplicity(0), 12, 2049);
    KernelContext ctx(Multiplicity(0), kChirped);
    const auto f = gauss(g, -0.5);
    const auto Dg = lcdt_forward(f, ctx);
    const double g2 = std::pow(weighted_norm(Dg.values, g->mu_weights), 2);
    double prev = INFINITY;
    for (double rho : {1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6}) {
        const SobolevParams p(2, rho);
        const auto h = extremal_lcdt(Dg, p, ctx, g);
        const auto H = lcdt_forward(h, ctx);
        for (int j = 0; j < g->n; j += 8) {
            const double l = g->nodes[j];
            CHECK(std::abs(H.values[j] - Dg.values[j] / (1 + rho * std::pow(1 + l * l, 2))) < 1e-6);
        }
        std::vector<double> ys;
        for (int j = 0; j < g->n; j += 64) ys.push_back(g->nodes[j]);
        const cvec direct = extremal_lcdt_integral(Dg, p, ys, ctx);
        for (std::size_t i = 0; i < ys.size(); ++i) CHECK(std::abs(direct[i] - h.values[i * 64]) < 1e-6);
        const double hn = sobolev_norm(H, 2);
        CHECK(rho * hn * hn <= g2 / 4);
        const double err = oracle::rel_l2(h.values, f.values, g->mu_weights);
        CHECK(err < prev);
        prev = err;
    }
}

TEST_CASE("adjoint of the transform") {
    std::mt19937_64 rng(99);
    for (double k : {-0.5, 0.0, 1.0}) {
        auto g = make_space_grid(Multiplicity(k), 20, 4097);
        KernelContext ctx(Multiplicity(k), kChirped);
        for (int r = 0; r < 3; ++r) {
            const auto f = random_signal(g, rng);
            const auto F = lcdt_forward(f, ctx);
            const auto G = lcdt_forward(random_signal(g, rng), ctx);
            for (double s : {0.0, 1.0, 2.5}) {
                const cplx lhs = weighted_inner(F.values, G.values, g->mu_weights);
                const cplx rhs = sobolev_inner(f, adjoint_lcdt(G, s, ctx, g), s, ctx);
                CHECK(std::abs(lhs - rhs) < 1e-6 * std::abs(lhs) + 1e-12);
            }
            CHECK(sup_diff(adjoint_lcdt(G, 0, ctx, g).values, lcdt_inverse(G, ctx, g).values) < 1e-15);
            // D D* acts as (1+lambda^2)^{-s}; D* F decays like |x| e^{-|x|} and is cut at |x| = 20
            const auto back = lcdt_forward(adjoint_lcdt(F, 2, ctx, g), ctx);
            double peak = 0, worst = 0;
            for (int j = 0; j < g->n; ++j) {
                peak = std::max(peak, std::abs(F.values[j]));
                worst = std::max(worst, std::abs(back.values[j] - F.values[j] / std::pow(1 + g->nodes[j] * g->nodes[j], 2)));
            }
            CHECK(worst < 1e-3 * peak);
        }
    }
}
