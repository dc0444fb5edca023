#include "doctest.h"
#include "lcdunkl/convolution.hpp"
#include "oracles.hpp"

using namespace lcd;

namespace {

SampledSignal gauss(const GridPtr& g, double shift = 0, double width = 1, cplx amp = 1) {
    SampledSignal f(g);
    for (int j = 0; j < g->n; ++j) {
        const double x = (g->nodes[j] - shift) / width;
        f.values[j] = amp * std::exp(-x * x / 2);
    }
    return f;
}

double rel(const SampledSignal& a, const SampledSignal& b) {
    return oracle::rel_l2(a.values, b.values, a.grid->mu_weights);
}

}  // namespace

TEST_CASE("reflect and chirp") {
    auto g = make_space_grid(Multiplicity(0), 8, 257);
    SampledSignal e = gauss(g), o(g);
    for (int j = 0; j < g->n; ++j) o.values[j] = g->nodes[j] * e.values[j];
    CHECK(reflect(e).values == e.values);
    for (int j = 0; j < g->n; ++j) CHECK(reflect(o).values[j] == -o.values[j]);
    auto f = gauss(g, 1.3, 0.8, cplx(1, 2));
    CHECK(reflect(reflect(f)).values == f.values);
    CHECK(chirp_modulate(f, 0).values == f.values);
    CHECK(mu_norm(chirp_modulate(f, 0.7)) == doctest::Approx(mu_norm(f)).epsilon(1e-15));
    CHECK(oracle::max_abs_diff(chirp_modulate(chirp_modulate(f, 0.7), -0.7).values, f.values) < 1e-15);
}

TEST_CASE("translation") {
    auto g = make_space_grid(Multiplicity(-0.5), 12, 2049);
    KernelContext ctx(Multiplicity(-0.5), CanonicalMatrix(0, -1, 1, 0));
    auto f = gauss(g, 0.5);
    CHECK(rel(translate(f, 0.0, ctx), f) < 1e-12);
    // shift convention: T_{x0} f = f(. + x0)
    for (double x0 : {-2.0, 1.5, 3.25}) CHECK(rel(translate(f, x0, ctx), gauss(g, 0.5 - x0)) < 1e-6);
    CHECK_THROWS_AS(translate(f, 20.0, ctx), DomainError);
    for (double k : {0.0, 1.0}) {
        auto gk = make_space_grid(Multiplicity(k), 12, 2049);
        KernelContext c2(Multiplicity(k), CanonicalMatrix(1, 1, 0.5, 1.5));
        auto fk = gauss(gk, 0.7, 1.1);
        for (double x0 : {-3.0, 0.5, 2.0}) {
            const double r = mu_norm(translate(fk, x0, c2)) / mu_norm(fk);
            CHECK(r <= 4.0);
            CHECK(r <= 1 + 1e-6);
        }
    }
}

TEST_CASE("product formula on a single-node spectrum") {
    // u = E^{M^-1}(., lambda0) given through a single-node spectrum, so T_x
    // acts by the symbol at lambda0.
    for (double k : {-0.5, 0.0, 1.0}) {
        auto g = make_space_grid(Multiplicity(k), 12, 2049);
        KernelContext ctx(Multiplicity(k), CanonicalMatrix(1, 1, 0.5, 1.5));
        const int j0 = g->center() + 97;
        const double l0 = g->nodes[j0];
        cvec F(g->n, 0.0);
        F[j0] = 1.0 / (std::conj(1.0 / pow_ib(1.0, k + 1)) * g->mu_weights[j0]);
        const SpectralSignal U(g, F, ctx.M, k);
        auto u = lcdt_inverse(U, ctx, g);
        for (double x : {-1.5, 0.4, 2.0}) {
            auto tu = translate_spectrum(U, x, ctx, g);
            for (int m : {g->center() - 300, g->center() + 11, g->center() + 420}) {
                const double y = g->nodes[m];
                const cplx ref = std::polar(1.0, 0.5 * 1.5 * l0 * l0) * lcdt_kernel_inv(ctx, x, l0) * lcdt_kernel_inv(ctx, y, l0);
                CHECK(std::abs(u.values[m] - lcdt_kernel_inv(ctx, y, l0)) < 1e-10);
                CHECK(std::abs(tu.values[m] - ref) < 1e-4);
            }
        }
    }
}

TEST_CASE("convolution is commutative and factorizes") {
    for (double k : {-0.5, 0.0, 1.0})
        for (auto M : {CanonicalMatrix(0, -1, 1, 0), CanonicalMatrix(1, 1, 0.5, 1.5)}) {
            auto g = make_space_grid(Multiplicity(k), 12, 2049);
            KernelContext ctx(Multiplicity(k), M);
            auto f = gauss(g, 0.6, 0.9), h = gauss(g, -0.4, 1.2, cplx(0.5, -1));
            auto fh = convolve(f, h, ctx), hf = convolve(h, f, ctx);
            CHECK(oracle::max_abs_diff(fh.values, hf.values) < 1e-12);
            CHECK(factorization_residual(fh, f, h, ctx) < 1e-8);
            CHECK(l2_identity_residual(f, h, ctx) < 1e-6);
        }
}

TEST_CASE("classical gaussian convolution") {
    auto g = make_space_grid(Multiplicity(-0.5), 12, 2049);
    KernelContext ctx(Multiplicity(-0.5), CanonicalMatrix(0, -1, 1, 0));
    auto c = convolve(gauss(g), gauss(g), ctx);
    // int e^{-(x-y)^2/2} e^{-y^2/2} dy = sqrt(pi) e^{-x^2/4}, times c_b / sqrt(2 pi)
    auto ref = gauss(g, 0, std::sqrt(2.0), std::polar(1.0, oracle::pi / 4) / std::sqrt(2.0));
    CHECK(oracle::max_abs_diff(c.values, ref.values) < 1e-10);
}

TEST_CASE("spectral convolution matches the direct definition") {
    for (double k : {-0.5, 0.0})
        for (auto M : {CanonicalMatrix(0, -1, 1, 0), CanonicalMatrix(0.25, -1, 0.9375, 0.25)}) {
            auto g = make_space_grid(Multiplicity(k), 8, 257);
            KernelContext ctx(Multiplicity(k), M);
            auto f = gauss(g, 0.5, 0.8), h = gauss(g, -0.3, 1.0);
            auto fast = convolve(f, h, ctx);
            auto slow = convolve_direct(f, h, ctx);
            CHECK(rel(slow, fast) < 1e-4);
            CHECK(rel(convolve_direct(h, f, ctx), slow) < 1e-4);
            CHECK(factorization_residual(slow, f, h, ctx) < 1e-4);
            for (auto v : convolve_direct(SampledSignal(g), h, ctx).values) CHECK(v == cplx(0, 0));
        }
    auto big = make_space_grid(Multiplicity(0), 8, 1025);
    KernelContext ctx(Multiplicity(0), CanonicalMatrix(0, -1, 1, 0));
    CHECK_THROWS_AS(convolve_direct(gauss(big), gauss(big), ctx), CostError);
}
