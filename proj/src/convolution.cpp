#include "lcdunkl/convolution.hpp"

#include <cmath>
#include <string>

#include "lcdunkl/parallel.hpp"

namespace lcd {

SampledSignal reflect(const SampledSignal& f) {
    cvec v(f.values.rbegin(), f.values.rend());
    return SampledSignal(f.grid, std::move(v));
}

SampledSignal chirp_modulate(const SampledSignal& f, double rate) {
    SampledSignal out(f.grid);
    for (std::size_t j = 0; j < f.size(); ++j) {
        const double x = f.grid->nodes[j];
        out.values[j] = f.values[j] * std::polar(1.0, rate * x * x);
    }
    return out;
}

cplx translation_symbol(const KernelContext& ctx, double x0, double lambda) {
    const auto& M = ctx.M;
    return std::polar(1.0, -0.5 * M.a() / M.b() * x0 * x0) * dunkl_kernel(ctx.J, lambda / M.b() * x0);
}

SampledSignal translate(const SampledSignal& f, double x0, const KernelContext& ctx) {
    if (std::abs(x0) > f.grid->x_max)
        throw DomainError("translate: shift " + std::to_string(x0) + " lies outside the grid");
    auto T = plan_for(ctx, f.grid, f.grid);
    cvec F = T->forward(f.values);
    for (int j = 0; j < f.grid->n; ++j) F[j] *= translation_symbol(ctx, x0, f.grid->nodes[j]);
    return SampledSignal(f.grid, T->inverse(F));
}

SampledSignal translate_spectrum(const SpectralSignal& F, double x0, const KernelContext& ctx, const GridPtr& space) {
    require_matrix(F, ctx);
    if (std::abs(x0) > space->x_max)
        throw DomainError("translate: shift " + std::to_string(x0) + " lies outside the grid");
    cvec G = F.values;
    for (int j = 0; j < F.grid->n; ++j) G[j] *= translation_symbol(ctx, x0, F.grid->nodes[j]);
    return SampledSignal(space, plan_for(ctx, space, F.grid)->inverse(G));
}

namespace {

cvec conv_spectrum(const Transform& T, const cvec& Ff, const cvec& Fg) {
    const auto& M = T.matrix();
    const auto& lam = T.freq()->nodes;
    cvec H(Ff.size());
    for (std::size_t j = 0; j < H.size(); ++j)
        H[j] = std::polar(1.0, -0.5 * M.d() / M.b() * lam[j] * lam[j]) * Ff[j] * Fg[j];
    return H;
}

}  // namespace

SampledSignal convolve(const SampledSignal& f, const SampledSignal& g, const KernelContext& ctx) {
    require_same_grid(*f.grid, *g.grid, "convolve");
    auto T = plan_for(ctx, f.grid, f.grid);
    return SampledSignal(f.grid, T->inverse(conv_spectrum(*T, T->forward(f.values), T->forward(g.values))));
}

SampledSignal convolve_direct(const SampledSignal& f, const SampledSignal& g, const KernelContext& ctx,
                              bool force_large) {
    require_same_grid(*f.grid, *g.grid, "convolve_direct");
    const auto& grid = *f.grid;
    if (grid.n > kDirectMaxNodes && !force_large)
        throw CostError("convolve_direct: n = " + std::to_string(grid.n) + " exceeds " +
                        std::to_string(kDirectMaxNodes) + "; pass force_large");
    auto T = plan_for(ctx, f.grid, f.grid);
    const cvec Ff = T->forward(f.values);
    const auto& M = ctx.M;
    const cplx cb = 1.0 / pow_ib(M.b(), ctx.k.value() + 1);
    const int n = grid.n;
    // e^{i(a/b)y^2} g(y) w(y)
    cvec gy(n);
    for (int m = 0; m < n; ++m) {
        const double y = grid.nodes[m];
        gy[m] = std::polar(1.0, M.a() / M.b() * y * y) * g.values[m] * grid.mu_weights[m];
    }
    cvec out(n);
    for (int j = 0; j < n; ++j) {
        const double x = grid.nodes[j];
        cvec F = Ff;
        for (int l = 0; l < n; ++l) F[l] *= translation_symbol(ctx, x, grid.nodes[l]);
        const cvec tx = T->inverse(F);
        CompensatedCSum acc;
        // (T_x f)(-y) sits at the mirrored index
        for (int m = 0; m < n; ++m) acc.add(tx[n - 1 - m] * gy[m]);
        out[j] = cb * acc.value();
    }
    return SampledSignal(f.grid, std::move(out));
}

double factorization_residual(const SampledSignal& conv, const SampledSignal& f, const SampledSignal& g,
                              const KernelContext& ctx) {
    auto T = plan_for(ctx, f.grid, f.grid);
    const cvec H = conv_spectrum(*T, T->forward(f.values), T->forward(g.values));
    const cvec C = T->forward(conv.values);
    cvec d(H.size());
    for (std::size_t j = 0; j < d.size(); ++j) d[j] = C[j] - H[j];
    return weighted_norm(d, f.grid->mu_weights) / (mu_norm(f) * mu_norm(g));
}

double l2_identity_residual(const SampledSignal& f, const SampledSignal& g, const KernelContext& ctx) {
    auto T = plan_for(ctx, f.grid, f.grid);
    const cvec Ff = T->forward(f.values), Fg = T->forward(g.values);
    CompensatedSum rhs;
    for (std::size_t j = 0; j < Ff.size(); ++j) rhs.add(std::norm(Ff[j] * Fg[j]) * f.grid->mu_weights[j]);
    const double lhs = std::pow(mu_norm(convolve(f, g, ctx)), 2);
    return std::abs(lhs - rhs.value()) / rhs.value();
}

}  // namespace lcd
