#include "lcdunkl/calderon.hpp"

#include <cmath>

#include "lcdunkl/convolution.hpp"
#include "lcdunkl/parallel.hpp"

namespace lcd {

CalderonWindow::CalderonWindow(double eps, double del) : epsilon(eps), delta(del) {
    if (!(eps > 0) || !(del > eps) || !std::isfinite(del)) throw DomainError("calderon window needs 0 < eps < delta < inf");
}

namespace {

double cross_constant(const WaveletSpec& w1, const WaveletSpec& w2) {
    const double c = cross_admissibility(w1, w2).value;
    if (!(std::abs(c) > 1e-14)) throw DomainError("calderon: cross admissibility constant vanishes");
    return c;
}

cvec multiplier_on(const GridPtr& g, const WaveletSpec& w1, const WaveletSpec& w2, const CalderonWindow& win) {
    const double c = cross_constant(w1, w2);
    cvec K(g->n);
    parallel_for(g->n, [&](std::size_t j) { K[j] = k_multiplier(w1, w2, win, g->nodes[j], c).value; });
    return K;
}

}  // namespace

MultiplierValue k_multiplier(const WaveletSpec& w1, const WaveletSpec& w2, const CalderonWindow& win, double lambda,
                             double c12) {
    if (lambda == 0) return {0.0, true};
    const double v = scale_integral([&](double u) { return w1.W(u) * w2.W(u); }, lambda, win.epsilon, win.delta,
                                    std::max(w1.inner(), w2.inner()), std::min(w1.support(), w2.support()));
    return {v / c12, false};
}

MultiplierValue k_multiplier(const WaveletSpec& w1, const WaveletSpec& w2, const CalderonWindow& win, double lambda) {
    return k_multiplier(w1, w2, win, lambda, cross_constant(w1, w2));
}

SampledSignal reconstruct_spectral(const SampledSignal& f, const WaveletSpec& w1, const WaveletSpec& w2,
                                   const CalderonWindow& win, const KernelContext& ctx) {
    auto F = lcdt_forward(f, ctx);
    const cvec K = multiplier_on(F.grid, w1, w2, win);
    for (int j = 0; j < F.grid->n; ++j) F.values[j] *= K[j];
    return lcdt_inverse(F, ctx, f.grid);
}

SampledSignal reconstruct_direct(const SampledSignal& f, const WaveletSpec& w1, const WaveletSpec& w2,
                                 const CalderonWindow& win, const KernelContext& ctx, int m, bool force_large) {
    const auto& g = f.grid;
    if (g->n > kDirectMaxNodes && !force_large) throw CostError("reconstruct_direct: grid too large for the oracle path");
    const double k = ctx.k.value();
    const auto psi = make_wavelet(w1, ctx, g);
    const auto phi = make_wavelet(w2, ctx, g);
    const auto sc = make_scale_grid(ctx.k, win.epsilon, win.delta, m);
    const auto Phi = cwt_direct(f, psi, sc, ctx, force_large);
    const auto T = plan_for(ctx, g, g);
    std::vector<cvec> members(g->n);
    std::vector<CompensatedCSum> acc(g->n);
    for (int i = 0; i < sc.m; ++i) {
        const double a = sc.scales[i];
        const cvec Dphi = T->forward(dilate(phi, a, ctx).values);
        const double s = std::pow(a, k + 1);
        parallel_for(g->n, [&](std::size_t jb) {
            cvec F = Dphi;
            for (int l = 0; l < g->n; ++l) F[l] *= translation_symbol(ctx, g->nodes[jb], g->nodes[l]);
            members[jb] = T->inverse(F);
        });
        for (int jb = 0; jb < g->n; ++jb) {
            const cplx w = sc.nu_scale_weights[i] * g->mu_weights[jb] * s * Phi.values[i][jb];
            if (w == cplx(0, 0)) continue;
            for (int y = 0; y < g->n; ++y) acc[y].add(w * members[jb][y]);
        }
    }
    const cplx norm = 1.0 / (pow_ib(-ctx.M.b(), k + 1) * cross_constant(w1, w2));
    SampledSignal r(g);
    for (int y = 0; y < g->n; ++y) r.values[y] = norm * acc[y].value();
    return r;
}

std::vector<SweepRow> convergence_sweep(const SampledSignal& f, const WaveletSpec& w1, const WaveletSpec& w2,
                                        const std::vector<CalderonWindow>& windows, const KernelContext& ctx) {
    for (std::size_t i = 1; i < windows.size(); ++i)
        if (windows[i].epsilon > windows[i - 1].epsilon || windows[i].delta < windows[i - 1].delta)
            throw DomainError("convergence_sweep: windows are not nested");
    const double nf = mu_norm(f);
    if (nf == 0) throw DomainError("convergence_sweep of the zero signal");
    const auto F = lcdt_forward(f, ctx);
    const double c = cross_constant(w1, w2);
    std::vector<SweepRow> rows(windows.size());
    for (std::size_t i = 0; i < windows.size(); ++i) {
        const auto& win = windows[i];
        SpectralSignal G = F;
        parallel_for(G.grid->n, [&](std::size_t j) { G.values[j] *= k_multiplier(w1, w2, win, G.grid->nodes[j], c).value; });
        const auto r = lcdt_inverse(G, ctx, f.grid);
        cvec d(f.grid->n);
        for (int j = 0; j < f.grid->n; ++j) d[j] = r.values[j] - f.values[j];
        rows[i] = {win.epsilon, win.delta, weighted_norm(d, f.grid->mu_weights) / nf};
    }
    return rows;
}

}  // namespace lcd
