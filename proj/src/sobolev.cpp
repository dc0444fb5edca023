#include "lcdunkl/sobolev.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss.hpp>
#include <cmath>

#include "lcdunkl/convolution.hpp"
#include "lcdunkl/parallel.hpp"

namespace lcd {

SobolevParams::SobolevParams(double s_, double rho_) : s(s_), rho(rho_) {
    if (!std::isfinite(s_)) throw DomainError("sobolev order must be finite");
    if (!(rho_ > 0) || !std::isfinite(rho_)) throw DomainError("tikhonov weight rho must be positive");
}

void require_kernel_order(double s, double k) {
    if (!(s > k + 1)) throw DomainError("sobolev order too small: kernels need s > k + 1");
}

namespace {

double sob_weight(double lambda, double s) { return std::pow(1 + lambda * lambda, s); }

double abs_b_factor(const KernelContext& ctx) {
    return std::pow(std::abs(ctx.M.b()), -(2 * ctx.k.value() + 2));
}

// e^{-(i/2)(a/b)(x^2 - y^2)} |b|^{-(2k+2)} I(x/|b|, y/|b|; m)
cplx kernel_from_weight(double x, double y, const SpectralWeight& m, const KernelContext& ctx) {
    const double ab = std::abs(ctx.M.b());
    const double I = kernel_integral(ctx.k.value(), x / ab, y / ab, m);
    return std::polar(abs_b_factor(ctx) * I, -0.5 * ctx.M.a() / ctx.M.b() * (x * x - y * y));
}

int node_index(const SpaceGrid& g, double y) {
    const double t = y / g.delta + g.center();
    const long j = std::lround(t);
    if (j < 0 || j >= g.n || std::abs(t - j) > 1e-9) throw DomainError("point is not a grid node");
    return static_cast<int>(j);
}

}  // namespace

cplx sobolev_inner(const SpectralSignal& F, const SpectralSignal& G, double s) {
    if (!F.grid->same_as(*G.grid)) throw MismatchError("sobolev_inner: spectra on different grids");
    if (!(F.M == G.M)) throw MismatchError("sobolev_inner: spectra of different matrices");
    CompensatedCSum acc;
    for (int j = 0; j < F.grid->n; ++j)
        acc.add(sob_weight(F.grid->nodes[j], s) * F.grid->mu_weights[j] * F.values[j] * std::conj(G.values[j]));
    return acc.value();
}

double sobolev_norm(const SpectralSignal& F, double s) { return std::sqrt(std::max(0.0, sobolev_inner(F, F, s).real())); }

cplx sobolev_inner(const SampledSignal& f, const SampledSignal& g, double s, const KernelContext& ctx) {
    require_same_grid(*f.grid, *g.grid, "sobolev_inner");
    return sobolev_inner(lcdt_forward(f, ctx), lcdt_forward(g, ctx), s);
}

double sobolev_norm(const SampledSignal& f, double s, const KernelContext& ctx) {
    return sobolev_norm(lcdt_forward(f, ctx), s);
}

double constant_Cs(double s, const KernelContext& ctx) {
    require_kernel_order(s, ctx.k.value());
    SpectralWeight m;
    m.p = -s;
    return std::sqrt(abs_b_factor(ctx) * kernel_integral(ctx.k.value(), 0, 0, m));
}

cplx kernel_Ks(double x, double y, double s, const KernelContext& ctx) {
    require_kernel_order(s, ctx.k.value());
    SpectralWeight m;
    m.p = -s;
    return kernel_from_weight(x, y, m, ctx);
}

double reproducing_check(const SampledSignal& f, double y, double s, const KernelContext& ctx) {
    require_kernel_order(s, ctx.k.value());
    const auto& g = f.grid;
    const int jy = node_index(*g, y);
    const auto F = lcdt_forward(f, ctx);
    SpectralSignal Ky(F.grid, cvec(F.grid->n), ctx.M, ctx.k.value());
    const cplx cb = 1.0 / pow_ib(ctx.M.b(), ctx.k.value() + 1);
    for (int j = 0; j < F.grid->n; ++j) {
        const double l = F.grid->nodes[j];
        Ky.values[j] = cb * lcdt_kernel(ctx, l, y) / sob_weight(l, s);
    }
    const double nf = sobolev_norm(F, s);
    if (nf == 0) return 0;
    return std::abs(sobolev_inner(F, Ky, s) - f.values[jy]) / nf;
}

cplx kernel_Rrho(double x, double y, const SobolevParams& p, double C, const KernelContext& ctx) {
    require_kernel_order(p.s, ctx.k.value());
    SpectralWeight m{0, p.s, p.rho, C, 1};
    return kernel_from_weight(x, y, m, ctx);
}

bool RNorms::holds() const {
    return r_ws <= Cs / rho && phi_r <= Cs / std::sqrt(rho) && phistar_phi_r <= Cs;
}

RNorms r_norms(double y, const SobolevParams& p, double C, const KernelContext& ctx) {
    require_kernel_order(p.s, ctx.k.value());
    const double ab = std::abs(ctx.M.b()), k = ctx.k.value(), f = abs_b_factor(ctx);
    RNorms r;
    r.Cs = constant_Cs(p.s, ctx);
    r.rho = p.rho;
    r.r_ws = std::sqrt(f * kernel_integral(k, y / ab, y / ab, SpectralWeight{p.s, p.s, p.rho, C, 2}));
    r.phi_r = std::sqrt(C * f * kernel_integral(k, y / ab, y / ab, SpectralWeight{0, p.s, p.rho, C, 2}));
    r.phistar_phi_r = std::sqrt(C * C * f * kernel_integral(k, y / ab, y / ab, SpectralWeight{-p.s, p.s, p.rho, C, 2}));
    return r;
}

double KernelTable::hermitian_defect() const {
    double d = 0;
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = 0; j < ys.size(); ++j) {
            const auto ii = std::find(xs.begin(), xs.end(), ys[j]);
            const auto jj = std::find(ys.begin(), ys.end(), xs[i]);
            if (ii == xs.end() || jj == ys.end()) continue;
            const cplx other = values[ii - xs.begin()][jj - ys.begin()];
            d = std::max(d, std::abs(values[i][j] - std::conj(other)));
        }
    return d;
}

KernelTable kernel_table(KernelKind kind, const std::vector<double>& xs, const std::vector<double>& ys,
                         const SobolevParams& p, double C, const KernelContext& ctx) {
    KernelTable t{xs, ys, std::vector<cvec>(xs.size(), cvec(ys.size())), kind};
    const std::size_t total = xs.size() * ys.size();
    parallel_for(total, [&](std::size_t idx) {
        const std::size_t i = idx / ys.size(), j = idx % ys.size();
        t.values[i][j] = kind == KernelKind::Ks ? kernel_Ks(xs[i], ys[j], p.s, ctx)
                                                : kernel_Rrho(xs[i], ys[j], p, C, ctx);
    });
    return t;
}

// ---- extremal problems ----

double extremal_filter(double lambda, const SobolevParams& p, double C) {
    return C / (p.rho * sob_weight(lambda, p.s) + C);
}

SampledSignal extremal_cwt(const TimeScaleField& g, const SobolevParams& p, const Wavelet& psi,
                           const KernelContext& ctx, BetaRule rule) {
    if (g.k != ctx.k.value() || !(g.M == ctx.M)) throw MismatchError("extremal_cwt: field of another transform");
    SampledSignal out(g.space);
    for (auto& gv : cwt_synthesis_spectra(g, psi.spec, ctx, rule)) {
        for (int j = 0; j < gv.first->n; ++j) gv.second[j] /= p.rho * sob_weight(gv.first->nodes[j], p.s) + psi.C;
        const cvec part = plan_for(ctx, g.space, gv.first)->inverse(gv.second);
        for (int j = 0; j < g.n(); ++j) out.values[j] += part[j];
    }
    const cplx norm = 1.0 / pow_ib(-ctx.M.b(), g.k + 1);
    for (auto& v : out.values) v *= norm;
    return out;
}

cplx q_kernel(double alpha, double beta, double y, const SobolevParams& p, const Wavelet& psi, const KernelContext& ctx) {
    const auto& M = ctx.M;
    const double k = ctx.k.value(), ab = std::abs(M.b()), db = M.d() / M.b();
    const double B = std::abs(beta) / ab, Y = std::abs(y) / ab;
    const double sgn = (beta < 0) != (y < 0) ? -1.0 : 1.0;
    const double top = psi.spec.support() / alpha;
    auto f = [&](double l) {
        const auto u = ctx.J(l * B), v = ctx.J(l * Y);
        const double qu = l * B / (2 * k + 2) * u.jk1, qv = l * Y / (2 * k + 2) * v.jk1;
        const double w = std::pow(l, 2 * k + 1) * psi.spec.W(l * alpha) / (p.rho * sob_weight(l, p.s) + psi.C);
        return std::polar(w * (u.jk * v.jk - sgn * qu * qv), -0.5 * db * alpha * alpha * l * l);
    };
    const double rate = B + Y + std::abs(db) * alpha * alpha * top + 1;
    const int panels = std::max(4, static_cast<int>(std::ceil(top * rate / kPi)));
    const double h = top / panels;
    CompensatedCSum acc;
    for (int i = 0; i < panels; ++i) acc.add(boost::math::quadrature::gauss<double, 20>::integrate(f, i * h, (i + 1) * h));
    const double norm = 2.0 / (std::pow(2.0, k + 1) * std::tgamma(k + 1));
    const cplx cbc = 1.0 / pow_ib(-M.b(), k + 1);
    return cbc * cbc * std::pow(alpha, k + 1) * std::polar(norm, -0.5 * M.a() / M.b() * (beta * beta + y * y)) *
           acc.value();
}

cvec extremal_cwt_pointwise(const TimeScaleField& g, const SobolevParams& p, const Wavelet& psi,
                            const std::vector<double>& ys, const KernelContext& ctx, bool force_large) {
    if (g.n() > kDirectMaxNodes && !force_large) throw CostError("extremal_cwt_pointwise: grid too large for the oracle path");
    cvec out(ys.size());
    for (std::size_t iy = 0; iy < ys.size(); ++iy) {
        std::vector<cvec> terms(g.m(), cvec(g.n()));
        for (int i = 0; i < g.m(); ++i)
            parallel_for(g.n(), [&](std::size_t j) {
                const double w = g.scales.nu_scale_weights[i] * g.space->mu_weights[j];
                terms[i][j] = g.values[i][j] == cplx(0, 0)
                                  ? cplx(0, 0)
                                  : w * g.values[i][j] * q_kernel(g.scales.scales[i], g.space->nodes[j], ys[iy], p, psi, ctx);
            });
        CompensatedCSum acc;
        for (const auto& row : terms)
            for (cplx v : row) acc.add(v);
        out[iy] = acc.value();
    }
    return out;
}

SampledSignal extremal_cwt_spectral(const SampledSignal& f, const SobolevParams& p, const Wavelet& psi,
                                    const KernelContext& ctx) {
    auto F = lcdt_forward(f, ctx);
    for (int j = 0; j < F.grid->n; ++j) F.values[j] *= extremal_filter(F.grid->nodes[j], p, psi.C);
    return lcdt_inverse(F, ctx, f.grid);
}

SampledSignal extremal_lcdt(const SpectralSignal& g, const SobolevParams& p, const KernelContext& ctx,
                            const GridPtr& space) {
    require_matrix(g, ctx);
    SpectralSignal H = g;
    for (int j = 0; j < H.grid->n; ++j) H.values[j] /= 1 + p.rho * sob_weight(H.grid->nodes[j], p.s);
    return lcdt_inverse(H, ctx, space);
}

cvec extremal_lcdt_integral(const SpectralSignal& g, const SobolevParams& p, const std::vector<double>& ys,
                            const KernelContext& ctx) {
    require_matrix(g, ctx);
    const cplx cbc = 1.0 / pow_ib(-ctx.M.b(), ctx.k.value() + 1);
    cvec out(ys.size());
    parallel_for(ys.size(), [&](std::size_t i) {
        CompensatedCSum acc;
        for (int j = 0; j < g.grid->n; ++j) {
            const double l = g.grid->nodes[j];
            acc.add(g.grid->mu_weights[j] * g.values[j] / (1 + p.rho * sob_weight(l, p.s)) *
                    lcdt_kernel_inv(ctx, ys[i], l));
        }
        out[i] = cbc * acc.value();
    });
    return out;
}

SampledSignal adjoint_lcdt(const SpectralSignal& g, double s, const KernelContext& ctx, const GridPtr& space) {
    require_matrix(g, ctx);
    SpectralSignal H = g;
    for (int j = 0; j < H.grid->n; ++j) H.values[j] /= sob_weight(H.grid->nodes[j], s);
    return lcdt_inverse(H, ctx, space);
}

double tikhonov_cwt_objective(const SampledSignal& u, const TimeScaleField& g, const SobolevParams& p,
                              const Wavelet& psi, const KernelContext& ctx) {
    if (!g.has_spectra()) throw DomainError("tikhonov objective needs a field produced by cwt");
    auto d = cwt_slices(u, psi, g.scales, ctx);
    for (int i = 0; i < d.m(); ++i)
        for (std::size_t j = 0; j < d.spectra[i].size(); ++j) d.spectra[i][j] -= g.spectra[i][j];
    const double nu = sobolev_norm(u, p.s, ctx);
    return p.rho * nu * nu + cwt_inner(d, d, BetaRule::Spectral).real();
}

double tikhonov_lcdt_objective(const SampledSignal& u, const SpectralSignal& g, const SobolevParams& p,
                               const KernelContext& ctx) {
    const auto U = lcdt_forward(u, ctx, g.grid);
    const double nu = sobolev_norm(U, p.s);
    cvec d(g.grid->n);
    for (int j = 0; j < g.grid->n; ++j) d[j] = g.values[j] - U.values[j];
    const double r = weighted_norm(d, g.grid->mu_weights);
    return p.rho * nu * nu + r * r;
}

}  // namespace lcd
