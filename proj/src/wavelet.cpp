#include "lcdunkl/wavelet.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss.hpp>
#include <cmath>
#include <limits>
#include <map>

#include "lcdunkl/convolution.hpp"
#include "lcdunkl/parallel.hpp"

namespace lcd {

// ---- windows ----

double WaveletSpec::W(double u) const {
    u = std::abs(u);
    if (table) return (*table)(u).real();
    return std::pow(u, power) * std::exp(-u * u);
}

double WaveletSpec::support() const { return table ? table->hi() : 7.0; }

double WaveletSpec::inner() const { return table ? 1e-8 * table->hi() : 1e-6; }

WaveletSpec WaveletSpec::hermite2() {
    WaveletSpec w;
    w.name = "hermite2";
    w.power = 2;
    w.analytic_C = 1.0 / 8;
    return w;
}

WaveletSpec WaveletSpec::hermite4() {
    WaveletSpec w;
    w.name = "hermite4";
    w.power = 4;
    w.analytic_C = 3.0 / 16;
    return w;
}

WaveletSpec WaveletSpec::from_table(std::vector<double> u, std::vector<double> w) {
    if (u.empty() || u.front() != 0.0) throw DomainError("window table must start at u = 0");
    if (w.front() != 0.0) throw DomainError("window table must vanish at u = 0");
    for (double v : w)
        if (!std::isfinite(v)) throw DomainError("window table has non-finite values");
    WaveletSpec s;
    s.name = "table";
    s.table = std::make_shared<CubicSpline>(std::move(u), cvec(w.begin(), w.end()));
    return s;
}

WaveletSpec WaveletSpec::by_name(const std::string& name) {
    if (name == "hermite2") return hermite2();
    if (name == "hermite4") return hermite4();
    throw DomainError("unknown wavelet window '" + name + "'");
}

double scale_integral(const std::function<double(double)>& F, double lambda, double a_lo, double a_hi, double u_lo,
                      double u_hi) {
    const double al = std::abs(lambda);
    if (al == 0) return 0;
    const double lo = std::max(al * a_lo, u_lo), hi = std::min(al * a_hi, u_hi);
    if (!(hi > lo)) return 0;
    const double t0 = std::log(lo), t1 = std::log(hi);
    const int panels = std::max(1, static_cast<int>(std::ceil((t1 - t0) / 0.25)));
    const double h = (t1 - t0) / panels;
    CompensatedSum acc;
    auto g = [&](double t) { return F(std::exp(t)); };
    for (int p = 0; p < panels; ++p)
        acc.add(boost::math::quadrature::gauss<double, 20>::integrate(g, t0 + p * h, t0 + (p + 1) * h));
    return acc.value();
}

namespace {

AdmissibilityResult admissibility_impl(const std::function<double(double)>& F, double u_lo, double u_hi,
                                       const std::vector<double>& lambdas) {
    AdmissibilityResult r;
    r.lambdas = lambdas;
    CompensatedSum acc;
    for (double l : lambdas) {
        if (l == 0) throw DomainError("admissibility needs lambda != 0");
        const double v = scale_integral(F, l, 0.0, std::numeric_limits<double>::infinity(), u_lo, u_hi);
        r.per_lambda.push_back(v);
        acc.add(v);
    }
    r.value = acc.value() / lambdas.size();
    for (double v : r.per_lambda) r.max_rel_dev = std::max(r.max_rel_dev, std::abs(v - r.value) / std::abs(r.value));
    r.vanishing = !(std::abs(r.value) > 1e-14);
    return r;
}

}  // namespace

AdmissibilityResult admissibility(const WaveletSpec& w, const std::vector<double>& lambdas) {
    auto r = admissibility_impl([&](double u) { return w.W(u) * w.W(u); }, w.inner(), w.support(), lambdas);
    if (!(r.value > 0) || !std::isfinite(r.value)) throw DomainError("window '" + w.name + "' is not admissible");
    if (r.max_rel_dev > 1e-4) throw DomainError("admissibility constant depends on lambda");
    return r;
}

AdmissibilityResult cross_admissibility(const WaveletSpec& w1, const WaveletSpec& w2,
                                        const std::vector<double>& lambdas) {
    return admissibility_impl([&](double u) { return w1.W(u) * w2.W(u); }, std::max(w1.inner(), w2.inner()),
                              std::min(w1.support(), w2.support()), lambdas);
}

// ---- wavelets and families ----

Wavelet make_wavelet(const WaveletSpec& spec, const KernelContext& ctx, const GridPtr& space) {
    const double C = admissibility(spec).value;
    cvec Wv(space->n);
    for (int j = 0; j < space->n; ++j) Wv[j] = spec.W(space->nodes[j]);
    SpectralSignal S(space, Wv, ctx.M, ctx.k.value());
    SampledSignal psi = lcdt_inverse(S, ctx, space);
    double peak = 0, edge = 0;
    const int band = std::max(1, space->n / 40);
    for (int j = 0; j < space->n; ++j) {
        const double a = std::abs(psi.values[j]);
        peak = std::max(peak, a);
        if (j < band || j >= space->n - band) edge = std::max(edge, a);
    }
    return Wavelet{spec, C, std::move(psi), std::move(S), peak > 0 ? edge / peak : 0};
}

SampledSignal dilate(const Wavelet& psi, double alpha, const KernelContext& ctx) {
    if (!(alpha > 0)) throw DomainError("dilate: alpha must be positive");
    const auto& g = psi.samples.grid;
    if (alpha < 1 && psi.edge_ratio > 1e-3) throw DomainError("dilate: wavelet does not decay on the grid");
    const double ab = ctx.M.a() / ctx.M.b();
    // interpolate the de-chirped wavelet, which is smooth
    cvec dechirp(g->n);
    for (int j = 0; j < g->n; ++j) dechirp[j] = std::polar(1.0, 0.5 * ab * g->nodes[j] * g->nodes[j]) * psi.samples.values[j];
    const CubicSpline sp(g->nodes, dechirp);
    const double amp = std::pow(alpha, -(2 * ctx.k.value() + 2));
    SampledSignal out(g);
    for (int j = 0; j < g->n; ++j) {
        const double x = g->nodes[j];
        out.values[j] = amp * std::polar(1.0, -0.5 * ab * x * x) * sp(x / alpha);
    }
    return out;
}

SampledSignal family_member(const Wavelet& psi, double alpha, double beta, const KernelContext& ctx) {
    auto t = translate(dilate(psi, alpha, ctx), beta, ctx);
    const double s = std::pow(alpha, ctx.k.value() + 1);
    for (auto& v : t.values) v *= s;
    return t;
}

cplx family_member_spectrum(const WaveletSpec& w, double alpha, double beta, double lambda, const KernelContext& ctx) {
    const auto& M = ctx.M;
    const double ph = -0.5 * (M.a() / M.b() * beta * beta + M.d() / M.b() * (alpha * alpha - 1) * lambda * lambda);
    return std::pow(alpha, ctx.k.value() + 1) * std::polar(1.0, ph) * dunkl_kernel(ctx.J, lambda / M.b() * beta) *
           w.W(lambda * alpha);
}

// ---- time-scale fields ----

TimeScaleField::TimeScaleField(ScaleGrid s, GridPtr sp, CanonicalMatrix m, double kk)
    : scales(std::move(s)), space(std::move(sp)), M(m), k(kk) {
    values.assign(scales.m, cvec(space->n, 0.0));
}

namespace {
constexpr double kMinSupportNodes = 32;
}

std::vector<GridPtr> scale_frequency_grids(const ScaleGrid& scales, const GridPtr& space, const CanonicalMatrix& M,
                                           double u_support) {
    std::vector<GridPtr> out;
    std::map<std::pair<double, int>, GridPtr> made;
    const double db = std::abs(M.d() / M.b()), xb = space->x_max / std::abs(M.b());
    for (double a : scales.scales) {
        const double ls = std::min(space->x_max, u_support / a);
        const double rate = db * std::abs(a * a - 1) * ls + xb;
        if (rate * space->delta <= Transform::kMaxPhaseStep && ls >= kMinSupportNodes * space->delta) {
            out.push_back(space);
            continue;
        }
        const double h = std::min(Transform::kMaxPhaseStep / rate, ls / kMinSupportNodes);
        const int half = std::max(16, static_cast<int>(std::ceil(ls / h)));
        auto key = std::make_pair(ls, half);
        auto it = made.find(key);
        if (it == made.end()) it = made.emplace(key, make_space_grid(Multiplicity(space->k), ls, 2 * half + 1)).first;
        out.push_back(it->second);
    }
    return out;
}

namespace {

cplx scale_phase(double b, double k) { return pow_ib(-b, k + 1) / pow_ib(b, k + 1); }

void require_field_match(const TimeScaleField& a, const TimeScaleField& b) {
    if (!a.space->same_as(*b.space) || a.scales.scales != b.scales.scales || !(a.M == b.M) || a.k != b.k)
        throw MismatchError("time-scale fields live on different grids");
}

}  // namespace

namespace {

TimeScaleField cwt_impl(const SampledSignal& f, const Wavelet& psi, const ScaleGrid& scales, const KernelContext& ctx,
                        bool with_values) {
    const double k = ctx.k.value();
    const auto& M = ctx.M;
    TimeScaleField out(scales, f.grid, M, k);
    out.freq = scale_frequency_grids(scales, f.grid, M, psi.spec.support());
    out.spectra.resize(scales.m);
    std::map<const SpaceGrid*, cvec> spectra_of_f;
    for (const auto& G : out.freq)
        if (!spectra_of_f.count(G.get())) spectra_of_f[G.get()] = plan_for(ctx, f.grid, G)->forward(f.values);
    const cplx ph = scale_phase(M.b(), k);
    const double ab = M.a() / M.b(), db = M.d() / M.b();
    const int n = f.grid->n;
    for (int i = 0; i < scales.m; ++i) {
        const double a = scales.scales[i];
        const auto& G = out.freq[i];
        const cvec& Df = spectra_of_f[G.get()];
        cvec S(G->n);
        for (int j = 0; j < G->n; ++j) {
            const double l = G->nodes[j];
            const double wv = psi.spec.W(l * a);
            S[j] = wv == 0 ? cplx(0) : Df[j] * std::polar(1.0, 0.5 * db * a * a * l * l) * wv;
        }
        if (!with_values) {
            out.spectra[i] = std::move(S);
            continue;
        }
        const cvec U = plan_for(ctx, f.grid, G)->inverse(S);
        const cplx pre = ph * std::pow(a, k + 1);
        for (int j = 0; j < n; ++j) {
            const double b = f.grid->nodes[j];
            out.values[i][j] = pre * std::polar(1.0, ab * b * b) * U[n - 1 - j];
        }
        out.spectra[i] = std::move(S);
    }
    return out;
}

}  // namespace

TimeScaleField cwt(const SampledSignal& f, const Wavelet& psi, const ScaleGrid& scales, const KernelContext& ctx) {
    return cwt_impl(f, psi, scales, ctx, true);
}

TimeScaleField cwt_slices(const SampledSignal& f, const Wavelet& psi, const ScaleGrid& scales,
                          const KernelContext& ctx) {
    return cwt_impl(f, psi, scales, ctx, false);
}

TimeScaleField cwt_direct(const SampledSignal& f, const Wavelet& psi, const ScaleGrid& scales,
                          const KernelContext& ctx, bool force_large) {
    const auto& g = f.grid;
    if (g->n > kDirectMaxNodes && !force_large) throw CostError("cwt_direct: grid too large for the oracle path");
    const double k = ctx.k.value();
    TimeScaleField out(scales, g, ctx.M, k);
    out.freq.assign(scales.m, g);
    auto T = plan_for(ctx, g, g);
    const cplx cb = 1.0 / pow_ib(ctx.M.b(), k + 1);
    cvec fw(g->n);
    for (int j = 0; j < g->n; ++j) fw[j] = f.values[j] * g->mu_weights[j];
    for (int i = 0; i < scales.m; ++i) {
        const double a = scales.scales[i];
        const cvec Fpsi = T->forward(dilate(psi, a, ctx).values);
        const double s = std::pow(a, k + 1);
        parallel_for(g->n, [&](std::size_t jj) {
            const double beta = g->nodes[jj];
            cvec F = Fpsi;
            for (int l = 0; l < g->n; ++l) F[l] *= translation_symbol(ctx, beta, g->nodes[l]);
            const cvec member = T->inverse(F);
            CompensatedCSum acc;
            for (int m = 0; m < g->n; ++m) acc.add(fw[m] * std::conj(s * member[m]));
            out.values[i][jj] = cb * acc.value();
        });
    }
    return out;
}

cplx cwt_inner(const TimeScaleField& a, const TimeScaleField& b, BetaRule rule) {
    require_field_match(a, b);
    const double kk = 2 * a.k + 2;
    CompensatedCSum acc;
    for (int i = 0; i < a.m(); ++i) {
        const double nu = a.scales.nu_scale_weights[i];
        if (rule == BetaRule::Spectral) {
            if (!a.has_spectra() || !b.has_spectra()) throw DomainError("spectral beta rule needs fields produced by cwt");
            if (!a.freq[i]->same_as(*b.freq[i])) throw MismatchError("fields use different frequency grids");
            const double s = nu * std::pow(a.scales.scales[i], kk);
            acc.add(s * weighted_inner(a.spectra[i], b.spectra[i], a.freq[i]->mu_weights));
        } else {
            acc.add(nu * weighted_inner(a.values[i], b.values[i], a.space->mu_weights));
        }
    }
    return acc.value();
}

CwtIdentity cwt_plancherel_residual(const SampledSignal& f, const Wavelet& psi, const ScaleGrid& scales,
                                    const KernelContext& ctx) {
    const double nf = mu_norm(f);
    if (nf == 0) throw DomainError("cwt plancherel residual of the zero signal");
    const auto F = cwt(f, psi, scales, ctx);
    CwtIdentity r;
    r.rhs = psi.C * nf * nf;
    r.lhs = cwt_inner(F, F, BetaRule::Spectral);
    r.lhs_grid = cwt_inner(F, F, BetaRule::Grid);
    r.residual = std::abs(r.lhs - r.rhs) / std::abs(r.rhs);
    r.residual_grid = std::abs(r.lhs_grid - r.rhs) / std::abs(r.rhs);
    return r;
}

CwtIdentity cwt_orthogonality_residual(const SampledSignal& f, const SampledSignal& g, const Wavelet& psi,
                                       const Wavelet& phi, const ScaleGrid& scales, const KernelContext& ctx) {
    const double nf = mu_norm(f), ng = mu_norm(g);
    if (nf == 0 || ng == 0) throw DomainError("cwt orthogonality residual with a zero signal");
    const auto cr = cross_admissibility(psi.spec, phi.spec);
    if (cr.vanishing) throw DomainError("cross admissibility constant vanishes");
    const auto A = cwt(f, psi, scales, ctx), B = cwt(g, phi, scales, ctx);
    CwtIdentity r;
    r.rhs = cr.value * mu_inner(f, g);
    r.lhs = cwt_inner(A, B, BetaRule::Spectral);
    r.lhs_grid = cwt_inner(A, B, BetaRule::Grid);
    const double scale = std::sqrt(psi.C * phi.C) * nf * ng;
    r.residual = std::abs(r.lhs - r.rhs) / scale;
    r.residual_grid = std::abs(r.lhs_grid - r.rhs) / scale;
    return r;
}

cvec beta_projection(const TimeScaleField& field, int i, const KernelContext& ctx, BetaRule rule) {
    const auto& M = ctx.M;
    if (!(M == field.M)) throw MismatchError("field was produced with a different matrix");
    const double k = field.k, a = field.scales.scales[i], db = M.d() / M.b(), ab = M.a() / M.b();
    const auto& G = field.freq[i];
    const cplx cb = 1.0 / pow_ib(M.b(), k + 1);
    cvec B(G->n);
    if (rule == BetaRule::Spectral) {
        if (!field.has_spectra()) throw DomainError("spectral beta rule needs a field produced by cwt");
        const cplx pre = scale_phase(M.b(), k) * std::pow(a, k + 1) / cb;
        for (int j = 0; j < G->n; ++j)
            B[j] = pre * field.spectra[i][j] * std::polar(1.0, -0.5 * db * G->nodes[j] * G->nodes[j]);
        return B;
    }
    const int n = field.n();
    cvec h(n);
    for (int j = 0; j < n; ++j) {
        const double b = field.space->nodes[j];
        h[j] = field.values[i][n - 1 - j] * std::polar(1.0, -ab * b * b);
    }
    const cvec D = plan_for(ctx, field.space, G)->forward(h);
    for (int j = 0; j < G->n; ++j) B[j] = D[j] * std::polar(1.0, -0.5 * db * G->nodes[j] * G->nodes[j]) / cb;
    return B;
}

std::vector<std::pair<GridPtr, cvec>> cwt_synthesis_spectra(const TimeScaleField& field, const WaveletSpec& phi,
                                                            const KernelContext& ctx, BetaRule rule) {
    const double k = field.k, db = ctx.M.d() / ctx.M.b();
    // groups in order of first appearance, so the summation order is fixed
    std::vector<std::pair<GridPtr, cvec>> acc;
    for (int i = 0; i < field.m(); ++i) {
        const auto& G = field.freq[i];
        const double a = field.scales.scales[i];
        const cvec B = beta_projection(field, i, ctx, rule);
        auto it = std::find_if(acc.begin(), acc.end(), [&](const auto& p) { return p.first.get() == G.get(); });
        if (it == acc.end()) it = acc.insert(acc.end(), {G, cvec(G->n, 0.0)});
        auto& slot = *it;
        const double pre = field.scales.nu_scale_weights[i] * std::pow(a, k + 1);
        for (int j = 0; j < G->n; ++j) {
            const double l = G->nodes[j];
            const double w2 = phi.W(l * a);
            if (w2 != 0) slot.second[j] += pre * std::polar(1.0, -0.5 * db * (a * a - 1) * l * l) * w2 * B[j];
        }
    }
    return acc;
}

SampledSignal cwt_inverse(const TimeScaleField& field, const Wavelet& phi, cplx c_cross, const KernelContext& ctx,
                          BetaRule rule) {
    if (!(std::abs(c_cross) > 1e-14)) throw DomainError("cwt_inverse: degenerate cross constant");
    SampledSignal out(field.space);
    for (auto& gv : cwt_synthesis_spectra(field, phi.spec, ctx, rule)) {
        const cvec part = plan_for(ctx, field.space, gv.first)->inverse(gv.second);
        for (int j = 0; j < field.n(); ++j) out.values[j] += part[j];
    }
    const cplx norm = 1.0 / (pow_ib(-ctx.M.b(), field.k + 1) * c_cross);
    for (auto& v : out.values) v *= norm;
    return out;
}

}  // namespace lcd
