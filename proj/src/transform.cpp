#include "lcdunkl/transform.hpp"

#include <cmath>
#include <list>
#include <mutex>
#include <sstream>

#include "lcdunkl/parallel.hpp"

namespace lcd {

SpectralSignal::SpectralSignal(GridPtr g, cvec v, CanonicalMatrix m, double kk)
    : grid(std::move(g)), values(std::move(v)), M(m), k(kk) {
    if (!grid) throw DomainError("spectral signal without grid");
    if (values.size() != static_cast<std::size_t>(grid->n)) throw MismatchError("spectral signal length differs from grid size");
}

struct KernelCore {
    double k = 0, absb = 0;
    GridPtr space, freq;
    int hs = 0, hf = 0;  // nonnegative node counts minus one
    std::vector<double> P, Q;    // (hf+1) x (hs+1)
    std::vector<double> PT, QT;  // transposes, empty when the grids coincide
    bool symmetric = false;

    const double* prow(int j) const { return &P[static_cast<std::size_t>(j) * (hs + 1)]; }
    const double* qrow(int j) const { return &Q[static_cast<std::size_t>(j) * (hs + 1)]; }
    const double* pcol(int m) const {
        return symmetric ? prow(m) : &PT[static_cast<std::size_t>(m) * (hf + 1)];
    }
    const double* qcol(int m) const {
        return symmetric ? qrow(m) : &QT[static_cast<std::size_t>(m) * (hf + 1)];
    }
};

namespace {

std::shared_ptr<const KernelCore> build_core(double k, double absb, const GridPtr& space, const GridPtr& freq) {
    auto core = std::make_shared<KernelCore>();
    core->k = k;
    core->absb = absb;
    core->space = space;
    core->freq = freq;
    core->hs = space->center();
    core->hf = freq->center();
    core->symmetric = space->same_as(*freq);
    const int ns = core->hs + 1, nf = core->hf + 1;
    core->P.assign(static_cast<std::size_t>(ns) * nf, 0.0);
    core->Q.assign(static_cast<std::size_t>(ns) * nf, 0.0);
    const BesselPairEval J(k);
    const double inv2k2 = 1.0 / (2 * k + 2);
    const bool sym = core->symmetric;
    parallel_for(nf, [&](std::size_t jj) {
        const int j = static_cast<int>(jj);
        const double lam = freq->nodes[freq->center() + j];
        for (int m = sym ? j : 0; m < ns; ++m) {
            const double z = lam * space->nodes[space->center() + m] / absb;
            const auto p = J(z);
            core->P[static_cast<std::size_t>(j) * ns + m] = p.jk;
            core->Q[static_cast<std::size_t>(j) * ns + m] = z * inv2k2 * p.jk1;
        }
    });
    if (sym) {
        for (int j = 0; j < nf; ++j)
            for (int m = 0; m < j; ++m) {
                core->P[static_cast<std::size_t>(j) * ns + m] = core->P[static_cast<std::size_t>(m) * ns + j];
                core->Q[static_cast<std::size_t>(j) * ns + m] = core->Q[static_cast<std::size_t>(m) * ns + j];
            }
    } else {
        core->PT.resize(core->P.size());
        core->QT.resize(core->Q.size());
        for (int j = 0; j < nf; ++j)
            for (int m = 0; m < ns; ++m) {
                core->PT[static_cast<std::size_t>(m) * nf + j] = core->P[static_cast<std::size_t>(j) * ns + m];
                core->QT[static_cast<std::size_t>(m) * nf + j] = core->Q[static_cast<std::size_t>(j) * ns + m];
            }
    }
    return core;
}

std::mutex g_cache_mu;
std::list<std::shared_ptr<const KernelCore>> g_cache;
constexpr std::size_t kCacheSize = 4;

std::shared_ptr<const KernelCore> core_for(double k, double absb, const GridPtr& space, const GridPtr& freq) {
    {
        std::lock_guard<std::mutex> lk(g_cache_mu);
        for (auto it = g_cache.begin(); it != g_cache.end(); ++it) {
            const auto& c = *it;
            if (c->k == k && c->absb == absb && c->space->same_as(*space) && c->freq->same_as(*freq)) {
                auto hit = *it;
                g_cache.erase(it);
                g_cache.push_front(hit);
                return hit;
            }
        }
    }
    auto core = build_core(k, absb, space, freq);
    std::lock_guard<std::mutex> lk(g_cache_mu);
    g_cache.push_front(core);
    while (g_cache.size() > kCacheSize) g_cache.pop_back();
    return core;
}

inline void two_sum_add(double& s, double& c, double v) {
    const double t = s + v;
    const double bp = t - s;
    c += (s - (t - bp)) + (v - bp);
    s = t;
}

// sum_m row[m] * v[m], compensated, ascending m
cplx cdot(const double* row, const cplx* v, int len) {
    double sr = 0, cr = 0, si = 0, ci = 0;
    for (int m = 0; m < len; ++m) {
        two_sum_add(sr, cr, row[m] * v[m].real());
        two_sum_add(si, ci, row[m] * v[m].imag());
    }
    return {sr + cr, si + ci};
}

}  // namespace

void clear_plan_cache() {
    std::lock_guard<std::mutex> lk(g_cache_mu);
    g_cache.clear();
}

double Transform::phase_increment(const CanonicalMatrix& M, const SpaceGrid& space, const SpaceGrid& freq) {
    const double b = std::abs(M.b());
    return (std::abs(M.a()) / b * space.x_max + freq.x_max / b) * space.delta +
           std::abs(M.d()) / b * freq.x_max * freq.delta;
}

Transform::Transform(const KernelContext& ctx, GridPtr space, GridPtr freq)
    : k_(ctx.k.value()), M_(ctx.M), space_(std::move(space)), freq_(std::move(freq)) {
    if (!space_ || !freq_) throw DomainError("transform needs grids");
    if (space_->k != k_ || freq_->k != k_) throw MismatchError("grid multiplicity differs from kernel context");
    const double step = phase_increment(M_, *space_, *freq_);
    if (step > kMaxPhaseStep) {
        std::ostringstream os;
        os << "resolution guard: kernel phase step " << step << " rad exceeds pi/4; increase n or reduce x_max/lambda_max";
        throw ResolutionError(os.str());
    }
    core_ = core_for(k_, std::abs(M_.b()), space_, freq_);
    const double ab = M_.a() / M_.b(), db = M_.d() / M_.b();
    for (double x : space_->nodes) chirp_x_.push_back(std::polar(1.0, 0.5 * ab * x * x));
    for (double l : freq_->nodes) chirp_l_.push_back(std::polar(1.0, 0.5 * db * l * l));
    cb_ = 1.0 / pow_ib(M_.b(), k_ + 1);
}

cvec Transform::forward(const cvec& f) const {
    const int ns = space_->n, cs = space_->center(), hs = core_->hs;
    const int cf = freq_->center(), hf = core_->hf;
    if (static_cast<int>(f.size()) != ns) throw MismatchError("forward: signal length differs from grid");
    const double s = M_.b() > 0 ? 1.0 : -1.0;
    cvec ge(hs + 1), go(hs + 1);
    const auto& w = space_->mu_weights;
    ge[0] = f[cs] * chirp_x_[cs] * w[cs];
    go[0] = 0;
    for (int m = 1; m <= hs; ++m) {
        const cplx gp = f[cs + m] * chirp_x_[cs + m] * w[cs + m];
        const cplx gm = f[cs - m] * chirp_x_[cs - m] * w[cs - m];
        ge[m] = gp + gm;
        go[m] = gp - gm;
    }
    cvec F(freq_->n);
    const cplx is(0, s);
    parallel_for(hf + 1, [&](std::size_t jj) {
        const int j = static_cast<int>(jj);
        const cplx se = cdot(core_->prow(j), ge.data(), hs + 1);
        const cplx so = cdot(core_->qrow(j), go.data(), hs + 1);
        F[cf + j] = cb_ * chirp_l_[cf + j] * (se - is * so);
        if (j > 0) F[cf - j] = cb_ * chirp_l_[cf - j] * (se + is * so);
    });
    return F;
}

cvec Transform::inverse(const cvec& F) const {
    const int nf = freq_->n, cf = freq_->center(), hf = core_->hf;
    const int cs = space_->center(), hs = core_->hs;
    if (static_cast<int>(F.size()) != nf) throw MismatchError("inverse: spectrum length differs from grid");
    const double s = M_.b() > 0 ? 1.0 : -1.0;
    const auto& w = freq_->mu_weights;
    cvec he(hf + 1), ho(hf + 1);
    he[0] = F[cf] * std::conj(chirp_l_[cf]) * w[cf];
    ho[0] = 0;
    for (int j = 1; j <= hf; ++j) {
        const cplx hp = F[cf + j] * std::conj(chirp_l_[cf + j]) * w[cf + j];
        const cplx hm = F[cf - j] * std::conj(chirp_l_[cf - j]) * w[cf - j];
        he[j] = hp + hm;
        ho[j] = hp - hm;
    }
    const cplx cbc = std::conj(cb_);
    const cplx is(0, s);
    cvec f(space_->n);
    parallel_for(hs + 1, [&](std::size_t mm) {
        const int m = static_cast<int>(mm);
        const cplx se = cdot(core_->pcol(m), he.data(), hf + 1);
        const cplx so = cdot(core_->qcol(m), ho.data(), hf + 1);
        f[cs + m] = cbc * std::conj(chirp_x_[cs + m]) * (se + is * so);
        if (m > 0) f[cs - m] = cbc * std::conj(chirp_x_[cs - m]) * (se - is * so);
    });
    return f;
}

std::shared_ptr<const Transform> plan_for(const KernelContext& ctx, const GridPtr& space, const GridPtr& freq) {
    return std::make_shared<Transform>(ctx, space, freq);
}

void require_matrix(const SpectralSignal& F, const KernelContext& ctx) {
    if (!(F.M == ctx.M) || F.k != ctx.k.value()) throw MismatchError("spectral signal was produced with a different matrix or k");
}

SpectralSignal lcdt_forward(const SampledSignal& f, const KernelContext& ctx, const GridPtr& freq) {
    auto T = plan_for(ctx, f.grid, freq);
    return SpectralSignal(freq, T->forward(f.values), ctx.M, ctx.k.value());
}

SpectralSignal lcdt_forward(const SampledSignal& f, const KernelContext& ctx) { return lcdt_forward(f, ctx, f.grid); }

SampledSignal lcdt_inverse(const SpectralSignal& F, const KernelContext& ctx, const GridPtr& space) {
    require_matrix(F, ctx);
    auto T = plan_for(ctx, space, F.grid);
    return SampledSignal(space, T->inverse(F.values));
}

double plancherel_residual(const SampledSignal& f, const KernelContext& ctx, const GridPtr& freq) {
    const double nf = mu_norm(f);
    if (nf == 0) throw DomainError("plancherel residual of the zero signal");
    const auto F = lcdt_forward(f, ctx, freq);
    return std::abs(weighted_norm(F.values, freq->mu_weights) - nf) / nf;
}

double plancherel_residual(const SampledSignal& f, const KernelContext& ctx) {
    return plancherel_residual(f, ctx, f.grid);
}

double parseval_residual(const SampledSignal& f, const SampledSignal& g, const KernelContext& ctx, const GridPtr& freq) {
    require_same_grid(*f.grid, *g.grid, "parseval_residual");
    const double nf = mu_norm(f), ng = mu_norm(g);
    if (nf == 0 || ng == 0) throw DomainError("parseval residual with a zero signal");
    const auto F = lcdt_forward(f, ctx, freq);
    const auto G = lcdt_forward(g, ctx, freq);
    return std::abs(mu_inner(f, g) - weighted_inner(F.values, G.values, freq->mu_weights)) / (nf * ng);
}

double parseval_residual(const SampledSignal& f, const SampledSignal& g, const KernelContext& ctx) {
    return parseval_residual(f, g, ctx, f.grid);
}

}  // namespace lcd
