#include "lcdunkl/measure.hpp"

#include <boost/math/special_functions/zeta.hpp>
#include <cmath>
#include <string>

namespace lcd {

Multiplicity::Multiplicity(double k) : k_(k) {
    if (!std::isfinite(k) || k < -0.5) throw DomainError("multiplicity k must be >= -1/2, got " + std::to_string(k));
}

CanonicalMatrix::CanonicalMatrix(double a, double b, double c, double d) : a_(a), b_(b), c_(c), d_(d) {
    if (!(std::isfinite(a) && std::isfinite(b) && std::isfinite(c) && std::isfinite(d)))
        throw DomainError("matrix entries must be finite");
    if (b == 0.0) throw DomainError("matrix entry b must be nonzero");
    if (std::abs(a * d - b * c - 1.0) > 1e-12) throw DomainError("matrix determinant a*d - b*c must equal 1");
}

double mu_normalizer(double k) { return 1.0 / (std::pow(2.0, k + 1.0) * std::tgamma(k + 1.0)); }

namespace {

// Rows p = 0,1,2 of the inverse of V[j][p] = j^{2p}, j = 1..4, p = 0..3: they
// turn G(h), G(2h), G(3h), G(4h) of an even G into its Taylor coefficients
// c_{2p} h^{2p}.
constexpr double kEvenFit[3][4] = {
    {8.0 / 5.0, -4.0 / 5.0, 8.0 / 35.0, -1.0 / 35.0},
    {-61.0 / 90.0, 169.0 / 180.0, -3.0 / 10.0, 7.0 / 180.0},
    {29.0 / 360.0, -13.0 / 90.0, 3.0 / 40.0, -1.0 / 90.0},
};

bool is_even_integer(double beta) {
    const double r = std::round(beta);
    return r == beta && std::fmod(r, 2.0) == 0.0;
}

}  // namespace

GridPtr make_space_grid(Multiplicity km, double x_max, int n) {
    const double k = km.value();
    if (!(x_max > 0) || !std::isfinite(x_max)) throw DomainError("grid x_max must be positive");
    if (n < 3) throw DomainError("grid n must be >= 3");
    if (n % 2 == 0) throw DomainError("grid n must be odd so that 0 is a node");

    auto g = std::make_shared<SpaceGrid>();
    g->k = k;
    g->x_max = x_max;
    g->n = n;
    const int c = n / 2;
    const double h = x_max / c;
    g->delta = h;
    g->nodes.resize(n);
    g->mu_weights.resize(n);
    const double beta = 2 * k + 1;
    const double norm = mu_normalizer(k);
    for (int j = 0; j < n; ++j) {
        const int off = j - c;
        g->nodes[j] = (off == c || off == -c) ? std::copysign(x_max, off) : off * h;
        const double ax = std::abs(off) * h;
        double w = h * (beta == 0.0 ? 1.0 : std::pow(ax, beta));
        if (j == 0 || j == n - 1) w *= 0.5;
        g->mu_weights[j] = w;
    }
    if (beta != 0.0 && !is_even_integer(beta) && c >= 5) {
        const double hb = std::pow(h, beta + 1);
        double z[3];
        for (int p = 0; p < 3; ++p) z[p] = boost::math::zeta(-beta - 2 * p);
        for (int j = 1; j <= 4; ++j) {
            double corr = 0;
            for (int p = 0; p < 3; ++p) corr += z[p] * kEvenFit[p][j - 1];
            g->mu_weights[c + j] -= hb * corr;
            g->mu_weights[c - j] -= hb * corr;
        }
    }
    for (auto& w : g->mu_weights) {
        w *= norm;
        if (!(w >= 0) || !std::isfinite(w)) throw DomainError("grid weights not finite and nonnegative; refine the grid");
    }
    return g;
}

ScaleGrid make_scale_grid(Multiplicity km, double alpha_min, double alpha_max, int m) {
    if (!(alpha_min > 0) || !(alpha_max > alpha_min) || !std::isfinite(alpha_max))
        throw DomainError("scale grid needs 0 < alpha_min < alpha_max");
    if (m < 1) throw DomainError("scale grid needs m >= 1");
    ScaleGrid s;
    s.k = km.value();
    s.alpha_min = alpha_min;
    s.alpha_max = alpha_max;
    s.m = m;
    const double t0 = std::log(alpha_min);
    s.log_step = (std::log(alpha_max) - t0) / m;
    for (int i = 0; i < m; ++i) {
        const double a = std::exp(t0 + (i + 0.5) * s.log_step);
        s.scales.push_back(a);
        // d alpha / alpha^{2k+3} = dt / alpha^{2k+2}
        s.nu_scale_weights.push_back(s.log_step * std::pow(a, -(2 * s.k + 2)));
    }
    return s;
}

SampledSignal::SampledSignal(GridPtr g, cvec v) : grid(std::move(g)), values(std::move(v)) {
    if (!grid) throw DomainError("signal without grid");
    if (values.size() != static_cast<std::size_t>(grid->n)) throw MismatchError("signal length differs from grid size");
    for (const auto& z : values)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw DomainError("signal has non-finite samples");
}

SampledSignal::SampledSignal(GridPtr g) : grid(std::move(g)) {
    if (!grid) throw DomainError("signal without grid");
    values.assign(grid->n, cplx(0, 0));
}

cplx pow_ib(double b, double e) {
    if (b == 0.0) throw DomainError("pow_ib needs b != 0");
    const double sg = b > 0 ? 1.0 : -1.0;
    return std::pow(std::abs(b), e) * std::polar(1.0, kPi * e * sg / 2);
}

void require_same_grid(const SpaceGrid& a, const SpaceGrid& b, const char* what) {
    if (!a.same_as(b)) throw MismatchError(std::string(what) + ": grids differ");
}

cplx weighted_inner(const cvec& f, const cvec& g, const std::vector<double>& w) {
    if (f.size() != w.size() || g.size() != w.size()) throw MismatchError("inner product: length mismatch");
    CompensatedCSum acc;
    for (std::size_t j = 0; j < w.size(); ++j) acc.add(f[j] * std::conj(g[j]) * w[j]);
    return acc.value();
}

double weighted_norm(const cvec& f, const std::vector<double>& w) {
    if (f.size() != w.size()) throw MismatchError("norm: length mismatch");
    CompensatedSum acc;
    for (std::size_t j = 0; j < w.size(); ++j) acc.add(std::norm(f[j]) * w[j]);
    return std::sqrt(std::max(0.0, acc.value()));
}

cplx mu_inner(const SampledSignal& f, const SampledSignal& g) {
    require_same_grid(*f.grid, *g.grid, "mu_inner");
    return weighted_inner(f.values, g.values, f.grid->mu_weights);
}

double mu_norm(const SampledSignal& f) { return weighted_norm(f.values, f.grid->mu_weights); }

}  // namespace lcd
