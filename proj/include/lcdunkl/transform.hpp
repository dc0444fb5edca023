#pragma once

#include <memory>

#include "lcdunkl/measure.hpp"
#include "lcdunkl/special.hpp"

namespace lcd {

struct SpectralSignal {
    GridPtr grid;  // frequency nodes
    cvec values;
    CanonicalMatrix M;
    double k;

    SpectralSignal(GridPtr g, cvec v, CanonicalMatrix m, double kk);
};

// Bessel parts of the kernel on the nonnegative quarter of the (lambda, x)
// node pairs: P = j_k(z), Q = z/(2k+2) j_{k+1}(z), z = |lambda||x|/|b|.
// Depends on k, |b| and the two grids only, so it is shared between matrices.
struct KernelCore;

// O(n^2) quadrature plan for one (k, M, space grid, frequency grid).
class Transform {
public:
    Transform(const KernelContext& ctx, GridPtr space, GridPtr freq);

    const GridPtr& space() const { return space_; }
    const GridPtr& freq() const { return freq_; }
    const CanonicalMatrix& matrix() const { return M_; }
    double k() const { return k_; }

    // c_b sum_m f_m E^M(lambda_j, x_m) w_m
    cvec forward(const cvec& f) const;
    // conj(c_b) sum_j F_j E^{M^-1}(x_m, lambda_j) w_j
    cvec inverse(const cvec& F) const;

    // Largest kernel phase change between neighbouring nodes.
    static double phase_increment(const CanonicalMatrix& M, const SpaceGrid& space, const SpaceGrid& freq);
    static constexpr double kMaxPhaseStep = kPi / 4;

private:
    double k_;
    CanonicalMatrix M_;
    GridPtr space_, freq_;
    std::shared_ptr<const KernelCore> core_;
    cvec chirp_x_, chirp_l_;  // e^{(i/2)(a/b)x^2}, e^{(i/2)(d/b)lambda^2}
    cplx cb_;                 // 1/(ib)^{k+1}
};

// Cached plan lookup; building a plan costs O(n^2) Bessel evaluations.
std::shared_ptr<const Transform> plan_for(const KernelContext& ctx, const GridPtr& space, const GridPtr& freq);
void clear_plan_cache();

SpectralSignal lcdt_forward(const SampledSignal& f, const KernelContext& ctx, const GridPtr& freq);
SpectralSignal lcdt_forward(const SampledSignal& f, const KernelContext& ctx);  // freq grid = space grid
SampledSignal lcdt_inverse(const SpectralSignal& F, const KernelContext& ctx, const GridPtr& space);

void require_matrix(const SpectralSignal& F, const KernelContext& ctx);

double plancherel_residual(const SampledSignal& f, const KernelContext& ctx, const GridPtr& freq);
double plancherel_residual(const SampledSignal& f, const KernelContext& ctx);
double parseval_residual(const SampledSignal& f, const SampledSignal& g, const KernelContext& ctx, const GridPtr& freq);
double parseval_residual(const SampledSignal& f, const SampledSignal& g, const KernelContext& ctx);

}  // namespace lcd
