#pragma once

#include <complex>
#include <memory>
#include <vector>

#include "lcdunkl/errors.hpp"

namespace lcd {

using cplx = std::complex<double>;
using cvec = std::vector<cplx>;

inline constexpr double kPi = 3.14159265358979323846;

// Neumaier compensated accumulator.
class CompensatedSum {
public:
    void add(double v) {
        const double t = s_ + v;
        if (std::abs(s_) >= std::abs(v))
            c_ += (s_ - t) + v;
        else
            c_ += (v - t) + s_;
        s_ = t;
    }
    double value() const { return s_ + c_; }

private:
    double s_ = 0.0;
    double c_ = 0.0;
};

class CompensatedCSum {
public:
    void add(cplx v) {
        re_.add(v.real());
        im_.add(v.imag());
    }
    cplx value() const { return {re_.value(), im_.value()}; }

private:
    CompensatedSum re_, im_;
};

class Multiplicity {
public:
    explicit Multiplicity(double k);
    double value() const { return k_; }
    operator double() const { return k_; }

private:
    double k_;
};

class CanonicalMatrix {
public:
    CanonicalMatrix(double a, double b, double c, double d);
    double a() const { return a_; }
    double b() const { return b_; }
    double c() const { return c_; }
    double d() const { return d_; }
    CanonicalMatrix inverse() const { return {d_, -b_, -c_, a_}; }
    bool operator==(const CanonicalMatrix& o) const {
        return a_ == o.a_ && b_ == o.b_ && c_ == o.c_ && d_ == o.d_;
    }

private:
    double a_, b_, c_, d_;
};

// Uniform symmetric grid with weights for dmu_k.
struct SpaceGrid {
    double k = 0;
    double x_max = 0;
    int n = 0;
    double delta = 0;
    std::vector<double> nodes;
    std::vector<double> mu_weights;

    int center() const { return n / 2; }
    bool same_as(const SpaceGrid& o) const { return k == o.k && x_max == o.x_max && n == o.n; }
};
using GridPtr = std::shared_ptr<const SpaceGrid>;

// Trapezoid-type weights for |x|^{2k+1} dx / (2^{k+1} Gamma(k+1)). For
// non-even exponents the nodes next to the origin carry a generalized
// Euler-Maclaurin correction, which removes the O(h^{2k+2}) error from the
// kink of |x|^{2k+1}.
GridPtr make_space_grid(Multiplicity k, double x_max, int n);

// 1 / (2^{k+1} Gamma(k+1))
double mu_normalizer(double k);

// Log-spaced scales with midpoint-in-log weights for d alpha / alpha^{2k+3}.
struct ScaleGrid {
    double k = 0;
    double alpha_min = 0;
    double alpha_max = 0;
    int m = 0;
    std::vector<double> scales;
    std::vector<double> nu_scale_weights;
    double log_step = 0;
};

ScaleGrid make_scale_grid(Multiplicity k, double alpha_min, double alpha_max, int m);

struct SampledSignal {
    GridPtr grid;
    cvec values;

    SampledSignal() = default;
    SampledSignal(GridPtr g, cvec v);
    explicit SampledSignal(GridPtr g);  // zeros
    std::size_t size() const { return values.size(); }
};

// Principal branch of (i b)^e.
cplx pow_ib(double b, double e);

cplx mu_inner(const SampledSignal& f, const SampledSignal& g);
double mu_norm(const SampledSignal& f);

// Same on raw arrays against a weight vector.
cplx weighted_inner(const cvec& f, const cvec& g, const std::vector<double>& w);
double weighted_norm(const cvec& f, const std::vector<double>& w);

void require_same_grid(const SpaceGrid& a, const SpaceGrid& b, const char* what);

}  // namespace lcd
