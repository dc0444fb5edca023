#pragma once

#include <vector>

#include "lcdunkl/measure.hpp"

namespace lcd {

// Natural cubic spline through (x_i, y_i), x strictly increasing. Zero outside
// [x_0, x_last].
class CubicSpline {
public:
    CubicSpline(std::vector<double> x, cvec y);
    cplx operator()(double t) const;
    double lo() const { return x_.front(); }
    double hi() const { return x_.back(); }

private:
    std::vector<double> x_;
    cvec y_, m_;  // second derivatives
};

}  // namespace lcd
