#include "lcdunkl/interp.hpp"

#include <algorithm>

namespace lcd {

CubicSpline::CubicSpline(std::vector<double> x, cvec y) : x_(std::move(x)), y_(std::move(y)) {
    const std::size_t n = x_.size();
    if (n < 2 || y_.size() != n) throw DomainError("spline needs at least two points of matching length");
    for (std::size_t i = 1; i < n; ++i)
        if (!(x_[i] > x_[i - 1])) throw DomainError("spline abscissae must be strictly increasing");
    m_.assign(n, 0.0);
    if (n < 3) return;
    // tridiagonal solve for interior second derivatives
    std::vector<double> c(n, 0.0);
    cvec d(n, 0.0);
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double h0 = x_[i] - x_[i - 1], h1 = x_[i + 1] - x_[i];
        const double a = h0 / 6, b = (h0 + h1) / 3, cc = h1 / 6;
        const cplx r = (y_[i + 1] - y_[i]) / h1 - (y_[i] - y_[i - 1]) / h0;
        const double den = b - a * c[i - 1];
        c[i] = cc / den;
        d[i] = (r - a * d[i - 1]) / den;
    }
    for (std::size_t i = n - 2; i >= 1; --i) {
        m_[i] = d[i] - c[i] * m_[i + 1];
        if (i == 1) break;
    }
}

cplx CubicSpline::operator()(double t) const {
    if (t < x_.front() || t > x_.back()) return 0.0;
    auto it = std::upper_bound(x_.begin(), x_.end(), t);
    std::size_t i = std::min<std::size_t>(static_cast<std::size_t>(it - x_.begin()), x_.size() - 1);
    if (i == 0) i = 1;
    const double h = x_[i] - x_[i - 1];
    const double A = (x_[i] - t) / h, B = (t - x_[i - 1]) / h;
    return A * y_[i - 1] + B * y_[i] + ((A * A * A - A) * m_[i - 1] + (B * B * B - B) * m_[i]) * (h * h / 6);
}

}  // namespace lcd
