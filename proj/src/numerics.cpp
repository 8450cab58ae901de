#include "semiq/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "semiq/errors.hpp"

namespace semiq {

// B. Fornberg, "Generation of finite difference formulas on arbitrarily
// spaced grids", Math. Comp. 51 (1988). Returns weights for derivative m.
std::vector<double> fd_weights(double x0, std::span<const double> x, int m) {
    const int n = static_cast<int>(x.size());
    if (n < m + 1) throw InsufficientSamples("fd_weights: window too small for order");
    // c[k][j]: weight of node j for the k-th derivative
    std::vector<std::vector<double>> c(m + 1, std::vector<double>(n, 0.0));
    double c1 = 1.0;
    double c4 = x[0] - x0;
    c[0][0] = 1.0;
    for (int i = 1; i < n; ++i) {
        const int mn = std::min(i, m);
        double c2 = 1.0;
        const double c5 = c4;
        c4 = x[i] - x0;
        for (int j = 0; j < i; ++j) {
            const double c3 = x[i] - x[j];
            c2 *= c3;
            if (j == i - 1) {
                for (int k = mn; k >= 1; --k)
                    c[k][i] = c1 * (k * c[k - 1][i - 1] - c5 * c[k][i - 1]) / c2;
                c[0][i] = -c1 * c5 * c[0][i - 1] / c2;
            }
            for (int k = mn; k >= 1; --k)
                c[k][j] = (c4 * c[k][j] - k * c[k - 1][j]) / c3;
            c[0][j] = c4 * c[0][j] / c3;
        }
        c1 = c2;
    }
    return c[m];
}

CubicSpline::CubicSpline(std::vector<double> x, std::vector<double> y)
    : x_(std::move(x)), y_(std::move(y)) {
    const std::size_t n = x_.size();
    if (n != y_.size() || n < 4)
        throw InsufficientSamples("CubicSpline: need at least 4 samples");
    for (std::size_t i = 1; i < n; ++i)
        if (!(x_[i] > x_[i - 1]))
            throw InvalidCurve("CubicSpline: abscissae not strictly increasing");

    // Solve for node derivatives m_ with not-a-knot conditions (third
    // derivative continuous across the second and second-to-last knots).
    std::vector<double> a(n), b(n), c(n), d(n);
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double hl = x_[i] - x_[i - 1];
        const double hr = x_[i + 1] - x_[i];
        a[i] = hr;
        b[i] = 2.0 * (hl + hr);
        c[i] = hl;
        d[i] = 3.0 * (hr * (y_[i] - y_[i - 1]) / hl + hl * (y_[i + 1] - y_[i]) / hr);
    }
    {
        const double h0 = x_[1] - x_[0], h1 = x_[2] - x_[1];
        b[0] = h1;
        c[0] = h0 + h1;
        d[0] = ((3.0 * h0 + 2.0 * h1) * h1 * (y_[1] - y_[0]) / h0 +
                h0 * h0 * (y_[2] - y_[1]) / h1) /
               (h0 + h1);
        const double hm = x_[n - 1] - x_[n - 2], hm1 = x_[n - 2] - x_[n - 3];
        a[n - 1] = hm + hm1;
        b[n - 1] = hm1;
        d[n - 1] = (hm * hm * (y_[n - 2] - y_[n - 3]) / hm1 +
                    (2.0 * hm1 + 3.0 * hm) * hm1 * (y_[n - 1] - y_[n - 2]) / hm) /
                   (hm1 + hm);
    }
    // Thomas algorithm
    m_.assign(n, 0.0);
    std::vector<double> cp(n), dp(n);
    cp[0] = c[0] / b[0];
    dp[0] = d[0] / b[0];
    for (std::size_t i = 1; i < n; ++i) {
        const double w = b[i] - a[i] * cp[i - 1];
        cp[i] = (i + 1 < n ? c[i] : 0.0) / w;
        dp[i] = (d[i] - a[i] * dp[i - 1]) / w;
    }
    m_[n - 1] = dp[n - 1];
    for (std::size_t i = n - 1; i-- > 0;) m_[i] = dp[i] - cp[i] * m_[i + 1];
}

std::size_t CubicSpline::interval(double t) const {
    auto it = std::upper_bound(x_.begin(), x_.end(), t);
    std::size_t i = (it == x_.begin()) ? 0 : static_cast<std::size_t>(it - x_.begin()) - 1;
    return std::min(i, x_.size() - 2);
}

double CubicSpline::operator()(double t) const {
    const std::size_t i = interval(t);
    const double h = x_[i + 1] - x_[i];
    const double u = (t - x_[i]) / h;
    const double u2 = u * u, u3 = u2 * u;
    return (2 * u3 - 3 * u2 + 1) * y_[i] + (u3 - 2 * u2 + u) * h * m_[i] +
           (-2 * u3 + 3 * u2) * y_[i + 1] + (u3 - u2) * h * m_[i + 1];
}

double CubicSpline::derivative(double t) const {
    const std::size_t i = interval(t);
    const double h = x_[i + 1] - x_[i];
    const double u = (t - x_[i]) / h;
    const double u2 = u * u;
    return ((6 * u2 - 6 * u) * y_[i] / h + (3 * u2 - 4 * u + 1) * m_[i] +
            (-6 * u2 + 6 * u) * y_[i + 1] / h + (3 * u2 - 2 * u) * m_[i + 1]);
}

std::vector<double> cumulative_trapezoid(std::span<const double> x,
                                         std::span<const double> y) {
    std::vector<double> s(x.size(), 0.0);
    for (std::size_t i = 1; i < x.size(); ++i)
        s[i] = s[i - 1] + 0.5 * (y[i] + y[i - 1]) * (x[i] - x[i - 1]);
    return s;
}

LinearFit fit_linear(std::span<const double> x, std::span<const double> y) {
    const double n = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    const double det = n * sxx - sx * sx;
    LinearFit f;
    f.slope = (n * sxy - sx * sy) / det;
    f.intercept = (sy - f.slope * sx) / n;
    return f;
}

double mean(std::span<const double> v) {
    double s = 0;
    for (double t : v) s += t;
    return s / static_cast<double>(v.size());
}

double rms(std::span<const double> v) {
    double s = 0;
    for (double t : v) s += t * t;
    return std::sqrt(s / static_cast<double>(v.size()));
}

double sample_stddev(std::span<const double> v) {
    const double m = mean(v);
    double s = 0;
    for (double t : v) s += (t - m) * (t - m);
    return std::sqrt(s / static_cast<double>(v.size() > 1 ? v.size() - 1 : 1));
}

} // namespace semiq
