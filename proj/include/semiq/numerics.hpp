#ifndef SEMIQ_NUMERICS_HPP
#define SEMIQ_NUMERICS_HPP

#include <cstddef>
#include <span>
#include <vector>

namespace semiq {

// Fornberg weights for the m-th derivative at x0 from nodes x (any spacing).
std::vector<double> fd_weights(double x0, std::span<const double> x, int m);

// C2 cubic spline with not-a-knot end conditions (exact for cubics).
class CubicSpline {
public:
    CubicSpline() = default;
    CubicSpline(std::vector<double> x, std::vector<double> y);

    double operator()(double t) const;
    double derivative(double t) const;

    double x_front() const { return x_.front(); }
    double x_back() const { return x_.back(); }

private:
    std::size_t interval(double t) const;
    std::vector<double> x_, y_, m_;  // nodes, values, node derivatives
};

// Cumulative trapezoid integral of y over grid x; result[0] = 0.
std::vector<double> cumulative_trapezoid(std::span<const double> x,
                                         std::span<const double> y);

// Least squares fit y ~ c0 + c1*x. Returns {c0, c1}.
struct LinearFit {
    double intercept = 0, slope = 0;
};
LinearFit fit_linear(std::span<const double> x, std::span<const double> y);

double rms(std::span<const double> v);
double sample_stddev(std::span<const double> v);
double mean(std::span<const double> v);

} // namespace semiq

#endif
