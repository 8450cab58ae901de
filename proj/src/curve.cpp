#include "semiq/curve.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "semiq/numerics.hpp"

namespace semiq {

void CurveSamples::validate() const {
    if (params.size() != points.size())
        throw InvalidCurve("curve: params/points length mismatch");
    if (params.size() < 5)
        throw InsufficientSamples("curve: need at least 5 samples");
    for (std::size_t i = 1; i < params.size(); ++i)
        if (!(params[i] > params[i - 1]))
            throw InvalidCurve("curve: parameter grid not strictly increasing at index " +
                               std::to_string(i));
    for (const Quat& q : points)
        if (!q.finite()) throw InvalidCurve("curve: non-finite sample");
    if (!sig.valid()) throw InvalidCurve("curve: invalid basis signature");
}

bool CurveSamples::is_spatial(double tol) const {
    for (const Quat& q : points)
        if (std::fabs(q.q4) > tol) return false;
    return true;
}

std::vector<double> uniform_grid(double lo, double hi, std::size_t n) {
    std::vector<double> g(n);
    for (std::size_t i = 0; i < n; ++i)
        g[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    g.back() = hi;
    return g;
}

DerivativeSamples differentiate_samples(std::span<const double> params,
                                        std::span<const Quat> values, int order) {
    if (order < 1 || order > 4)
        throw InvalidCurve("differentiate: order must be 1..4");
    // smallest centered window that is 4th-order accurate on uniform grids
    const int width = order <= 2 ? 5 : order == 3 ? 7 : 9;
    const int n = static_cast<int>(params.size());
    if (n < width)
        throw InsufficientSamples("differentiate: not enough samples for the stencil");

    const int half = width / 2;
    DerivativeSamples out;
    out.values.resize(n);
    out.boundary_margin = half;

    for (int i = 0; i < n; ++i) {
        int lo = std::clamp(i - half, 0, n - width);
        const auto w = fd_weights(params[i], params.subspan(lo, width), order);
        Quat d{};
        for (int j = 0; j < width; ++j) d += values[lo + j] * w[j];
        out.values[i] = d;
    }
    return out;
}

DerivativeSamples differentiate(const CurveSamples& curve, int order) {
    curve.validate();
    return differentiate_samples(curve.params, curve.points, order);
}

namespace {

std::array<CubicSpline, 4> component_splines(const CurveSamples& c) {
    std::array<std::vector<double>, 4> comp;
    for (auto& v : comp) v.resize(c.size());
    for (std::size_t i = 0; i < c.size(); ++i)
        for (int k = 0; k < 4; ++k) comp[k][i] = c.points[i][k];
    return {CubicSpline(c.params, std::move(comp[0])),
            CubicSpline(c.params, std::move(comp[1])),
            CubicSpline(c.params, std::move(comp[2])),
            CubicSpline(c.params, std::move(comp[3]))};
}

Quat eval_splines(const std::array<CubicSpline, 4>& sp, double t) {
    return {sp[0](t), sp[1](t), sp[2](t), sp[3](t)};
}

// Invert a strictly increasing spline by bisection-guarded Newton.
double invert_monotone(const CubicSpline& f, double target, double lo, double hi) {
    double a = lo, b = hi;
    double x = 0.5 * (a + b);
    for (int it = 0; it < 100; ++it) {
        const double fx = f(x) - target;
        if (fx > 0) b = x; else a = x;
        const double df = f.derivative(x);
        double step = df != 0 ? fx / df : 0.0;
        double xn = x - step;
        if (!(xn > a && xn < b)) xn = 0.5 * (a + b);
        if (std::fabs(xn - x) < 1e-15 * std::max(1.0, std::fabs(x))) return xn;
        x = xn;
    }
    return x;
}

} // namespace

CurveSamples reparam_pseudo_arclength(const CurveSamples& curve, const ReparamOptions& opt) {
    curve.validate();
    const std::size_t n = curve.size();

    const auto deriv = differentiate(curve, 1);
    std::vector<double> speed(n);
    for (std::size_t i = 0; i < n; ++i) {
        speed[i] = norm(deriv.values[i]);
        if (speed[i] <= opt.null_tol)
            throw NullTangent("reparam: null tangent at parameter " +
                                  std::to_string(curve.params[i]),
                              curve.params[i]);
    }

    const auto s = cumulative_trapezoid(curve.params, speed);
    const std::size_t n_out = opt.n_out > 0 ? static_cast<std::size_t>(opt.n_out) : n;
    if (n_out < 5) throw InsufficientSamples("reparam: output sample count too small");

    CubicSpline s_of_u(curve.params, s);
    const auto sp = component_splines(curve);

    CurveSamples out;
    out.sig = curve.sig;
    out.param_kind = ParamKind::PseudoArcLength;
    out.params = uniform_grid(0.0, s.back(), n_out);
    out.points.resize(n_out);
    out.points.front() = curve.points.front();
    out.points.back() = curve.points.back();
    for (std::size_t i = 1; i + 1 < n_out; ++i) {
        const double u = invert_monotone(s_of_u, out.params[i],
                                         curve.params.front(), curve.params.back());
        out.points[i] = eval_splines(sp, u);
    }
    return out;
}

CurveSamples decimate(const CurveSamples& curve, std::size_t stride) {
    if (stride <= 1) return curve;
    CurveSamples out;
    out.sig = curve.sig;
    out.param_kind = curve.param_kind;
    for (std::size_t i = 0; i < curve.size(); i += stride) {
        out.params.push_back(curve.params[i]);
        out.points.push_back(curve.points[i]);
    }
    if (out.params.back() != curve.params.back()) {
        out.params.push_back(curve.params.back());
        out.points.push_back(curve.points.back());
    }
    return out;
}

CurveSamples analysis_grid(const CurveSamples& curve, double target_step) {
    if (!(target_step > 0) || curve.size() < 3) return curve;
    std::vector<double> steps(curve.size() - 1);
    for (std::size_t i = 0; i + 1 < curve.size(); ++i)
        steps[i] = curve.params[i + 1] - curve.params[i];
    std::nth_element(steps.begin(), steps.begin() + steps.size() / 2, steps.end());
    const double median = steps[steps.size() / 2];
    if (median >= target_step) return curve;
    const auto stride = static_cast<std::size_t>(std::lround(target_step / median));
    if (curve.size() / std::max<std::size_t>(stride, 1) < 31) return curve;
    return decimate(curve, stride);
}

CurveSamples resample(const CurveSamples& curve, const std::vector<double>& new_params) {
    curve.validate();
    const double lo = curve.params.front(), hi = curve.params.back();
    const double slack = 1e-12 * std::max(1.0, std::fabs(hi - lo));
    for (double u : new_params)
        if (u < lo - slack || u > hi + slack)
            throw OutOfRange("resample: parameter " + std::to_string(u) +
                             " outside the original range");

    const auto sp = component_splines(curve);
    CurveSamples out;
    out.sig = curve.sig;
    out.param_kind = curve.param_kind;
    out.params = new_params;
    out.points.resize(new_params.size());
    for (std::size_t i = 0; i < new_params.size(); ++i)
        out.points[i] = eval_splines(sp, std::clamp(new_params[i], lo, hi));
    return out;
}

} // namespace semiq
