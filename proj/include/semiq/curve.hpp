#ifndef SEMIQ_CURVE_HPP
#define SEMIQ_CURVE_HPP

#include <span>
#include <vector>

#include "semiq/quat.hpp"

namespace semiq {

enum class ParamKind { Raw, PseudoArcLength };

// A discretized quaternion-valued curve on a strictly increasing grid.
struct CurveSamples {
    std::vector<double> params;
    std::vector<Quat> points;
    BasisSignature sig;
    ParamKind param_kind = ParamKind::Raw;

    std::size_t size() const { return params.size(); }
    void validate() const;      // throws InvalidCurve / InsufficientSamples
    bool is_spatial(double tol = 1e-9) const;
};

// Per-sample derivative of the given order (1..4). Central stencils in the
// interior (4th-order on uniform grids: 5-point for orders 1-2, 7-point for
// 3-4), one-sided at the ends. `boundary_margin` on return is the number of
// low-confidence samples at each end (the ones that used one-sided stencils).
struct DerivativeSamples {
    std::vector<Quat> values;
    int boundary_margin = 0;
};
DerivativeSamples differentiate(const CurveSamples& curve, int order);

// Same stencils applied to a bare sample sequence on a grid.
DerivativeSamples differentiate_samples(std::span<const double> params,
                                        std::span<const Quat> values, int order);

struct ReparamOptions {
    double null_tol = 1e-8;     // N(alpha') below this is a null tangent
    int n_out = 0;              // 0 = keep the input sample count
};

// Resample onto a uniform pseudo arc-length grid s(u) = integral of N(alpha').
// Trapezoid quadrature for s(u); not-a-knot splines for the point components,
// evaluated at abscissae obtained by bracketed-Newton inversion of the spline
// of s(u). Throws NullTangent when the tangent norm drops below tol.
CurveSamples reparam_pseudo_arclength(const CurveSamples& curve,
                                      const ReparamOptions& opt = {});

// Spline interpolation of the curve onto new_params (must lie inside the
// original range). param_kind is preserved.
CurveSamples resample(const CurveSamples& curve, const std::vector<double>& new_params);

// Keep every k-th sample (plus the last). Exact: no interpolation.
CurveSamples decimate(const CurveSamples& curve, std::size_t stride);

// Decimate so the median grid step reaches at least target_step. Chained
// finite differences amplify sample roundoff by 1/h^4; curves integrated or
// resampled at fine steps are analyzed on a coarser grid where truncation
// (~h^4) and the noise floor balance.
CurveSamples analysis_grid(const CurveSamples& curve, double target_step);

std::vector<double> uniform_grid(double lo, double hi, std::size_t n);

} // namespace semiq

#endif
