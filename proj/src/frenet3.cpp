#include "semiq/frenet3.hpp"

#include <cmath>
#include <string>

namespace semiq {

namespace {

int sign_of(double x) { return x > 0 ? 1 : x < 0 ? -1 : 0; }

void check_constant_sign(const std::vector<int>& signs, std::size_t first,
                         std::size_t last, const std::vector<double>& s,
                         const char* what) {
    for (std::size_t i = first + 1; i <= last; ++i)
        if (signs[i] != signs[first])
            throw CausalFlip(std::string(what) + " changes causal character at s = " +
                                 std::to_string(s[i]),
                             s[i]);
}

} // namespace

Frenet3Data frenet3_apparatus(const CurveSamples& curve, const Frenet3Options& opt) {
    curve.validate();
    if (curve.sig.ambient != Ambient::R13)
        throw InvalidCurve("frenet3: curve must be declared in R13");
    if (!curve.is_spatial(opt.spatial_tol))
        throw NotSpatial("frenet3: curve has a non-zero scalar component");
    if (curve.param_kind != ParamKind::PseudoArcLength)
        throw NotUnitSpeed("frenet3: curve is not in pseudo arc-length parametrization");

    const std::size_t n = curve.size();
    const auto d1 = differentiate(curve, 1);
    const auto d2 = differentiate(curve, 2);

    // one chained first derivative (for n1') on top of the direct stencils
    const std::size_t chain_margin = static_cast<std::size_t>(d2.boundary_margin + 2);
    const std::size_t margin = chain_margin + static_cast<std::size_t>(opt.extra_margin);
    if (2 * margin + 5 > n)
        throw InsufficientSamples("frenet3: too few samples for the retained range");
    const std::size_t first = margin, last = n - 1 - margin;

    Frenet3Data f;
    f.s = curve.params;
    f.first = first;
    f.last = last;
    f.t = d1.values;
    f.n1.resize(n);
    f.n2.resize(n);
    f.k.assign(n, 0.0);
    f.r.assign(n, 0.0);

    std::vector<int> sgn_t(n, 0), sgn_n1(n, 0), sgn_n2(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        const Quat& t = f.t[i];
        const Quat& tp = d2.values[i];
        const bool retained = i >= first && i <= last;

        if (retained && std::fabs(norm(t) - 1.0) > opt.unit_speed_tol)
            throw NotUnitSpeed("frenet3: |N(alpha')-1| = " +
                               std::to_string(std::fabs(norm(t) - 1.0)) + " at s = " +
                               std::to_string(f.s[i]));

        const double k = norm(tp);
        f.k[i] = k;
        if (retained && k < opt.degeneracy_tol)
            throw DegenerateFrame("frenet3: curvature below tolerance (straight or "
                                  "null-normal segment) at s = " + std::to_string(f.s[i]),
                                  f.s[i]);
        if (k < opt.degeneracy_tol) {           // boundary junk: park unit placeholders
            f.n1[i] = Quat::e2();
            f.n2[i] = Quat::e3();
            continue;
        }
        const int en1 = sign_of(quadratic_form(tp));
        f.n1[i] = tp * (static_cast<double>(en1) / k);

        Quat n2 = cross_lorentz(t, f.n1[i], curve.sig, 1e-6);
        const double n2n = norm(n2);
        if (retained && n2n < opt.degeneracy_tol)
            throw DegenerateFrame("frenet3: binormal direction degenerate at s = " +
                                  std::to_string(f.s[i]), f.s[i]);
        f.n2[i] = n2n > 0 ? n2 / n2n : Quat::e3();

        sgn_t[i] = sign_of(quadratic_form(t));
        sgn_n1[i] = en1;
        sgn_n2[i] = sign_of(quadratic_form(f.n2[i]));
    }

    check_constant_sign(sgn_t, first, last, f.s, "tangent");
    check_constant_sign(sgn_n1, first, last, f.s, "principal normal");
    check_constant_sign(sgn_n2, first, last, f.s, "binormal");
    f.eps_t = sgn_t[first];
    f.eps_n1 = sgn_n1[first];
    f.eps_n2 = sgn_n2[first];

    // torsion from the h-projection of n1' onto n2
    const auto n1p = differentiate_samples(f.s, f.n1, 1);
    for (std::size_t i = first; i <= last; ++i)
        f.r[i] = f.eps_n1 * f.eps_n2 * h_inner(n1p.values[i], f.n2[i]);

    return f;
}

Frenet3Residuals frenet3_residuals(const CurveSamples& curve, const Frenet3Data& frame) {
    (void)curve;
    const auto tp = differentiate_samples(frame.s, frame.t, 1);
    const auto n1p = differentiate_samples(frame.s, frame.n1, 1);
    const auto n2p = differentiate_samples(frame.s, frame.n2, 1);

    Frenet3Residuals res;
    res.per_sample.reserve(frame.retained_count());
    const double et = frame.eps_t, e1 = frame.eps_n1, e2 = frame.eps_n2;
    for (std::size_t i = frame.first; i <= frame.last; ++i) {
        const double k = frame.k[i], r = frame.r[i];
        const double r1 = norm(tp.values[i] - e1 * k * frame.n1[i]);
        const double r2 = norm(n1p.values[i] + et * k * frame.t[i] - e1 * r * frame.n2[i]);
        const double r3 = norm(n2p.values[i] + e2 * r * frame.n1[i]);
        res.per_sample.push_back({r1, r2, r3});
        res.max[0] = std::max(res.max[0], r1);
        res.max[1] = std::max(res.max[1], r2);
        res.max[2] = std::max(res.max[2], r3);
    }
    return res;
}

} // namespace semiq
