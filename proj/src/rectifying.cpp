#include "semiq/rectifying.hpp"

#include <algorithm>
#include <cmath>

#include "semiq/numerics.hpp"

namespace semiq {

namespace {

double scale_of(std::span<const double> y) { return std::max(1.0, rms(y)); }

QuadraticFitCheck fit_signed_quadratic(std::span<const double> s, std::span<const double> hqq,
                                       int eps, double tol) {
    // h(pos,pos) = eps s^2 + c1 s + c2 fitted in the signed form; rho^2 is its
    // absolute value, so sign-change vicinities never enter the residual.
    std::vector<double> z(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) z[i] = hqq[i] - eps * s[i] * s[i];
    const LinearFit f = fit_linear(s, z);
    std::vector<double> resid(s.size());
    for (std::size_t i = 0; i < s.size(); ++i)
        resid[i] = z[i] - (f.slope * s[i] + f.intercept);
    QuadraticFitCheck out;
    out.c1 = f.slope;
    out.c2 = f.intercept;
    out.residual = rms(resid) / scale_of(hqq);
    out.pass = out.residual < tol;
    return out;
}

TangentialFitCheck fit_tangential(std::span<const double> s, std::span<const double> ht,
                                  int eps, double tol) {
    std::vector<double> z(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) z[i] = ht[i] - eps * s[i];
    TangentialFitCheck out;
    out.c = mean(z);
    std::vector<double> resid(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) resid[i] = z[i] - out.c;
    out.residual = rms(resid) / scale_of(ht);
    out.pass = out.residual < tol;
    return out;
}

NormalLengthCheck check_normal_component(std::span<const double> normal_len,
                                         std::span<const double> rho, double tol) {
    NormalLengthCheck out;
    out.normal_length = mean(normal_len);
    out.stddev = sample_stddev(normal_len);
    const auto [lo, hi] = std::minmax_element(rho.begin(), rho.end());
    out.rho_relative_range = (*hi - *lo) / std::max(*hi, 1e-30);
    out.pass = out.stddev < tol * std::max(1.0, out.normal_length) &&
               out.rho_relative_range > 100.0 * tol;
    return out;
}

} // namespace

Decomposition3 decompose_position_3d(const CurveSamples& curve, const Frenet3Data& f) {
    Decomposition3 d;
    const double et = f.eps_t, e2 = f.eps_n2;
    for (std::size_t i = f.first; i <= f.last; ++i) {
        const Quat& a = curve.points[i];
        d.s.push_back(f.s[i]);
        d.lambda.push_back(et * h_inner(a, f.t[i]));
        d.mu.push_back(e2 * h_inner(a, f.n2[i]));
        d.h_alpha_n1.push_back(h_inner(a, f.n1[i]));
        d.defect_max = std::max(d.defect_max, std::fabs(d.h_alpha_n1.back()));
    }
    return d;
}

RatioLinearityCheck check_ratio_linearity(const Frenet3Data& f, double tol) {
    std::vector<double> s, ratio;
    for (std::size_t i = f.first; i <= f.last; ++i) {
        s.push_back(f.s[i]);
        ratio.push_back(f.r[i] / f.k[i]);
    }
    const LinearFit fit = fit_linear(s, ratio);
    std::vector<double> resid(s.size());
    for (std::size_t i = 0; i < s.size(); ++i)
        resid[i] = ratio[i] - (fit.slope * s[i] + fit.intercept);
    RatioLinearityCheck out;
    out.c1 = fit.slope;
    out.c2 = fit.intercept;
    out.residual = rms(resid) / scale_of(ratio);
    out.pass = out.residual < tol && std::fabs(out.c1) > tol;
    return out;
}

RectifyingReport3 check_thm32(const CurveSamples& curve, const Frenet3Data& f, double tol) {
    RectifyingReport3 rep;
    const std::size_t m = f.retained_count();
    std::vector<double> s(m), hqq(m), ht(m), hn2(m), rho(m), nlen(m), absr(m);
    for (std::size_t j = 0; j < m; ++j) {
        const std::size_t i = f.first + j;
        const Quat& a = curve.points[i];
        s[j] = f.s[i];
        hqq[j] = h_inner(a, a);
        ht[j] = h_inner(a, f.t[i]);
        hn2[j] = h_inner(a, f.n2[i]);
        rho[j] = norm(a);
        const Quat an = a - f.t[i] * (f.eps_t * ht[j]);
        nlen[j] = norm(an);
        absr[j] = std::fabs(f.r[i]);
    }

    rep.distance = fit_signed_quadratic(s, hqq, f.eps_t, tol);
    rep.tangential = fit_tangential(s, ht, f.eps_t, tol);
    rep.normal = check_normal_component(nlen, rho, tol);
    rep.normal_length = rep.normal.normal_length;

    rep.binormal.mean = mean(hn2);
    rep.binormal.stddev = sample_stddev(hn2);
    rep.binormal.min_abs_torsion = *std::min_element(absr.begin(), absr.end());
    rep.binormal.pass = rep.binormal.stddev < tol * scale_of(hn2) &&
                        rep.binormal.min_abs_torsion > tol;

    const Decomposition3 dec = decompose_position_3d(curve, f);
    rep.h_alpha_n1_max = dec.defect_max;
    return rep;
}

RectifyingReport3 analyze_rectifying_3d(const CurveSamples& curve, const Frenet3Data& f,
                                        double tol) {
    RectifyingReport3 rep = check_thm32(curve, f, tol);
    rep.ratio = check_ratio_linearity(f, tol);
    rep.verdict = rep.h_alpha_n1_max < tol && rep.ratio.residual < tol &&
                  std::fabs(rep.ratio.c1) > tol;
    return rep;
}

// -------------------------------- 4D --------------------------------

Coefficients4 compute_rectifying_coefficients_4d(const Frenet4Data& f, double c,
                                                 double curvature_tol) {
    const std::size_t m = f.retained_count();
    if (m < 11) throw InsufficientSamples("coefficients_4d: retained range too small");

    std::vector<double> s(m), mu(m);
    const double eT = f.eps_T;
    for (std::size_t j = 0; j < m; ++j) {
        const std::size_t i = f.first + j;
        if (std::fabs(f.k[i]) < curvature_tol || std::fabs(f.bitorsion[i]) < curvature_tol)
            throw VanishingCurvature("coefficients_4d: k or bitorsion vanishes at s = " +
                                     std::to_string(f.s[i]));
        s[j] = f.s[i];
        mu[j] = eT * f.kappa[i] * (s[j] + c) / f.k[i];
    }
    // nu = mu' / (eps_n2 bt); one more differentiation layer, so trim its
    // one-sided region off the output.
    std::vector<Quat> mu_as_q(m);
    for (std::size_t j = 0; j < m; ++j) mu_as_q[j] = {mu[j], 0, 0, 0};
    const auto d = differentiate_samples(s, mu_as_q, 1);
    const std::size_t trim = static_cast<std::size_t>(d.boundary_margin) + 1;

    Coefficients4 out;
    out.first = f.first + trim;
    for (std::size_t j = trim; j + trim < m; ++j) {
        const std::size_t i = f.first + j;
        out.s.push_back(s[j]);
        out.lambda.push_back(s[j] + c);
        out.mu.push_back(mu[j]);
        out.nu.push_back(d.values[j].q1 / (f.eps_n2 * f.bitorsion[i]));
    }
    return out;
}

Eq43Check check_eq43(const Frenet4Data& f, double c, double curvature_tol) {
    const Coefficients4 co = compute_rectifying_coefficients_4d(f, c, curvature_tol);
    const std::size_t m = co.s.size();
    std::vector<Quat> nu_as_q(m);
    for (std::size_t j = 0; j < m; ++j) nu_as_q[j] = {co.nu[j], 0, 0, 0};
    const auto d = differentiate_samples(co.s, nu_as_q, 1);
    const std::size_t trim = static_cast<std::size_t>(d.boundary_margin) + 1;

    Eq43Check out;
    out.c = c;
    out.first = co.first + trim;
    for (std::size_t j = trim; j + trim < m; ++j) {
        const std::size_t i = co.first + j;
        const double F = f.eps_n1 * co.mu[j] * f.bitorsion[i] + d.values[j].q1;
        out.s.push_back(co.s[j]);
        out.value.push_back(F);
        out.max_abs = std::max(out.max_abs, std::fabs(F));
    }
    return out;
}

double estimate_shift_c(const CurveSamples& curve, const Frenet4Data& f) {
    const std::size_t i = f.first;
    return f.eps_T * h_inner(curve.points[i], f.T[i]) - f.s[i];
}

RectifyingReport4 check_thm44(const CurveSamples& curve, const Frenet4Data& f, double tol,
                              double c) {
    RectifyingReport4 rep;
    rep.c_estimate = c;

    const std::size_t m = f.retained_count();
    std::vector<double> s(m), hqq(m), ht(m), rho(m), nlen(m);
    for (std::size_t j = 0; j < m; ++j) {
        const std::size_t i = f.first + j;
        const Quat& b = curve.points[i];
        s[j] = f.s[i];
        hqq[j] = h_inner(b, b);
        ht[j] = h_inner(b, f.T[i]);
        rho[j] = norm(b);
        nlen[j] = norm(b - f.T[i] * (f.eps_T * ht[j]));
        rep.h_beta_n1_max = std::max(rep.h_beta_n1_max, std::fabs(h_inner(b, f.N1[i])));
    }
    rep.distance = fit_signed_quadratic(s, hqq, f.eps_T, tol);
    rep.tangential = fit_tangential(s, ht, f.eps_T, tol);
    rep.normal = check_normal_component(nlen, rho, tol);

    // statement (iv) + the a^2 constancy + the full reconstruction
    const Coefficients4 co = compute_rectifying_coefficients_4d(f, c);
    const std::size_t mc = co.s.size();
    std::vector<double> hn2(mc), hn3(mc), exp_n2(mc), exp_n3(mc), a2(mc), dn2(mc), dn3(mc);
    const double e1T = f.eps_n1 * f.eps_T, e2T = f.eps_n2 * f.eps_T;
    for (std::size_t j = 0; j < mc; ++j) {
        const std::size_t i = co.first + j;
        const Quat& b = curve.points[i];
        hn2[j] = h_inner(b, f.N2[i]);
        hn3[j] = h_inner(b, f.N3[i]);
        exp_n2[j] = co.mu[j] * e1T;
        exp_n3[j] = co.nu[j] * e2T;
        dn2[j] = hn2[j] - exp_n2[j];
        dn3[j] = hn3[j] - exp_n3[j];
        a2[j] = f.eps_n1 * co.mu[j] * co.mu[j] + f.eps_n2 * co.nu[j] * co.nu[j];
        const Quat recon = b - f.T[i] * co.lambda[j] - f.N2[i] * co.mu[j] - f.N3[i] * co.nu[j];
        rep.reconstruction_residual_max =
            std::max(rep.reconstruction_residual_max, norm(recon));
    }
    rep.binormal.n2_residual = rms(dn2) / scale_of(hn2);
    rep.binormal.n3_residual = rms(dn3) / scale_of(hn3);
    rep.binormal.a_squared = mean(a2);
    rep.binormal.a_squared_stddev = sample_stddev(a2);
    rep.binormal.pass = rep.binormal.n2_residual < tol && rep.binormal.n3_residual < tol &&
                        rep.binormal.a_squared_stddev <
                            tol * std::max(1.0, std::fabs(rep.binormal.a_squared));

    const Eq43Check e43 = check_eq43(f, c);
    rep.eq43_max = e43.max_abs;
    rep.eq43_pass = e43.max_abs < tol;

    rep.verdict = rep.reconstruction_residual_max < tol && rep.h_beta_n1_max < tol;
    return rep;
}

RectifyingReport4 analyze_rectifying_4d(const CurveSamples& curve, const Frenet4Data& f,
                                        double tol) {
    return check_thm44(curve, f, tol, estimate_shift_c(curve, f));
}

} // namespace semiq
