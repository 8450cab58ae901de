// Acceptance suite: one pass/fail line per criterion, non-zero exit on any
// failure. Runs at desk scale (< 60 s).

#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "semiq/constructors.hpp"
#include "semiq/io.hpp"
#include "semiq/rectifying.hpp"

using namespace semiq;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& name, const std::function<void()>& body) {
    try {
        body();
        std::printf("PASS criterion %d: %s\n", number, name.c_str());
    } catch (const std::exception& e) {
        ++g_failures;
        std::printf("FAIL criterion %d: %s -- %s\n", number, name.c_str(), e.what());
    }
    std::fflush(stdout);
}

void require(bool ok, const std::string& what) {
    if (!ok) throw Error(what);
}

std::string fmt(double v) { return format_double(v); }

} // namespace

// --- shared helpers ---------------------------------------------------------

namespace {

CurveSamples sampled_pal(double lo, double hi, double step, Ambient amb, auto&& fn) {
    CurveSamples c;
    c.sig = amb == Ambient::R13 ? BasisSignature::r13() : BasisSignature::r24();
    c.param_kind = ParamKind::PseudoArcLength;
    const std::size_t n = static_cast<std::size_t>(std::lround((hi - lo) / step)) + 1;
    c.params = uniform_grid(lo, hi, n);
    for (double s : c.params) c.points.push_back(fn(s));
    return c;
}

struct Thm34Config {
    const char* label;
    ScalingCase scase;
    SphereCurveFamily base;
    double t_lo, t_hi;
};

// ranges sit on one side of the torsion zero (s = -c), where statement (iv)'s
// r != 0 hypothesis holds
const Thm34Config kThm34Configs[3] = {
    {"thm34-i/latitude", ScalingCase::Cos, {SphereFamilyTag::S12Latitude, 1.0, 0.0}, 0.15, 1.25},
    {"thm34-ii/s12-timelike", ScalingCase::Sinh, {SphereFamilyTag::S12Timelike, 0.6, 0.0}, 0.4, 1.6},
    {"thm34-iii/h02", ScalingCase::Cosh, {SphereFamilyTag::H02Spacelike, 1.0, 0.0}, 0.25, 1.75},
};

CurveSamples build_thm34(const Thm34Config& cfg, std::size_t n = 4001) {
    return analysis_grid(
        reparam_pseudo_arclength(
            construct_scaled_sphere_curve(cfg.scase, cfg.base, 1.0, cfg.t_lo, cfg.t_hi, n)),
        4e-3);
}

struct Rect4Curve {
    CurveSamples curve;
    Profile4 profile;
};

Rect4Curve build_rectifying_4d() {
    const auto eps = EpsConfig4::for_product(-1);
    auto prof = profile4_case1(0.0, -0.5, 1.0, 1.0, eps, 0.0, 1.5);
    const Frame4 frame = Frame4::standard_for(eps);
    const Quat b0 = rectifying_start_4d(prof, frame, 0.0);
    auto c = integrate_frenet4(prof, frame, b0, 0.0, 1.5,
                               IntegrateOptions{1e-3, 1, false, 1e-10});
    c.param_kind = ParamKind::PseudoArcLength;
    return {analysis_grid(c, 1e-2), std::move(prof)};
}

} // namespace

// --- criteria ----------------------------------------------------------------

namespace {

void criterion1_algebra() {
    std::mt19937_64 rng(20240811ULL);
    std::uniform_real_distribution<double> d(-2, 2);
    auto rnd = [&] { return Quat{d(rng), d(rng), d(rng), d(rng)}; };

    for (const auto& sig : {BasisSignature::r13(), BasisSignature::r24()}) {
        for (int it = 0; it < 1000; ++it) {
            const Quat p = rnd(), q = rnd(), r = rnd();
            const double scale = std::max(1.0, euclid_norm(p) * euclid_norm(q));

            // structured expansion vs brute-force basis table
            Quat table{};
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j) {
                    Quat ei{}, ej{};
                    ei[i] = 1;
                    ej[j] = 1;
                    table += quat_mul(ei, ej, sig) * (p[i] * q[j]);
                }
            require(euclid_norm(quat_mul(p, q, sig) - table) / scale < 1e-12,
                    "expansion/table mismatch");

            const Quat assoc = quat_mul(quat_mul(p, q, sig), r, sig) -
                               quat_mul(p, quat_mul(q, r, sig), sig);
            require(euclid_norm(assoc) / std::max(1.0, scale * euclid_norm(r)) < 1e-12,
                    "associativity defect");

            const Quat anti =
                conjugate(quat_mul(p, q, sig)) - quat_mul(conjugate(q), conjugate(p), sig);
            require(euclid_norm(anti) / scale < 1e-12, "conjugation anti-automorphism");
        }
    }
}

void criterion2_frenet_fidelity() {
    // 3D: small-radius circle, truncation-dominated residuals
    const double R = 0.05;
    auto circle = [&](double step) {
        return sampled_pal(0, 0.3, step, Ambient::R13, [&](double s) {
            return Quat::spatial(R * std::cos(s / R), R * std::sin(s / R), 0);
        });
    };
    const auto c3a = circle(1e-3), c3b = circle(5e-4);
    const auto r3a = frenet3_residuals(c3a, frenet3_apparatus(c3a));
    const auto r3b = frenet3_residuals(c3b, frenet3_apparatus(c3b));
    for (int j = 0; j < 3; ++j) {
        require(r3a.max[j] < 1e-5, "3D residual " + std::to_string(j + 1) + " = " +
                                       fmt(r3a.max[j]) + " at step 1e-3");
        if (r3a.max[j] < 1e-7) {   // identically-cancelling component: roundoff floor
            require(r3b.max[j] < 1e-6, "3D residual " + std::to_string(j + 1) +
                                           " left the roundoff floor");
            continue;
        }
        require(r3a.max[j] / r3b.max[j] >= 3.0,
                "3D residual " + std::to_string(j + 1) + " shrink " +
                    fmt(r3a.max[j] / r3b.max[j]) + "x < 3x");
    }

    // 4D: analytic bi-circular curve (a cos ps, a sin ps, c cos ws, c sin ws)
    const double p = 40, w = 24, a = 0.03;
    const double cc = std::sqrt((a * a * p * p - 1) / (w * w));
    auto bicirc = [&](double step) {
        return sampled_pal(0, 0.5, step, Ambient::R24, [&](double s) {
            return Quat{a * std::cos(p * s), a * std::sin(p * s), cc * std::cos(w * s),
                        cc * std::sin(w * s)};
        });
    };
    const auto c4a = bicirc(1e-3), c4b = bicirc(5e-4);
    const auto r4a = frenet4_residuals(c4a, frenet4_apparatus(c4a));
    const auto r4b = frenet4_residuals(c4b, frenet4_apparatus(c4b));
    for (int j = 0; j < 4; ++j) {
        require(r4a.max[j] < 1e-5, "4D residual " + std::to_string(j + 1) + " = " +
                                       fmt(r4a.max[j]) + " at step 1e-3");
        if (r4a.max[j] < 1e-7) {
            require(r4b.max[j] < 1e-6, "4D residual " + std::to_string(j + 1) +
                                           " left the roundoff floor");
            continue;
        }
        require(r4a.max[j] / r4b.max[j] >= 3.0,
                "4D residual " + std::to_string(j + 1) + " shrink " +
                    fmt(r4a.max[j] / r4b.max[j]) + "x < 3x");
    }
}

void criterion3_thm34_forward() {
    for (const auto& cfg : kThm34Configs) {
        const auto curve = build_thm34(cfg);
        const auto frame = frenet3_apparatus(curve);
        const auto rep = analyze_rectifying_3d(curve, frame, 1e-3);
        const std::string L = cfg.label;
        require(rep.distance.pass, L + ": statement (i), residual " +
                                       fmt(rep.distance.residual));
        require(rep.tangential.pass, L + ": statement (ii), residual " +
                                         fmt(rep.tangential.residual));
        require(rep.normal.pass, L + ": statement (iii), stddev " + fmt(rep.normal.stddev));
        require(rep.binormal.pass, L + ": statement (iv), stddev " +
                                       fmt(rep.binormal.stddev) + ", min|r| " +
                                       fmt(rep.binormal.min_abs_torsion));
        require(rep.ratio.pass,
                L + ": ratio linearity, residual " + fmt(rep.ratio.residual));
        require(std::fabs(std::fabs(rep.ratio.c1) - 1.0) < 1e-3,
                L + ": |c1| = " + fmt(std::fabs(rep.ratio.c1)) + " != 1/a");
        require(rep.verdict, L + ": overall verdict");
    }
}

void criterion4_controls() {
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> d(-1, 1);
    const double tol = 1e-4;
    for (const auto& cfg : kThm34Configs) {
        auto curve = build_thm34(cfg);
        Quat offset = Quat::spatial(d(rng), d(rng), d(rng));
        offset = offset / norm(offset);
        for (Quat& q : curve.points) q += offset;
        const auto frame = frenet3_apparatus(curve);
        const auto rep = analyze_rectifying_3d(curve, frame, tol);
        require(!rep.verdict, std::string(cfg.label) + ": translated copy still passes");
        require(rep.h_alpha_n1_max >= 10 * tol,
                std::string(cfg.label) + ": translated defect " + fmt(rep.h_alpha_n1_max) +
                    " lacks the 10x margin");
    }

    // constant-curvature integrated control: ratio slope ~ 0
    const auto prof = profile3_constant(1.0, 0.5);
    auto c = integrate_frenet3(prof, Frame3{}, Quat{}, 0.0, 3.0,
                               IntegrateOptions{1e-3, 1, false, 1e-10});
    c.param_kind = ParamKind::PseudoArcLength;
    const auto ratio = check_ratio_linearity(frenet3_apparatus(c), 1e-3);
    require(std::fabs(ratio.c1) < 1e-3, "constant-curvature control: c1 = " + fmt(ratio.c1));
    require(!ratio.pass, "constant-curvature control passed ratio linearity");
}

void criterion5_thm43_forward() {
    const auto rc = build_rectifying_4d();
    const auto frame = frenet4_apparatus(rc.curve);
    const auto rep = analyze_rectifying_4d(rc.curve, frame, 1e-3);
    require(rep.eq43_max < 1e-3, "max eq43 residual = " + fmt(rep.eq43_max));
    require(rep.distance.pass, "statement (i), residual " + fmt(rep.distance.residual));
    require(rep.tangential.pass, "statement (ii), residual " + fmt(rep.tangential.residual));
    require(rep.normal.pass, "statement (iii), stddev " + fmt(rep.normal.stddev));
    require(rep.binormal.pass, "statement (iv), residuals " +
                                   fmt(rep.binormal.n2_residual) + " / " +
                                   fmt(rep.binormal.n3_residual));
    require(rep.verdict, "overall verdict");
}

void criterion6_corollary() {
    const auto prof = profile4_constant(1.0, 1.0, 1.0, EpsConfig4::for_product(+1));
    auto c = integrate_frenet4(prof, Frame4::standard_for(prof.eps), Quat{}, 0.0, 1.0,
                               IntegrateOptions{1e-3, 1, false, 1e-10});
    c.param_kind = ParamKind::PseudoArcLength;
    c = analysis_grid(c, 1e-2);
    const auto frame = frenet4_apparatus(c);

    double least = 1e300;
    for (std::size_t i = frame.first; i <= frame.last; i += 5) {
        const double cc = frame.eps_T * h_inner(c.points[i], frame.T[i]) - frame.s[i];
        least = std::min(least, check_eq43(frame, cc).max_abs);
    }
    for (double cc = -3.0; cc <= 3.0; cc += 0.05)
        least = std::min(least, check_eq43(frame, cc).max_abs);
    require(least > 0.1, "min over c of max eq43 residual = " + fmt(least));
}

void criterion7_thm43_closed_forms() {
    // case 1: analytic derivative, exact ODE residual
    {
        const auto eps = EpsConfig4::for_product(-1);
        const auto p = profile4_case1(0.0, -0.5, 1.0, 1.0, eps, 0.0, 2.0);
        double worst = 0;
        for (int i = 0; i <= 400; ++i) {
            const double s = 2.0 * i / 400.0;
            const double bt = p.bitorsion(s);
            worst = std::max(worst, std::fabs(p.bitorsion_prime(s) -
                                              eps.E() * bt * bt * bt * s));
        }
        require(worst < 1e-6, "case 1 ODE residual " + fmt(worst));
    }
    // cases 2 and 3: finite-difference second derivative
    const double h = 1e-3;
    auto second = [h](auto&& f, double s) {
        return (f(s + h) - 2.0 * f(s) + f(s - h)) / (h * h);
    };
    for (int E : {+1, -1}) {
        const auto eps = EpsConfig4::for_product(E);
        const double c = 0.0, c1 = 1.0, c2 = 0.3, bt = 1.0;
        const auto p2 = profile4_case2(c, c1, c2, 1.0, bt, eps, 0.5, 1.5);
        const auto p3 = profile4_case3(c, c1, c2, 1.0, bt, eps, 0.5, 1.5);
        auto u = [&](double s) { return p2.kappa(s) * (s + c); };
        auto v = [&](double s) { return p3.kappa(s) * (s + c) / p3.k(s); };
        double worst = 0;
        for (int i = 0; i <= 200; ++i) {
            const double s = 0.5 + i / 200.0;
            worst = std::max(worst, std::fabs(eps.eps_n1 * u(s) * bt * bt +
                                              eps.eps_n2 * second(u, s)));
            worst = std::max(worst, std::fabs(eps.eps_n1 * v(s) * bt * bt +
                                              eps.eps_n2 * second(v, s)));
        }
        require(worst < 1e-4, "case 2/3 ODE residual " + fmt(worst) + " (E = " +
                                  std::to_string(E) + ")");
    }
}

void criterion8_integrator_quality() {
    const auto prof = profile3_constant(1.0, 0.0);
    auto endpoint_error = [&](double step) {
        const auto c = integrate_frenet3(prof, Frame3{}, Quat{}, 0.0, 6.2831853072,
                                         IntegrateOptions{step, 1, false, 1e-10});
        const double s = c.params.back();
        return euclid_norm(c.points.back() -
                           Quat::spatial(std::sin(s), 1 - std::cos(s), 0));
    };
    const double e1 = endpoint_error(0.02), e2 = endpoint_error(0.01);
    require(e1 / e2 >= 12.0, "order ratio " + fmt(e1 / e2) + " < 12");

    // metric drift at step 1e-3 over a unit range, 3D and 4D
    {
        const auto prof3 = profile3_constant(1.0, 0.5);
        auto c = integrate_frenet3(prof3, Frame3{}, Quat{}, 0.0, 1.0,
                                   IntegrateOptions{1e-3, 1, false, 1e-10});
        c.param_kind = ParamKind::PseudoArcLength;
        const auto d1 = differentiate(c, 1);
        double drift = 0;
        for (std::size_t i = 4; i + 4 < c.size(); ++i)
            drift = std::max(drift, std::fabs(h_inner(d1.values[i], d1.values[i]) - 1.0));
        require(drift < 1e-8, "3D metric drift " + fmt(drift));
    }
    {
        const auto prof4 = profile4_constant(1.0, 1.0, 0.5, EpsConfig4::for_product(+1));
        auto c = integrate_frenet4(prof4, Frame4::standard_for(prof4.eps), Quat{}, 0.0, 1.0,
                                   IntegrateOptions{1e-3, 1, false, 1e-10});
        c.param_kind = ParamKind::PseudoArcLength;
        const auto d1 = differentiate(c, 1);
        double drift = 0;
        for (std::size_t i = 4; i + 4 < c.size(); ++i)
            drift = std::max(drift, std::fabs(h_inner(d1.values[i], d1.values[i]) - 1.0));
        require(drift < 1e-8, "4D metric drift " + fmt(drift));
    }
}

// criterion 9 lives in its own file section: drives the CLI end to end
void criterion9_cli_contract();

} // namespace

#include "acceptance_cli.inc"

int main() {
    criterion(1, "algebra suite (expansion, associativity, anti-automorphism)",
              criterion1_algebra);
    criterion(2, "Frenet fidelity and residual convergence", criterion2_frenet_fidelity);
    criterion(3, "scaled-sphere constructions pass every characterization",
              criterion3_thm34_forward);
    criterion(4, "translated and constant-curvature controls fail", criterion4_controls);
    criterion(5, "case-1 curvature family yields a rectifying curve",
              criterion5_thm43_forward);
    criterion(6, "constant-curvature 4D curves are never rectifying", criterion6_corollary);
    criterion(7, "curvature-family closed forms satisfy their defining ODEs",
              criterion7_thm43_closed_forms);
    criterion(8, "integrator order and metric drift", criterion8_integrator_quality);
    criterion(9, "CLI pipeline: construct -> analyze -> verify", criterion9_cli_contract);
    if (g_failures) std::printf("%d criterion(s) FAILED\n", g_failures);
    return g_failures ? 1 : 0;
}
