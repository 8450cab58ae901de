#include "semiq/constructors.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

namespace semiq {

// ---------------------------------------------------------------------------
// sphere families
// ---------------------------------------------------------------------------

void SphereCurveFamily::validate() const {
    if (!(b > 1e-2))
        throw InvalidFamilyParameter("family: b must exceed 1e-2 (great circles give "
                                     "straight scaled curves)");
    if (tag == SphereFamilyTag::S12Timelike && !(b < 1.0))
        throw InvalidFamilyParameter("family: s12-timelike requires b in (0,1)");
}

Quat SphereCurveFamily::position(double t) const {
    const double u = t + phase;
    switch (tag) {
        case SphereFamilyTag::S12Latitude: {
            const double r = std::sqrt(1.0 + b * b);
            return Quat::spatial(r * std::cos(u / r), r * std::sin(u / r), b);
        }
        case SphereFamilyTag::S12Timelike: {
            const double c1 = std::sqrt(1.0 - b * b);
            return Quat::spatial(c1, b * std::cosh(u / b), b * std::sinh(u / b));
        }
        case SphereFamilyTag::H02Spacelike:
            return Quat::spatial(b * std::cos(u / b), b * std::sin(u / b),
                                 std::sqrt(1.0 + b * b));
    }
    return {};
}

int SphereCurveFamily::h_yy() const {
    return tag == SphereFamilyTag::H02Spacelike ? -1 : +1;
}
int SphereCurveFamily::h_ypyp() const {
    return tag == SphereFamilyTag::S12Timelike ? -1 : +1;
}

CurveSamples base_sphere_curve(const SphereCurveFamily& family, double t_lo, double t_hi,
                               std::size_t n_samples) {
    family.validate();
    if (n_samples < 5) throw InsufficientSamples("base_sphere_curve: need >= 5 samples");
    if (!(t_hi > t_lo)) throw InvalidFamilyParameter("base_sphere_curve: empty range");

    CurveSamples c;
    c.sig = BasisSignature::r13();
    c.param_kind = ParamKind::Raw;
    c.params = uniform_grid(t_lo, t_hi, n_samples);
    c.points.reserve(n_samples);
    for (double t : c.params) c.points.push_back(family.position(t));
    return c;
}

// ---------------------------------------------------------------------------
// scaled constructions
// ---------------------------------------------------------------------------

namespace {

double scaling_factor(ScalingCase sc, double t) {
    switch (sc) {
        case ScalingCase::Cos: return std::cos(t);
        case ScalingCase::Sinh: return std::sinh(t);
        case ScalingCase::Cosh: return std::cosh(t);
    }
    return 1.0;
}

double distance_to_pole(ScalingCase sc, double t_lo, double t_hi) {
    if (sc == ScalingCase::Cosh) return 1e30;   // cosh never vanishes
    if (sc == ScalingCase::Sinh) {
        if (t_lo <= 0.0 && t_hi >= 0.0) return 0.0;
        return std::min(std::fabs(t_lo), std::fabs(t_hi));
    }
    // poles of cos at pi/2 + n*pi
    double d = 1e30;
    const double pi = 3.14159265358979323846;
    const long n_lo = static_cast<long>(std::floor((t_lo - pi / 2) / pi)) - 1;
    const long n_hi = static_cast<long>(std::ceil((t_hi - pi / 2) / pi)) + 1;
    for (long n = n_lo; n <= n_hi; ++n) {
        const double pole = pi / 2 + static_cast<double>(n) * pi;
        if (pole >= t_lo && pole <= t_hi) return 0.0;
        d = std::min(d, std::min(std::fabs(pole - t_lo), std::fabs(pole - t_hi)));
    }
    return d;
}

} // namespace

CurveSamples construct_scaled_sphere_curve(ScalingCase sc, const SphereCurveFamily& family,
                                           double a, double t_lo, double t_hi,
                                           std::size_t n_samples, double pole_margin) {
    family.validate();
    if (!(a > 0)) throw InvalidFamilyParameter("construct: a must be positive");
    if (n_samples < 5) throw InsufficientSamples("construct: need >= 5 samples");
    if (!(t_hi > t_lo)) throw InvalidFamilyParameter("construct: empty range");

    // admissibility: (h(y,y), h(y',y')) per case
    const int pyy = family.h_yy(), pvv = family.h_ypyp();
    bool ok = false;
    switch (sc) {
        case ScalingCase::Cos: ok = (pyy == +1 && pvv == +1); break;
        case ScalingCase::Sinh: ok = (pyy == +1 && pvv == -1) || (pyy == -1 && pvv == +1); break;
        case ScalingCase::Cosh: ok = (pyy == -1 && pvv == +1) || (pyy == +1 && pvv == -1); break;
    }
    if (!ok)
        throw CausalMismatch("construct: base family causal type does not match the case");

    if (distance_to_pole(sc, t_lo, t_hi) < pole_margin)
        throw PoleInRange("construct: scaling factor vanishes within the margin of the range");

    CurveSamples c;
    c.sig = BasisSignature::r13();
    c.param_kind = ParamKind::Raw;
    c.params = uniform_grid(t_lo, t_hi, n_samples);
    c.points.reserve(n_samples);
    for (double t : c.params)
        c.points.push_back(family.position(t) * (a / scaling_factor(sc, t)));
    return c;
}

// ---------------------------------------------------------------------------
// curvature profiles
// ---------------------------------------------------------------------------

EpsConfig4 EpsConfig4::for_product(int E) {
    if (E >= 0) return EpsConfig4{+1, +1, -1, -1};
    return EpsConfig4{+1, -1, -1, +1};
}

Frame4 Frame4::standard_for(const EpsConfig4& eps) {
    if (eps.E() >= 0) return Frame4{Quat::e1(), Quat::e2(), Quat::e3(), Quat::one()};
    return Frame4{Quat::e1(), Quat::e3(), Quat::one(), Quat::e2()};
}

Profile3 profile3_constant(double k, double r, EpsConfig3 eps) {
    Profile3 p;
    p.k = [k](double) { return k; };
    p.r = [r](double) { return r; };
    p.eps = eps;
    p.description = "const3";
    return p;
}

Profile3 profile3_linear_ratio(double k, double c1, double c2, EpsConfig3 eps) {
    Profile3 p;
    p.k = [k](double) { return k; };
    p.r = [k, c1, c2](double s) { return k * (c1 * s + c2); };
    p.eps = eps;
    p.description = "linear3";
    return p;
}

Profile4 profile4_constant(double kappa, double k, double bt, EpsConfig4 eps) {
    Profile4 p;
    p.kappa = [kappa](double) { return kappa; };
    p.k = [k](double) { return k; };
    p.bitorsion = [bt](double) { return bt; };
    p.bitorsion_prime = [](double) { return 0.0; };
    p.eps = eps;
    p.description = "const4";
    return p;
}

Profile4 profile4_case1(double c, double c1, double kappa0, double k0, EpsConfig4 eps,
                        double s_lo, double s_hi, double tol) {
    if (!(kappa0 > 0)) throw InvalidFamilyParameter("case1: kappa must be positive");
    if (k0 == 0) throw InvalidFamilyParameter("case1: k must be non-zero");
    const double E = eps.E();
    auto radicand = [E, c, c1](double s) { return -E * s * s - 2.0 * E * c * s - 2.0 * c1; };
    // endpoints plus the vertex cover the extrema of the quadratic
    double lo = std::min(radicand(s_lo), radicand(s_hi));
    const double vertex = -c;
    if (vertex > s_lo && vertex < s_hi) lo = std::min(lo, radicand(vertex));
    if (lo < tol)
        throw SingularOnRange("case1: radicand not positive on the requested range");

    Profile4 p;
    p.kappa = [kappa0](double) { return kappa0; };
    p.k = [k0](double) { return k0; };
    p.bitorsion = [radicand](double s) { return 1.0 / std::sqrt(radicand(s)); };
    p.bitorsion_prime = [radicand, E, c](double s) {
        const double g = radicand(s);
        return E * (s + c) / (g * std::sqrt(g));
    };
    p.eps = eps;
    p.c = c;
    p.description = "thm43-1";
    return p;
}

namespace {

// General solution of u'' = -E bt^2 u: the cos/sin pair for E=+1, the
// cosh/sinh pair for E=-1.
std::function<double(double)> oscillator_solution(int E, double bt, double c1, double c2) {
    if (E >= 0)
        return [bt, c1, c2](double s) {
            return c1 * std::cos(bt * s) + c2 * std::sin(bt * s);
        };
    return [bt, c1, c2](double s) {
        return c1 * std::cosh(bt * s) + c2 * std::sinh(bt * s);
    };
}

void check_away_from_zero(const std::function<double(double)>& f, double s_lo, double s_hi,
                          double tol, const char* what) {
    for (int i = 0; i <= 256; ++i) {
        const double s = s_lo + (s_hi - s_lo) * i / 256.0;
        if (std::fabs(f(s)) < tol)
            throw SingularOnRange(std::string(what) + " vanishes on the requested range");
    }
}

} // namespace

Profile4 profile4_case2(double c, double c1, double c2, double k0, double bt0,
                        EpsConfig4 eps, double s_lo, double s_hi, double tol) {
    if (k0 == 0 || bt0 == 0)
        throw InvalidFamilyParameter("case2: k and bitorsion must be non-zero");
    auto u = oscillator_solution(eps.E(), bt0, c1, c2);
    auto shift = [c](double s) { return s + c; };
    check_away_from_zero(shift, s_lo, s_hi, tol, "case2: s+c");
    auto kappa = [u, c](double s) { return u(s) / (s + c); };
    check_away_from_zero(kappa, s_lo, s_hi, tol, "case2: kappa");

    Profile4 p;
    p.kappa = kappa;
    p.k = [k0](double) { return k0; };
    p.bitorsion = [bt0](double) { return bt0; };
    p.bitorsion_prime = [](double) { return 0.0; };
    p.eps = eps;
    p.c = c;
    p.description = "thm43-2";
    return p;
}

Profile4 profile4_case3(double c, double c1, double c2, double kappa0, double bt0,
                        EpsConfig4 eps, double s_lo, double s_hi, double tol) {
    if (!(kappa0 > 0)) throw InvalidFamilyParameter("case3: kappa must be positive");
    if (bt0 == 0) throw InvalidFamilyParameter("case3: bitorsion must be non-zero");
    auto v = oscillator_solution(eps.E(), bt0, c1, c2);
    check_away_from_zero(v, s_lo, s_hi, tol, "case3: denominator");
    auto shift = [c](double s) { return s + c; };
    check_away_from_zero(shift, s_lo, s_hi, tol, "case3: s+c");

    Profile4 p;
    p.kappa = [kappa0](double) { return kappa0; };
    p.k = [kappa0, v, c](double s) { return kappa0 * (s + c) / v(s); };
    p.bitorsion = [bt0](double) { return bt0; };
    p.bitorsion_prime = [](double) { return 0.0; };
    p.eps = eps;
    p.c = c;
    p.description = "thm43-3";
    return p;
}

// ---------------------------------------------------------------------------
// integrators
// ---------------------------------------------------------------------------

namespace {

void validate_frame3(const Frame3& f, const EpsConfig3& e, double tol) {
    auto bad = [&](double x, double want) { return std::fabs(x - want) > tol; };
    if (bad(h_inner(f.t, f.t), e.eps_t) || bad(h_inner(f.n1, f.n1), e.eps_n1) ||
        bad(h_inner(f.n2, f.n2), e.eps_n2) || bad(h_inner(f.t, f.n1), 0) ||
        bad(h_inner(f.t, f.n2), 0) || bad(h_inner(f.n1, f.n2), 0))
        throw InvalidInitialFrame("integrate3: initial frame is not h-orthonormal with "
                                  "the declared signs");
}

void validate_frame4(const Frame4& f, const EpsConfig4& e, double tol) {
    auto bad = [&](double x, double want) { return std::fabs(x - want) > tol; };
    if (bad(h_inner(f.T, f.T), e.eps_T) || bad(h_inner(f.N1, f.N1), e.eps_N1) ||
        bad(h_inner(f.N2, f.N2), e.eps_n1 * e.eps_T) ||
        bad(h_inner(f.N3, f.N3), e.eps_n2 * e.eps_T) || bad(h_inner(f.T, f.N1), 0) ||
        bad(h_inner(f.T, f.N2), 0) || bad(h_inner(f.T, f.N3), 0) ||
        bad(h_inner(f.N1, f.N2), 0) || bad(h_inner(f.N1, f.N3), 0) ||
        bad(h_inner(f.N2, f.N3), 0))
        throw InvalidInitialFrame("integrate4: initial frame is not h-orthonormal with "
                                  "the declared signs");
}

// metric Gram-Schmidt projection back to exact h-orthonormality
template <std::size_t N>
void renormalize_frame(std::array<Quat*, N> v) {
    for (std::size_t i = 0; i < N; ++i) {
        Quat w = *v[i];
        for (std::size_t j = 0; j < i; ++j)
            w -= *v[j] * (h_inner(w, *v[j]) / h_inner(*v[j], *v[j]));
        const double nn = norm(w);
        if (nn > 0) *v[i] = w / nn;
    }
}

} // namespace

CurveSamples integrate_frenet3(const Profile3& profile, const Frame3& init,
                               const Quat& position0, double s_lo, double s_hi,
                               const IntegrateOptions& opt, IntegrationDiagnostics* diag) {
    if (!(opt.step > 0) || !(s_hi > s_lo))
        throw InvalidFamilyParameter("integrate3: bad step or range");
    validate_frame3(init, profile.eps, opt.frame_tol);
    if (std::fabs(position0.q4) > 1e-12)
        throw InvalidInitialFrame("integrate3: start position must be spatial");

    const double et = profile.eps.eps_t, e1 = profile.eps.eps_n1, e2 = profile.eps.eps_n2;
    struct State {
        Quat a, t, n1, n2;
    };
    auto rhs = [&](double s, const State& y) {
        State d;
        const double k = profile.k(s), r = profile.r(s);
        d.a = y.t;
        d.t = y.n1 * (e1 * k);
        d.n1 = y.t * (-et * k) + y.n2 * (e1 * r);
        d.n2 = y.n1 * (-e2 * r);
        return d;
    };
    auto add = [](const State& y, const State& d, double c) {
        return State{y.a + d.a * c, y.t + d.t * c, y.n1 + d.n1 * c, y.n2 + d.n2 * c};
    };

    const long n_steps = std::lround((s_hi - s_lo) / opt.step);
    const double h = (s_hi - s_lo) / static_cast<double>(std::max(n_steps, 1L));
    State y{position0, init.t, init.n1, init.n2};

    CurveSamples out;
    out.sig = BasisSignature::r13();
    out.param_kind = ParamKind::Raw;
    out.params.push_back(s_lo);
    out.points.push_back(y.a);
    for (long i = 0; i < n_steps; ++i) {
        const double s = s_lo + h * static_cast<double>(i);
        const State k1 = rhs(s, y);
        const State k2 = rhs(s + h / 2, add(y, k1, h / 2));
        const State k3 = rhs(s + h / 2, add(y, k2, h / 2));
        const State k4 = rhs(s + h, add(y, k3, h));
        y.a += (k1.a + k2.a * 2 + k3.a * 2 + k4.a) * (h / 6);
        y.t += (k1.t + k2.t * 2 + k3.t * 2 + k4.t) * (h / 6);
        y.n1 += (k1.n1 + k2.n1 * 2 + k3.n1 * 2 + k4.n1) * (h / 6);
        y.n2 += (k1.n2 + k2.n2 * 2 + k3.n2 * 2 + k4.n2) * (h / 6);
        if (opt.renormalize)
            renormalize_frame<3>({&y.t, &y.n1, &y.n2});
        if (diag) {
            double d = std::max({std::fabs(h_inner(y.t, y.t) - et),
                                 std::fabs(h_inner(y.n1, y.n1) - e1),
                                 std::fabs(h_inner(y.n2, y.n2) - e2),
                                 std::fabs(h_inner(y.t, y.n1)),
                                 std::fabs(h_inner(y.t, y.n2)),
                                 std::fabs(h_inner(y.n1, y.n2))});
            diag->max_metric_drift = std::max(diag->max_metric_drift, d);
        }
        if ((i + 1) % opt.output_stride == 0 || i + 1 == n_steps) {
            out.params.push_back(s_lo + h * static_cast<double>(i + 1));
            out.points.push_back(y.a);
        }
    }
    return out;
}

CurveSamples integrate_frenet4(const Profile4& profile, const Frame4& init,
                               const Quat& position0, double s_lo, double s_hi,
                               const IntegrateOptions& opt, IntegrationDiagnostics* diag) {
    if (!(opt.step > 0) || !(s_hi > s_lo))
        throw InvalidFamilyParameter("integrate4: bad step or range");
    validate_frame4(init, profile.eps, opt.frame_tol);

    const double eT = profile.eps.eps_T, eN1 = profile.eps.eps_N1;
    const double e1 = profile.eps.eps_n1, e2 = profile.eps.eps_n2;
    const double et = eT * eN1;   // the only sign for which the flow preserves h-orthonormality
    struct State {
        Quat b, T, N1, N2, N3;
    };
    auto rhs = [&](double s, const State& y) {
        State d;
        const double kap = profile.kappa(s), k = profile.k(s), bt = profile.bitorsion(s);
        d.b = y.T;
        d.T = y.N1 * (eN1 * kap);
        d.N1 = y.T * (-et * eN1 * kap) + y.N2 * (e1 * k);
        d.N2 = y.N1 * (-et * k) + y.N3 * (e1 * bt);
        d.N3 = y.N2 * (-e2 * bt);
        return d;
    };
    auto add = [](const State& y, const State& d, double c) {
        return State{y.b + d.b * c, y.T + d.T * c, y.N1 + d.N1 * c, y.N2 + d.N2 * c,
                     y.N3 + d.N3 * c};
    };

    const long n_steps = std::lround((s_hi - s_lo) / opt.step);
    const double h = (s_hi - s_lo) / static_cast<double>(std::max(n_steps, 1L));
    State y{position0, init.T, init.N1, init.N2, init.N3};

    CurveSamples out;
    out.sig = BasisSignature::r24();
    out.param_kind = ParamKind::Raw;
    out.params.push_back(s_lo);
    out.points.push_back(y.b);
    for (long i = 0; i < n_steps; ++i) {
        const double s = s_lo + h * static_cast<double>(i);
        const State k1 = rhs(s, y);
        const State k2 = rhs(s + h / 2, add(y, k1, h / 2));
        const State k3 = rhs(s + h / 2, add(y, k2, h / 2));
        const State k4 = rhs(s + h, add(y, k3, h));
        y.b += (k1.b + k2.b * 2 + k3.b * 2 + k4.b) * (h / 6);
        y.T += (k1.T + k2.T * 2 + k3.T * 2 + k4.T) * (h / 6);
        y.N1 += (k1.N1 + k2.N1 * 2 + k3.N1 * 2 + k4.N1) * (h / 6);
        y.N2 += (k1.N2 + k2.N2 * 2 + k3.N2 * 2 + k4.N2) * (h / 6);
        y.N3 += (k1.N3 + k2.N3 * 2 + k3.N3 * 2 + k4.N3) * (h / 6);
        if (opt.renormalize)
            renormalize_frame<4>({&y.T, &y.N1, &y.N2, &y.N3});
        if (diag) {
            double d = std::max({std::fabs(h_inner(y.T, y.T) - eT),
                                 std::fabs(h_inner(y.N1, y.N1) - eN1),
                                 std::fabs(h_inner(y.N2, y.N2) - e1 * eT),
                                 std::fabs(h_inner(y.N3, y.N3) - e2 * eT),
                                 std::fabs(h_inner(y.T, y.N1)), std::fabs(h_inner(y.T, y.N2)),
                                 std::fabs(h_inner(y.T, y.N3)), std::fabs(h_inner(y.N1, y.N2)),
                                 std::fabs(h_inner(y.N1, y.N3)),
                                 std::fabs(h_inner(y.N2, y.N3))});
            diag->max_metric_drift = std::max(diag->max_metric_drift, d);
        }
        if ((i + 1) % opt.output_stride == 0 || i + 1 == n_steps) {
            out.params.push_back(s_lo + h * static_cast<double>(i + 1));
            out.points.push_back(y.b);
        }
    }
    return out;
}

Quat rectifying_start_3d(const Profile3& profile, const Frame3& init, double s0) {
    // r/k = eps_n1 eps_n2 (s+c)/mu with lambda = s+c, mu constant
    const double e12 = profile.eps.eps_n1 * profile.eps.eps_n2;
    const double dh = 1e-5;
    auto ratio = [&](double s) { return profile.r(s) / profile.k(s); };
    const double c1 = (ratio(s0 + dh) - ratio(s0 - dh)) / (2 * dh);
    if (std::fabs(c1) < 1e-12)
        throw InvalidFamilyParameter("rectifying_start_3d: ratio slope vanishes (profile is "
                                     "not a rectifying family)");
    const double c2 = ratio(s0) - c1 * s0;
    const double mu = e12 / c1;
    const double c = c2 / c1;
    return init.t * (s0 + c) + init.n2 * mu;
}

Quat rectifying_start_4d(const Profile4& profile, const Frame4& init, double s0) {
    const double eT = profile.eps.eps_T, e2 = profile.eps.eps_n2;
    auto mu = [&](double s) {
        return eT * profile.kappa(s) * (s + profile.c) / profile.k(s);
    };
    const double dh = 1e-5;
    const double mup = (mu(s0 + dh) - mu(s0 - dh)) / (2 * dh);
    const double nu = mup / (e2 * profile.bitorsion(s0));
    return init.T * (s0 + profile.c) + init.N2 * mu(s0) + init.N3 * nu;
}

// ---------------------------------------------------------------------------
// specifier parsing
// ---------------------------------------------------------------------------

namespace {

std::map<std::string, double> parse_kv(const std::string& body) {
    std::map<std::string, double> kv;
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        const auto eq = item.find('=');
        if (eq == std::string::npos)
            throw InvalidFamilyParameter("specifier: expected key=value, got '" + item + "'");
        try {
            kv[item.substr(0, eq)] = std::stod(item.substr(eq + 1));
        } catch (const std::exception&) {
            throw InvalidFamilyParameter("specifier: bad number in '" + item + "'");
        }
    }
    return kv;
}

std::pair<std::string, std::map<std::string, double>> split_spec(const std::string& spec) {
    const auto colon = spec.find(':');
    const std::string name = spec.substr(0, colon);
    return {name, colon == std::string::npos ? std::map<std::string, double>{}
                                             : parse_kv(spec.substr(colon + 1))};
}

double get_or(const std::map<std::string, double>& kv, const std::string& key, double dflt) {
    auto it = kv.find(key);
    return it == kv.end() ? dflt : it->second;
}

} // namespace

SphereCurveFamily parse_family(const std::string& spec) {
    auto [name, kv] = split_spec(spec);
    SphereCurveFamily f;
    if (name == "latitude" || name == "s12-latitude")
        f.tag = SphereFamilyTag::S12Latitude;
    else if (name == "s12-timelike" || name == "timelike")
        f.tag = SphereFamilyTag::S12Timelike;
    else if (name == "h02" || name == "h02-spacelike")
        f.tag = SphereFamilyTag::H02Spacelike;
    else
        throw InvalidFamilyParameter("unknown base family '" + name + "'");
    f.b = get_or(kv, "b", 1.0);
    f.phase = get_or(kv, "phase", 0.0);
    f.validate();
    return f;
}

Profile3 parse_profile3(const std::string& spec) {
    auto [name, kv] = split_spec(spec);
    if (name == "const3" || name == "const")
        return profile3_constant(get_or(kv, "k", 1.0), get_or(kv, "r", 0.0));
    if (name == "linear3")
        return profile3_linear_ratio(get_or(kv, "k", 1.0), get_or(kv, "c1", 1.0),
                                     get_or(kv, "c2", 0.0));
    throw InvalidFamilyParameter("unknown 3D profile '" + name + "'");
}

Profile4 parse_profile4(const std::string& spec, double s_lo, double s_hi) {
    auto [name, kv] = split_spec(spec);
    if (name == "const4" || name == "const") {
        auto eps = EpsConfig4::for_product(static_cast<int>(get_or(kv, "eps", 1)));
        return profile4_constant(get_or(kv, "kappa", 1.0), get_or(kv, "k", 1.0),
                                 get_or(kv, "bt", 1.0), eps);
    }
    if (name == "thm43-1") {
        auto eps = EpsConfig4::for_product(static_cast<int>(get_or(kv, "eps", -1)));
        return profile4_case1(get_or(kv, "c", 0.0), get_or(kv, "c1", -0.5),
                              get_or(kv, "kappa", 1.0), get_or(kv, "k", 1.0), eps, s_lo, s_hi);
    }
    if (name == "thm43-2") {
        auto eps = EpsConfig4::for_product(static_cast<int>(get_or(kv, "eps", 1)));
        return profile4_case2(get_or(kv, "c", 0.0), get_or(kv, "c1", 1.0),
                              get_or(kv, "c2", 0.3), get_or(kv, "k", 1.0),
                              get_or(kv, "bt", 1.0), eps, s_lo, s_hi);
    }
    if (name == "thm43-3") {
        auto eps = EpsConfig4::for_product(static_cast<int>(get_or(kv, "eps", 1)));
        return profile4_case3(get_or(kv, "c", 0.0), get_or(kv, "c1", 1.0),
                              get_or(kv, "c2", 0.3), get_or(kv, "kappa", 1.0),
                              get_or(kv, "bt", 1.0), eps, s_lo, s_hi);
    }
    throw InvalidFamilyParameter("unknown 4D profile '" + name + "'");
}

} // namespace semiq
