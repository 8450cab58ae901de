#include "semiq/frenet4.hpp"

#include <cmath>
#include <string>

namespace semiq {

namespace {

int sign_of(double x) { return x > 0 ? 1 : x < 0 ? -1 : 0; }

// Metric-flipped coordinates: h(u,v) = dot(u, flip(v)).
Quat metric_flip(const Quat& v) { return {v.q1, v.q2, -v.q3, -v.q4}; }

double det3(double a, double b, double c, double d, double e, double f, double g,
            double h, double i) {
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g);
}

// Vector Euclidean-orthogonal to three 4-vectors (cofactor expansion).
Quat orthogonal_complement(const Quat& a, const Quat& b, const Quat& c) {
    Quat d;
    d[0] = +det3(a[1], a[2], a[3], b[1], b[2], b[3], c[1], c[2], c[3]);
    d[1] = -det3(a[0], a[2], a[3], b[0], b[2], b[3], c[0], c[2], c[3]);
    d[2] = +det3(a[0], a[1], a[3], b[0], b[1], b[3], c[0], c[1], c[3]);
    d[3] = -det3(a[0], a[1], a[2], b[0], b[1], b[2], c[0], c[1], c[2]);
    return d;
}

struct StageCheck {
    double degeneracy_tol, null_tol;
    const std::vector<double>& s;
    std::size_t i;
    bool retained;

    // Returns the normalized vector; throws on degenerate/null remainders.
    Quat unitize(const Quat& w, double scale, const char* what) const {
        const double e = euclid_norm(w);
        const double nn = norm(w);
        if (retained) {
            if (e < degeneracy_tol * std::max(1.0, scale))
                throw DegenerateFrame(std::string("frenet4: ") + what +
                                          " degenerate (curve does not fill R24) at s = " +
                                          std::to_string(s[i]),
                                      s[i]);
            if (std::fabs(quadratic_form(w)) < null_tol * e * e)
                throw NullRemainder(std::string("frenet4: ") + what +
                                        " is null at s = " + std::to_string(s[i]),
                                    s[i]);
        }
        if (nn <= 0) return Quat::one();
        return w / nn;
    }
};

} // namespace

Frenet4Data frenet4_apparatus(const CurveSamples& curve, const Frenet4Options& opt) {
    curve.validate();
    if (curve.sig.ambient != Ambient::R24)
        throw InvalidCurve("frenet4: curve must be declared in R24");
    if (curve.param_kind != ParamKind::PseudoArcLength)
        throw NotUnitSpeed("frenet4: curve is not in pseudo arc-length parametrization");

    const std::size_t n = curve.size();
    const auto d1 = differentiate(curve, 1);
    const auto d2 = differentiate(curve, 2);
    const auto d3 = differentiate(curve, 3);

    const std::size_t chain_margin = static_cast<std::size_t>(d3.boundary_margin + 2);
    const std::size_t margin = chain_margin + static_cast<std::size_t>(opt.extra_margin);
    if (2 * margin + 7 > n)
        throw InsufficientSamples("frenet4: too few samples for the retained range");
    const std::size_t first = margin, last = n - 1 - margin;

    Frenet4Data f;
    f.s = curve.params;
    f.first = first;
    f.last = last;
    f.T = d1.values;
    f.N1.assign(n, Quat::e2());
    f.N2.assign(n, Quat::e3());
    f.N3.assign(n, Quat::one());
    f.kappa.assign(n, 0.0);
    f.k.assign(n, 0.0);
    f.bitorsion.assign(n, 0.0);

    std::vector<int> sT(n, 0), sN1(n, 0), sN2(n, 0), sN3(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        const bool retained = i >= first && i <= last;
        const Quat& T = f.T[i];
        const StageCheck chk{opt.degeneracy_tol, opt.null_tol, f.s, i, retained};

        if (retained && std::fabs(norm(T) - 1.0) > opt.unit_speed_tol)
            throw NotUnitSpeed("frenet4: |N(beta')-1| = " +
                               std::to_string(std::fabs(norm(T) - 1.0)) + " at s = " +
                               std::to_string(f.s[i]));

        const double kap = norm(d2.values[i]);
        f.kappa[i] = kap;
        if (retained && kap < opt.degeneracy_tol) {
            // vanishing h-norm with a sizeable vector is a null direction, not
            // a straight segment
            if (euclid_norm(d2.values[i]) > 100.0 * opt.degeneracy_tol)
                throw NullRemainder("frenet4: principal normal direction is null at s = " +
                                        std::to_string(f.s[i]),
                                    f.s[i]);
            throw DegenerateFrame("frenet4: principal curvature below tolerance at s = " +
                                      std::to_string(f.s[i]),
                                  f.s[i]);
        }
        if (kap < opt.degeneracy_tol) continue;
        const int eN1 = sign_of(quadratic_form(d2.values[i]));
        f.N1[i] = d2.values[i] * (static_cast<double>(eN1) / kap);

        // metric Gram-Schmidt of beta''' against {T, N1}
        const double hTT = h_inner(T, T), hN1N1 = h_inner(f.N1[i], f.N1[i]);
        Quat w = d3.values[i] - T * (h_inner(d3.values[i], T) / hTT) -
                 f.N1[i] * (h_inner(d3.values[i], f.N1[i]) / hN1N1);
        f.N2[i] = chk.unitize(w, euclid_norm(d3.values[i]), "second normal remainder");

        // N3 spans the h-orthogonal complement of {T, N1, N2}
        Quat w3 = orthogonal_complement(metric_flip(T), metric_flip(f.N1[i]),
                                        metric_flip(f.N2[i]));
        f.N3[i] = chk.unitize(w3, 1.0, "third normal direction");

        sT[i] = sign_of(quadratic_form(T));
        sN1[i] = eN1;
        sN2[i] = sign_of(quadratic_form(f.N2[i]));
        sN3[i] = sign_of(quadratic_form(f.N3[i]));
    }

    for (std::size_t i = first + 1; i <= last; ++i) {
        if (sT[i] != sT[first])
            throw CausalFlip("frenet4: tangent causal flip at s = " + std::to_string(f.s[i]), f.s[i]);
        if (sN1[i] != sN1[first])
            throw CausalFlip("frenet4: N1 causal flip at s = " + std::to_string(f.s[i]), f.s[i]);
        if (sN2[i] != sN2[first])
            throw CausalFlip("frenet4: N2 causal flip at s = " + std::to_string(f.s[i]), f.s[i]);
        if (sN3[i] != sN3[first])
            throw CausalFlip("frenet4: N3 causal flip at s = " + std::to_string(f.s[i]), f.s[i]);
    }
    f.eps_T = sT[first];
    f.eps_N1 = sN1[first];
    f.eps_n1 = f.eps_T * sN2[first];   // h(N2,N2) = eps_n1 eps_T
    f.eps_n2 = f.eps_T * sN3[first];

    // torsion: orient N2 so the extracted k is positive
    {
        auto n1p = differentiate_samples(f.s, f.N1, 1);
        double k_first = f.eps_n1 * h_inner(n1p.values[first], f.N2[first]) /
                         h_inner(f.N2[first], f.N2[first]);
        if (k_first < 0)
            for (std::size_t i = 0; i < n; ++i) f.N2[i] = -f.N2[i];
        for (std::size_t i = first; i <= last; ++i)
            f.k[i] = f.eps_n1 * h_inner(n1p.values[i], f.N2[i]) /
                     h_inner(f.N2[i], f.N2[i]);
    }
    // bitorsion: orient N3 so the first retained value is positive
    {
        auto n2p = differentiate_samples(f.s, f.N2, 1);
        double bt_first = f.eps_n1 * h_inner(n2p.values[first], f.N3[first]) /
                          h_inner(f.N3[first], f.N3[first]);
        if (bt_first < 0)
            for (std::size_t i = 0; i < n; ++i) f.N3[i] = -f.N3[i];
        for (std::size_t i = first; i <= last; ++i)
            f.bitorsion[i] = f.eps_n1 * h_inner(n2p.values[i], f.N3[i]) /
                             h_inner(f.N3[i], f.N3[i]);
    }
    return f;
}

Frenet4Residuals frenet4_residuals(const CurveSamples& curve, const Frenet4Data& f) {
    (void)curve;
    const auto Tp = differentiate_samples(f.s, f.T, 1);
    const auto N1p = differentiate_samples(f.s, f.N1, 1);
    const auto N2p = differentiate_samples(f.s, f.N2, 1);
    const auto N3p = differentiate_samples(f.s, f.N3, 1);

    Frenet4Residuals res;
    res.per_sample.reserve(f.retained_count());
    const double eT = f.eps_T, eN1 = f.eps_N1, e1 = f.eps_n1, e2 = f.eps_n2;
    const double et = eT * eN1;
    for (std::size_t i = f.first; i <= f.last; ++i) {
        const double kap = f.kappa[i], k = f.k[i], bt = f.bitorsion[i];
        const double r1 = norm(Tp.values[i] - eN1 * kap * f.N1[i]);
        const double r2 = norm(N1p.values[i] + et * eN1 * kap * f.T[i] - e1 * k * f.N2[i]);
        const double r3 = norm(N2p.values[i] + et * k * f.N1[i] - e1 * bt * f.N3[i]);
        const double r4 = norm(N3p.values[i] + e2 * bt * f.N2[i]);
        res.per_sample.push_back({r1, r2, r3, r4});
        for (int j = 0; j < 4; ++j) res.max[j] = std::max(res.max[j], res.per_sample.back()[j]);
    }
    return res;
}

std::array<Quat, 3> quaternionic_frame_lift(const SpatialFrame& fr, const Quat& T,
                                            const BasisSignature& sig, double tol) {
    auto check_unit = [&](const Quat& q, const char* what) {
        if (std::fabs(norm(q) - 1.0) > tol)
            throw NonUnitInput(std::string("frame_lift: ") + what + " is not unit");
    };
    check_unit(fr.t, "t");
    check_unit(fr.n1, "n1");
    check_unit(fr.n2, "n2");
    check_unit(T, "T");
    if (std::fabs(h_inner(fr.t, fr.n1)) > tol || std::fabs(h_inner(fr.t, fr.n2)) > tol ||
        std::fabs(h_inner(fr.n1, fr.n2)) > tol)
        throw NonUnitInput("frame_lift: spatial frame is not h-orthogonal");

    BasisSignature amb = sig;
    amb.ambient = Ambient::R24;
    const double eT = sign_of(quadratic_form(T));
    return {quat_mul(fr.t, T, amb) * eT, quat_mul(fr.n1, T, amb) * eT,
            quat_mul(fr.n2, T, amb) * eT};
}

} // namespace semiq
