#include "semiq/quat.hpp"

#include <cmath>
#include <ostream>
#include <utility>

namespace semiq {

double quadratic_form(const Quat& q) {
    return q.q1 * q.q1 + q.q2 * q.q2 - q.q3 * q.q3 - q.q4 * q.q4;
}

double norm(const Quat& q) { return std::sqrt(std::fabs(quadratic_form(q))); }

double h_inner(const Quat& p, const Quat& q) {
    return p.q1 * q.q1 + p.q2 * q.q2 - p.q3 * q.q3 - p.q4 * q.q4;
}

Quat conjugate(const Quat& q) { return {-q.q1, -q.q2, -q.q3, q.q4}; }

CausalCharacter causal_character(const Quat& q, double tol) {
    const double Q = quadratic_form(q);
    if (Q > tol) return {Causal::Spacelike, +1};
    if (Q < -tol) return {Causal::Timelike, -1};
    return {Causal::Null, 0};
}

Quat quat_mul(const Quat& p, const Quat& q, const BasisSignature& sig) {
    const double s = sig.ambient == Ambient::R13 ? 1.0 : -1.0;
    const double e1 = sig.eps[0], e2 = sig.eps[1], e3 = sig.eps[2];

    // g(Vp,Vq) = sum_i scalar(e_i x e_i) p_i q_i = -sum_i eps_i p_i q_i
    const double g = -(e1 * p.q1 * q.q1 + e2 * p.q2 * q.q2 + e3 * p.q3 * q.q3);

    // Vp ^ Vq from e_i x e_j = s*eps_i*eps_j*e_k, (ijk) cyclic, antisymmetric.
    const double w1 = s * e2 * e3 * (p.q2 * q.q3 - p.q3 * q.q2);
    const double w2 = s * e3 * e1 * (p.q3 * q.q1 - p.q1 * q.q3);
    const double w3 = s * e1 * e2 * (p.q1 * q.q2 - p.q2 * q.q1);

    return {p.q4 * q.q1 + q.q4 * p.q1 + w1,
            p.q4 * q.q2 + q.q4 * p.q2 + w2,
            p.q4 * q.q3 + q.q4 * p.q3 + w3,
            p.q4 * q.q4 + g};
}

std::pair<Quat, Quat> spatial_temporal_split(const Quat& q) {
    return {Quat{q.q1, q.q2, q.q3, 0.0}, Quat{0.0, 0.0, 0.0, q.q4}};
}

Quat cross_lorentz(const Quat& p, const Quat& q, const BasisSignature& sig, double tol) {
    if (std::fabs(p.q4) > tol || std::fabs(q.q4) > tol)
        throw NonSpatialInput("cross_lorentz: arguments must be spatial (q4 = 0)");
    Quat r = quat_mul(p, q, sig);
    r.q4 = 0.0;
    return r;
}

double euclid_norm(const Quat& q) {
    return std::sqrt(q.q1 * q.q1 + q.q2 * q.q2 + q.q3 * q.q3 + q.q4 * q.q4);
}

std::ostream& operator<<(std::ostream& os, const Quat& q) {
    return os << "[" << q.q1 << ", " << q.q2 << ", " << q.q3 << ", " << q.q4 << "]";
}

} // namespace semiq
