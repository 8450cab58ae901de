#ifndef SEMIQ_QUAT_HPP
#define SEMIQ_QUAT_HPP

#include <array>
#include <cmath>
#include <iosfwd>

#include "semiq/errors.hpp"

namespace semiq {

enum class Ambient { R13, R24 };

// Signs of the three quaternionic units e1,e2,e3 in the basis product rules
//   e_i x e_i = -eps_i,
//   e_i x e_j = +eps_i*eps_j*e_k  (R13) / -eps_i*eps_j*e_k  (R24),  (ijk) cyclic.
//
// The default (-1,-1,+1) is the unique sign choice (up to the irrelevant global
// flip of all three) for which the scalar part of e_i x e_i equals the ambient
// R13 inner product diag(+1,+1,-1) of the unit, making the algebra associative
// and its norm multiplicative. The signs are configurable; (+1,+1,-1) yields a
// non-associative variant (see the diagnostics in the algebra tests).
struct BasisSignature {
    std::array<int, 3> eps{-1, -1, +1};
    Ambient ambient = Ambient::R13;

    static BasisSignature r13() { return BasisSignature{{-1, -1, +1}, Ambient::R13}; }
    static BasisSignature r24() { return BasisSignature{{-1, -1, +1}, Ambient::R24}; }

    bool valid() const {
        return (eps[0] == 1 || eps[0] == -1) && (eps[1] == 1 || eps[1] == -1) &&
               (eps[2] == 1 || eps[2] == -1);
    }
};

// q = q1*e1 + q2*e2 + q3*e3 + q4, scalar part S_q = q4, vector part (q1,q2,q3).
struct Quat {
    double q1 = 0, q2 = 0, q3 = 0, q4 = 0;

    constexpr Quat() = default;
    constexpr Quat(double a, double b, double c, double d) : q1(a), q2(b), q3(c), q4(d) {}

    static constexpr Quat e1() { return {1, 0, 0, 0}; }
    static constexpr Quat e2() { return {0, 1, 0, 0}; }
    static constexpr Quat e3() { return {0, 0, 1, 0}; }
    static constexpr Quat one() { return {0, 0, 0, 1}; }
    static constexpr Quat spatial(double a, double b, double c) { return {a, b, c, 0}; }

    double scalar_part() const { return q4; }
    bool finite() const {
        return std::isfinite(q1) && std::isfinite(q2) && std::isfinite(q3) && std::isfinite(q4);
    }

    Quat operator+(const Quat& o) const { return {q1 + o.q1, q2 + o.q2, q3 + o.q3, q4 + o.q4}; }
    Quat operator-(const Quat& o) const { return {q1 - o.q1, q2 - o.q2, q3 - o.q3, q4 - o.q4}; }
    Quat operator-() const { return {-q1, -q2, -q3, -q4}; }
    Quat operator*(double c) const { return {q1 * c, q2 * c, q3 * c, q4 * c}; }
    Quat operator/(double c) const { return {q1 / c, q2 / c, q3 / c, q4 / c}; }
    Quat& operator+=(const Quat& o) { q1 += o.q1; q2 += o.q2; q3 += o.q3; q4 += o.q4; return *this; }
    Quat& operator-=(const Quat& o) { q1 -= o.q1; q2 -= o.q2; q3 -= o.q3; q4 -= o.q4; return *this; }

    double& operator[](int i) { return i == 0 ? q1 : i == 1 ? q2 : i == 2 ? q3 : q4; }
    double operator[](int i) const { return i == 0 ? q1 : i == 1 ? q2 : i == 2 ? q3 : q4; }
};

inline Quat operator*(double c, const Quat& q) { return q * c; }

enum class Causal { Spacelike, Timelike, Null };

struct CausalCharacter {
    Causal tag = Causal::Null;
    int sign = 0;   // +1 spacelike, -1 timelike, 0 null
};

// Q(q) = q1^2 + q2^2 - q3^2 - q4^2, the signed form under the norm's radical.
double quadratic_form(const Quat& q);

// N(q) = sqrt(|Q(q)|).
double norm(const Quat& q);

// Polarization of the quadratic form: h(p,q) = p1q1 + p2q2 - p3q3 - p4q4.
double h_inner(const Quat& p, const Quat& q);

// Conjugate: scalar part kept, vector part negated.
Quat conjugate(const Quat& q);

CausalCharacter causal_character(const Quat& q, double tol = 1e-12);

// Quaternion product expanded per the basis rules of `sig`:
//   p x q = SpSq + g(Vp,Vq) + Sp Vq + Sq Vp + Vp ^ Vq,  g = diag(-eps).
Quat quat_mul(const Quat& p, const Quat& q, const BasisSignature& sig);

// (spatial, temporal) = (vector part, scalar part), both as quaternions.
std::pair<Quat, Quat> spatial_temporal_split(const Quat& q);

// Vector part of quat_mul for spatial arguments; throws NonSpatialInput if
// either argument has a scalar component above tol.
Quat cross_lorentz(const Quat& p, const Quat& q, const BasisSignature& sig,
                   double tol = 1e-9);

// Euclidean magnitude, used only for scale guards in numerics.
double euclid_norm(const Quat& q);

std::ostream& operator<<(std::ostream& os, const Quat& q);

} // namespace semiq

#endif
