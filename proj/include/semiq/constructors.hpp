#ifndef SEMIQ_CONSTRUCTORS_HPP
#define SEMIQ_CONSTRUCTORS_HPP

#include <functional>
#include <string>

#include "semiq/curve.hpp"

namespace semiq {

// ---------------------------------------------------------------------------
// base curves on the pseudosphere S_1^2(1) and pseudohyperbolic space H_0^2(1)
// ---------------------------------------------------------------------------

enum class SphereFamilyTag { S12Latitude, S12Timelike, H02Spacelike };

// Unit-speed curves with the stated position/velocity h-signs:
//   S12Latitude:  y = (r cos(t/r), r sin(t/r), b), r = sqrt(1+b^2);  h(y,y)=+1, h(y',y')=+1
//   S12Timelike:  y = (sqrt(1-b^2), b cosh(t/b), b sinh(t/b)), 0<b<1; h(y,y)=+1, h(y',y')=-1
//   H02Spacelike: y = (b cos(t/b), b sin(t/b), sqrt(1+b^2));          h(y,y)=-1, h(y',y')=+1
struct SphereCurveFamily {
    SphereFamilyTag tag = SphereFamilyTag::S12Latitude;
    double b = 1.0;       // shape parameter, > 0 (great circles b ~ 0 rejected)
    double phase = 0.0;

    Quat position(double t) const;
    int h_yy() const;     // sign of h(y,y)
    int h_ypyp() const;   // sign of h(y',y')
    void validate() const;
};

CurveSamples base_sphere_curve(const SphereCurveFamily& family, double t_lo, double t_hi,
                               std::size_t n_samples);

// alpha(t) = y(t) * a / f(t) with f = cos, sinh or cosh. Throws PoleInRange when
// the range comes within `pole_margin` of a zero of f, CausalMismatch when the
// base family's sign pattern does not fit the case.
enum class ScalingCase { Cos, Sinh, Cosh };

CurveSamples construct_scaled_sphere_curve(ScalingCase c, const SphereCurveFamily& family,
                                           double a, double t_lo, double t_hi,
                                           std::size_t n_samples, double pole_margin = 0.1);

// ---------------------------------------------------------------------------
// curvature profiles
// ---------------------------------------------------------------------------

struct EpsConfig3 {
    int eps_t = +1, eps_n1 = +1, eps_n2 = -1;   // standard frame e1,e2,e3
};
struct EpsConfig4 {
    int eps_T = +1, eps_N1 = +1, eps_n1 = -1, eps_n2 = -1;
    int E() const { return eps_n1 * eps_n2; }
    // Standard frames: E=+1 -> (e1,e2,e3,1); E=-1 -> (e1,e3,1,e2).
    static EpsConfig4 for_product(int E);
};

struct Profile3 {
    std::function<double(double)> k, r;
    EpsConfig3 eps;
    std::string description;
};

struct Profile4 {
    std::function<double(double)> kappa, k, bitorsion;
    std::function<double(double)> bitorsion_prime;   // analytic, may be empty
    EpsConfig4 eps;
    double c = 0.0;            // the (s+c) shift the family was built with
    std::string description;
};

Profile3 profile3_constant(double k, double r, EpsConfig3 eps = {});
Profile3 profile3_linear_ratio(double k, double c1, double c2, EpsConfig3 eps = {});

Profile4 profile4_constant(double kappa, double k, double bt, EpsConfig4 eps);

// Case 1: kappa, k constant; bt = 1/sqrt(-E s^2 - 2E c s - 2 c1), E = eps_n1*eps_n2.
// The radicand must stay positive on [s_lo, s_hi] (otherwise the closed form
// solves the defining ODE with the wrong sign) -- SingularOnRange otherwise.
Profile4 profile4_case1(double c, double c1, double kappa0, double k0, EpsConfig4 eps,
                        double s_lo, double s_hi, double tol = 1e-6);

// Case 2: k, bt constant; kappa(s) = (c1 F(bt s) + c2 F'(bt s)) / (s+c),
// F = cos for E=+1, cosh for E=-1. Case 3: kappa, bt constant;
// k(s) = kappa0 (s+c) / (c1 F(bt s) + c2 F'(bt s)).
Profile4 profile4_case2(double c, double c1, double c2, double k0, double bt0,
                        EpsConfig4 eps, double s_lo, double s_hi, double tol = 1e-6);
Profile4 profile4_case3(double c, double c1, double c2, double kappa0, double bt0,
                        EpsConfig4 eps, double s_lo, double s_hi, double tol = 1e-6);

// ---------------------------------------------------------------------------
// prescribed-curvature integration (classical RK4, fixed step)
// ---------------------------------------------------------------------------

struct Frame3 {
    Quat t = Quat::e1(), n1 = Quat::e2(), n2 = Quat::e3();
};
struct Frame4 {
    Quat T = Quat::e1(), N1 = Quat::e2(), N2 = Quat::e3(), N3 = Quat::one();
    static Frame4 standard_for(const EpsConfig4& eps);
};

struct IntegrateOptions {
    double step = 1e-3;
    int output_stride = 1;      // keep every m-th sample
    bool renormalize = false;   // project the frame back to h-orthonormality each step
    double frame_tol = 1e-10;   // initial-frame validation
};

// max |h(v_i, v_j) - table value| seen over the in-flight frame
struct IntegrationDiagnostics {
    double max_metric_drift = 0;
};

CurveSamples integrate_frenet3(const Profile3& profile, const Frame3& init,
                               const Quat& position0, double s_lo, double s_hi,
                               const IntegrateOptions& opt = {},
                               IntegrationDiagnostics* diag = nullptr);

CurveSamples integrate_frenet4(const Profile4& profile, const Frame4& init,
                               const Quat& position0, double s_lo, double s_hi,
                               const IntegrateOptions& opt = {},
                               IntegrationDiagnostics* diag = nullptr);

// Initial positions on the rectifying locus.
Quat rectifying_start_3d(const Profile3& profile, const Frame3& init, double s0);
Quat rectifying_start_4d(const Profile4& profile, const Frame4& init, double s0);

// ---------------------------------------------------------------------------
// compact specifier strings (CLI surface)
// ---------------------------------------------------------------------------

// "latitude:b=1", "s12-timelike:b=0.6", "h02:b=1"
SphereCurveFamily parse_family(const std::string& spec);
// "const3:k=1,r=0.5" | "linear3:k=1,c1=1,c2=0"
Profile3 parse_profile3(const std::string& spec);
// "const4:kappa=1,k=1,bt=1,eps=1" | "thm43-1:c=0,c1=-0.5[,kappa=,k=,eps=]"
// | "thm43-2:c=..,c1=..,c2=..[,k=,bt=,eps=]" | "thm43-3:..[,kappa=,bt=,eps=]"
Profile4 parse_profile4(const std::string& spec, double s_lo, double s_hi);

} // namespace semiq

#endif
