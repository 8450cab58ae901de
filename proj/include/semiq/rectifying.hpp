#ifndef SEMIQ_RECTIFYING_HPP
#define SEMIQ_RECTIFYING_HPP

#include "semiq/frenet3.hpp"
#include "semiq/frenet4.hpp"

namespace semiq {

// -------------------------------- 3D checks --------------------------------

// Position decomposition alpha = lambda t + (defect) n1 + mu n2 on the
// retained range; the curve is rectifying iff the defect vanishes.
struct Decomposition3 {
    std::vector<double> s, lambda, mu, h_alpha_n1;
    double defect_max = 0;
};
Decomposition3 decompose_position_3d(const CurveSamples& curve, const Frenet3Data& frame);

struct QuadraticFitCheck {      // rho^2 = |eps s^2 + c1 s + c2|
    double c1 = 0, c2 = 0, residual = 0;
    bool pass = false;
};
struct TangentialFitCheck {     // h(., tangent) = eps s + c
    double c = 0, residual = 0;
    bool pass = false;
};
struct NormalLengthCheck {      // N(normal component) constant, rho non-constant
    double normal_length = 0, stddev = 0, rho_relative_range = 0;
    bool pass = false;
};
struct BinormalConstancyCheck { // h(alpha, n2) constant, torsion non-vanishing
    double mean = 0, stddev = 0, min_abs_torsion = 0;
    bool pass = false;
};
struct RatioLinearityCheck {    // r/k = c1 s + c2, c1 != 0
    double c1 = 0, c2 = 0, residual = 0;
    bool pass = false;
};

struct RectifyingReport3 {
    QuadraticFitCheck distance;       // statement (i)
    TangentialFitCheck tangential;    // statement (ii)
    NormalLengthCheck normal;         // statement (iii)
    BinormalConstancyCheck binormal;  // statement (iv)
    RatioLinearityCheck ratio;
    double h_alpha_n1_max = 0;
    double normal_length = 0;
    bool verdict = false;   // defect small AND ratio linear with non-zero slope
};

RectifyingReport3 check_thm32(const CurveSamples& curve, const Frenet3Data& frame,
                              double tol);
RatioLinearityCheck check_ratio_linearity(const Frenet3Data& frame, double tol);
RectifyingReport3 analyze_rectifying_3d(const CurveSamples& curve, const Frenet3Data& frame,
                                        double tol);

// -------------------------------- 4D checks --------------------------------

// lambda = s + c, mu = eps_T kappa (s+c)/k, nu = mu'/(eps_n2 bt), evaluated on
// an inner slice of the retained range (one more differentiation layer).
struct Coefficients4 {
    std::vector<double> s, lambda, mu, nu;
    std::size_t first = 0;    // index into the frame arrays of s.front()
};
Coefficients4 compute_rectifying_coefficients_4d(const Frenet4Data& frame, double c,
                                                 double curvature_tol = 1e-9);

struct Eq43Check {
    std::vector<double> s, value;
    double max_abs = 0;
    double c = 0;
    std::size_t first = 0;    // index into the frame arrays of s.front()
};
Eq43Check check_eq43(const Frenet4Data& frame, double c, double curvature_tol = 1e-9);

struct BinormalFormulaCheck {   // statement (iv) + the eps_n1 mu^2 + eps_n2 nu^2 constant
    double n2_residual = 0, n3_residual = 0;
    double a_squared = 0, a_squared_stddev = 0;
    bool pass = false;
};

struct RectifyingReport4 {
    double c_estimate = 0;
    QuadraticFitCheck distance;        // statement (i)
    TangentialFitCheck tangential;     // statement (ii)
    NormalLengthCheck normal;          // statement (iii)
    BinormalFormulaCheck binormal;     // statement (iv)
    double eq43_max = 0;
    bool eq43_pass = false;
    double reconstruction_residual_max = 0;
    double h_beta_n1_max = 0;
    bool verdict = false;   // reconstruction and defect below tol
};

double estimate_shift_c(const CurveSamples& curve, const Frenet4Data& frame);
RectifyingReport4 check_thm44(const CurveSamples& curve, const Frenet4Data& frame,
                              double tol, double c);
RectifyingReport4 analyze_rectifying_4d(const CurveSamples& curve, const Frenet4Data& frame,
                                        double tol);

} // namespace semiq

#endif
