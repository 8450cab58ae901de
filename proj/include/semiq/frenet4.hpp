#ifndef SEMIQ_FRENET4_HPP
#define SEMIQ_FRENET4_HPP

#include <array>

#include "semiq/curve.hpp"
#include "semiq/frenet3.hpp"

namespace semiq {

// Frenet data for a curve in R24:
//   T'  =  eps_N1 kappa N1
//   N1' = -eps_t eps_N1 kappa T + eps_n1 k N2
//   N2' = -eps_t k N1 + eps_n1 bt N3
//   N3' = -eps_n2 bt N2
// with h(T,T) = eps_T, h(N1,N1) = eps_N1, h(N2,N2) = eps_n1 eps_T,
// h(N3,N3) = eps_n2 eps_T. Expanding N1' in the frame forces
// eps_t = eps_T*eps_N1, so the bitorsion bt is measured as one atomic
// quantity (the N3-component of N2').
struct Frenet4Data {
    std::vector<double> s;
    std::vector<Quat> T, N1, N2, N3;
    std::vector<double> kappa, k, bitorsion;
    int eps_T = 0, eps_N1 = 0, eps_n1 = 0, eps_n2 = 0;
    std::size_t first = 0, last = 0;

    int eps_t() const { return eps_T * eps_N1; }
    std::size_t retained_count() const { return last - first + 1; }
};

struct Frenet4Options {
    double frame_tol = 1e-6;
    double unit_speed_tol = 1e-4;
    double degeneracy_tol = 1e-6;
    double null_tol = 1e-6;
    int extra_margin = 2;
};

Frenet4Data frenet4_apparatus(const CurveSamples& curve, const Frenet4Options& opt = {});

struct Frenet4Residuals {
    std::vector<std::array<double, 4>> per_sample;
    std::array<double, 4> max{0, 0, 0, 0};
};
Frenet4Residuals frenet4_residuals(const CurveSamples& curve, const Frenet4Data& frame);

// One spatial frame sample for the quaternionic lift.
struct SpatialFrame {
    Quat t, n1, n2;
};

// N1 = eps_T (t x T), N2 = eps_T (n1 x T), N3 = eps_T (n2 x T), products taken
// in the R24 ambient with the signature's eps. Inputs must be unit and the
// spatial triple h-orthonormal; throws NonUnitInput otherwise.
std::array<Quat, 3> quaternionic_frame_lift(const SpatialFrame& frame, const Quat& T,
                                            const BasisSignature& sig, double tol = 1e-9);

} // namespace semiq

#endif
