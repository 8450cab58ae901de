#ifndef SEMIQ_FRENET3_HPP
#define SEMIQ_FRENET3_HPP

#include <array>

#include "semiq/curve.hpp"

namespace semiq {

// Serret-Frenet data for a spatial curve in R13:
//   t' = eps_n1 k n1,  n1' = -eps_t k t + eps_n1 r n2,  n2' = -eps_n2 r n1,
// h(t,t) = eps_t, h(n1,n1) = eps_n1, h(n2,n2) = eps_n2, k = N(t') > 0.
//
// All arrays are full curve length; values are trustworthy on the retained
// range [first, last] (boundary stencils and chained differentiation are
// excluded from it).
struct Frenet3Data {
    std::vector<double> s;
    std::vector<Quat> t, n1, n2;
    std::vector<double> k, r;
    int eps_t = 0, eps_n1 = 0, eps_n2 = 0;
    std::size_t first = 0, last = 0;

    std::size_t retained_count() const { return last - first + 1; }
};

struct Frenet3Options {
    double frame_tol = 1e-6;       // orthonormality
    double unit_speed_tol = 1e-4;  // |N(alpha') - 1| on retained samples
    double degeneracy_tol = 1e-6;  // k below this is a degenerate frame
    double null_tol = 1e-6;        // |Q|/|.|^2 below this is a null direction
    double spatial_tol = 1e-9;
    int extra_margin = 2;          // retained margin beyond the stencil chain
};

Frenet3Data frenet3_apparatus(const CurveSamples& curve, const Frenet3Options& opt = {});

// Norms of the three Frenet defects at each retained sample, plus the max.
struct Frenet3Residuals {
    std::vector<std::array<double, 3>> per_sample;
    std::array<double, 3> max{0, 0, 0};
};
Frenet3Residuals frenet3_residuals(const CurveSamples& curve, const Frenet3Data& frame);

} // namespace semiq

#endif
