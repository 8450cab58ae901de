#include <doctest.h>

#include <cmath>

#include "semiq/curve.hpp"
#include "semiq/numerics.hpp"

using namespace semiq;

namespace {

CurveSamples sample_curve(double lo, double hi, std::size_t n, auto&& fn,
                          Ambient amb = Ambient::R13) {
    CurveSamples c;
    c.sig = amb == Ambient::R13 ? BasisSignature::r13() : BasisSignature::r24();
    c.param_kind = ParamKind::Raw;
    c.params = uniform_grid(lo, hi, n);
    for (double u : c.params) c.points.push_back(fn(u));
    return c;
}

} // namespace

TEST_CASE("fornberg weights reproduce the classic uniform stencils") {
    const std::vector<double> x{-2, -1, 0, 1, 2};
    const auto w1 = fd_weights(0.0, x, 1);
    CHECK(w1[0] == doctest::Approx(1.0 / 12));
    CHECK(w1[1] == doctest::Approx(-8.0 / 12));
    CHECK(w1[2] == doctest::Approx(0.0));
    CHECK(w1[3] == doctest::Approx(8.0 / 12));
    CHECK(w1[4] == doctest::Approx(-1.0 / 12));
    const auto w2 = fd_weights(0.0, x, 2);
    CHECK(w2[0] == doctest::Approx(-1.0 / 12));
    CHECK(w2[1] == doctest::Approx(16.0 / 12));
    CHECK(w2[2] == doctest::Approx(-30.0 / 12));
}

TEST_CASE("cubic spline is exact on cubics and accurate on smooth data") {
    const auto x = uniform_grid(0.0, 2.0, 21);
    std::vector<double> y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        y[i] = 1.0 + x[i] - 2.0 * x[i] * x[i] + 0.5 * x[i] * x[i] * x[i];
    CubicSpline sp(x, y);
    for (double t : {0.05, 0.33, 1.29, 1.97}) {
        const double want = 1.0 + t - 2.0 * t * t + 0.5 * t * t * t;
        CHECK(sp(t) == doctest::Approx(want).epsilon(1e-12));
    }
    // sin on step 0.1: error bounded by ~h^4
    const auto xs = uniform_grid(0.0, 3.0, 31);
    std::vector<double> ys(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) ys[i] = std::sin(xs[i]);
    CubicSpline ss(xs, ys);
    double worst = 0;
    for (int i = 0; i < 300; ++i) {
        const double t = 3.0 * i / 299.0;
        worst = std::max(worst, std::fabs(ss(t) - std::sin(t)));
    }
    CHECK(worst < 2e-6);
}

TEST_CASE("differentiate: basic orders") {
    // constant curve -> zero derivative
    auto c0 = sample_curve(0, 1, 101, [](double) { return Quat::spatial(3, -1, 2); });
    for (const Quat& d : differentiate(c0, 1).values) CHECK(euclid_norm(d) < 1e-12);

    // linear curve -> exact e1 everywhere (also at the one-sided ends)
    auto c1 = sample_curve(0, 1, 101, [](double u) { return Quat::spatial(u, 0, 0); });
    for (const Quat& d : differentiate(c1, 1).values)
        CHECK(euclid_norm(d - Quat::e1()) < 1e-10);

    // circle second derivative at u=0: (-1, 0, 0) within 1e-6 at step 1e-2
    auto cc = sample_curve(-0.5, 0.5, 101,
                           [](double u) { return Quat::spatial(std::cos(u), std::sin(u), 0); });
    const auto d2 = differentiate(cc, 2);
    const std::size_t mid = 50;
    CHECK(cc.params[mid] == doctest::Approx(0.0));
    CHECK(euclid_norm(d2.values[mid] - Quat::spatial(-1, 0, 0)) < 1e-6);

    CHECK_THROWS_AS(differentiate(c1, 5), InvalidCurve);
    auto tiny = sample_curve(0, 1, 5, [](double u) { return Quat::spatial(u, 0, 0); });
    CHECK_THROWS_AS(differentiate(tiny, 3), InsufficientSamples);
}

TEST_CASE("differentiate: orders 3 and 4 are 4th-order accurate inside") {
    // h = 0.02: coarse enough that truncation dominates the 1/h^4 roundoff
    auto c = sample_curve(0, 2, 101, [](double u) {
        return Quat::spatial(std::sin(2 * u), std::cos(2 * u), 0);
    });
    const auto d3 = differentiate(c, 3);
    const auto d4 = differentiate(c, 4);
    double w3 = 0, w4 = 0;
    for (std::size_t i = 8; i + 8 < c.size(); ++i) {
        const double u = c.params[i];
        w3 = std::max(w3, euclid_norm(d3.values[i] -
                                      Quat::spatial(-8 * std::cos(2 * u),
                                                    8 * std::sin(2 * u), 0)));
        w4 = std::max(w4, euclid_norm(d4.values[i] -
                                      Quat::spatial(16 * std::sin(2 * u),
                                                    16 * std::cos(2 * u), 0)));
    }
    // a 4th-order method leaves ~h^4 |f^(7..8)| error, ~1e-6 at this step
    CHECK(w3 < 1e-4);
    CHECK(w4 < 1e-4);
}

TEST_CASE("reparametrization: identity on a unit-speed circle") {
    auto c = sample_curve(0, 6.28, 801, [](double u) {
        return Quat::spatial(std::cos(u), std::sin(u), 0);
    });
    const auto r = reparam_pseudo_arclength(c);
    CHECK(r.param_kind == ParamKind::PseudoArcLength);
    REQUIRE(r.size() == c.size());
    double worst = 0;
    for (std::size_t i = 0; i < r.size(); ++i)
        worst = std::max(worst, euclid_norm(r.points[i] - c.points[i]));
    CHECK(worst < 1e-8);
}

TEST_CASE("reparametrization: speed-2 circle becomes unit speed") {
    auto c = sample_curve(0, 3.14, 1001, [](double u) {
        return Quat::spatial(std::cos(2 * u), std::sin(2 * u), 0);
    });
    auto r = reparam_pseudo_arclength(c);
    CHECK(r.params.back() == doctest::Approx(2 * 3.14).epsilon(1e-9));
    const auto d1 = differentiate(r, 1);
    for (std::size_t i = 8; i + 8 < r.size(); ++i)
        CHECK(std::fabs(norm(d1.values[i]) - 1.0) < 1e-6);
}

TEST_CASE("reparametrization rejects null tangents") {
    // alpha(u) = (u, 0, u): Q(alpha') = 0
    auto c = sample_curve(0, 1, 101, [](double u) { return Quat::spatial(u, 0, u); });
    CHECK_THROWS_AS(reparam_pseudo_arclength(c), NullTangent);
}

TEST_CASE("resample") {
    auto c = sample_curve(0, 3.0, 301, [](double u) {
        return Quat::spatial(std::cos(u), std::sin(u), 0.5 * u);
    });
    // identical grid -> identical points
    auto same = resample(c, c.params);
    for (std::size_t i = 0; i < c.size(); ++i)
        CHECK(euclid_norm(same.points[i] - c.points[i]) < 1e-12);

    // linear curve, any grid -> exact
    auto lin = sample_curve(0, 1, 51, [](double u) { return Quat::spatial(u, 2 * u, -u); });
    auto lr = resample(lin, uniform_grid(0.037, 0.91, 40));
    for (std::size_t i = 0; i < lr.size(); ++i) {
        const double u = lr.params[i];
        CHECK(euclid_norm(lr.points[i] - Quat::spatial(u, 2 * u, -u)) < 1e-12);
    }

    // circle at step 1e-2 downsampled 2x: error < 1e-6 against analytic values
    auto circ = sample_curve(0, 3.0, 301, [](double u) {
        return Quat::spatial(std::cos(u), std::sin(u), 0);
    });
    auto down = resample(circ, uniform_grid(0.005, 2.995, 150));
    double worst = 0;
    for (std::size_t i = 0; i < down.size(); ++i) {
        const double u = down.params[i];
        worst = std::max(worst, euclid_norm(down.points[i] -
                                            Quat::spatial(std::cos(u), std::sin(u), 0)));
    }
    CHECK(worst < 1e-6);

    CHECK_THROWS_AS(resample(c, {-0.5, 0.5}), OutOfRange);
}

TEST_CASE("curve validation") {
    CurveSamples c;
    c.sig = BasisSignature::r13();
    c.params = {0, 1, 2, 3};
    c.points.resize(4);
    CHECK_THROWS_AS(c.validate(), InsufficientSamples);
    c.params = {0, 1, 1, 2, 3};
    c.points.resize(5);
    CHECK_THROWS_AS(c.validate(), InvalidCurve);
}
