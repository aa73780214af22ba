#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <widthlab/constants.hpp>
#include <widthlab/ode.hpp>
#include <widthlab/quadrature.hpp>

#include <Eigen/Dense>

#include <cmath>

using namespace widthlab;

TEST_CASE("adaptive quadrature hits polynomial and transcendental targets") {
    auto sq = [](double x) { return x * x; };
    auto r1 = quad::integrate(sq, 0.0, 1.0);
    CHECK(r1.value == doctest::Approx(1.0 / 3.0).epsilon(1e-14));

    auto r2 = quad::integrate([](double x) { return std::sin(x); }, 0.0, pi);
    CHECK(std::abs(r2.value - 2.0) < 1e-12);

    auto r3 = quad::integrate([](double x) { return std::exp(x); }, 0.0, 1.0);
    CHECK(std::abs(r3.value - (std::exp(1.0) - 1.0)) < 1e-12);
    CHECK(r3.converged);
}

TEST_CASE("quadrature subdivides a stiff peak and reports convergence") {
    // narrow Lorentzian with scale a = 1e-2: the integral over [-5a, 5a]
    // is 2 atan(5)
    auto f = [](double x) { return 1.0 / (1e-4 + x * x) * 1e-2; };
    const double exact = 2.0 * std::atan(5.0);
    const double got = quad::integrate_or_throw(f, -0.05, 0.05, 1e-11);
    CHECK(std::abs(got - exact) < 1e-9);
}

TEST_CASE("quadrature integrates vector valued curves componentwise") {
    auto curve = [](double t) {
        return Eigen::Vector2d(std::cos(t), std::sin(t));
    };
    auto r = quad::integrate(curve, 0.0, pi / 2.0);
    CHECK(std::abs(r.value.x() - 1.0) < 1e-12);
    CHECK(std::abs(r.value.y() - 1.0) < 1e-12);
}

TEST_CASE("ode integrator reproduces exponential and sine flows") {
    auto growth = [](double, double y) { return y; };
    const double e1 = ode::integrate(growth, 0.0, 1.0, 1.0);
    CHECK(std::abs(e1 - std::exp(1.0)) < 1e-8);

    auto cosine = [](double t, double) { return std::cos(t); };
    const double s = ode::integrate(cosine, 0.0, 0.0, 2.0);
    CHECK(std::abs(s - std::sin(2.0)) < 1e-8);

    // backwards in time as well
    const double back = ode::integrate(growth, 1.0, std::exp(1.0), 0.0);
    CHECK(std::abs(back - 1.0) < 1e-8);
}

TEST_CASE("unit ball and sphere measures") {
    CHECK(alpha(1) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(alpha(2) == doctest::Approx(pi).epsilon(1e-15));
    CHECK(alpha(3) == doctest::Approx(4.188790204786391).epsilon(1e-14));
    CHECK(beta(1) == doctest::Approx(2.0 * pi).epsilon(1e-15));
    CHECK(beta(2) == doctest::Approx(4.0 * pi).epsilon(1e-15));
    CHECK(beta(3) == doctest::Approx(19.739208802178717).epsilon(1e-14));
    // beta(k) = (k+1) * alpha(k+1): sphere bounds the ball one dimension up
    for (int k = 1; k <= 5; ++k) {
        CHECK(beta(k) == doctest::Approx((k + 1) * alpha(k + 1)).epsilon(1e-12));
    }
}
