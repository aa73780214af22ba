#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <widthlab/constants.hpp>
#include <widthlab/spaceform.hpp>

#include <cmath>
#include <stdexcept>

using namespace widthlab;

TEST_CASE("sn matches closed forms in all three curvature regimes") {
    CHECK(sn({0.0}, 0.7) == doctest::Approx(0.7).epsilon(1e-15));
    CHECK(sn({1.0}, pi / 6.0) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(sn({4.0}, pi / 4.0) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(sn({-1.0}, 1.3) == doctest::Approx(std::sinh(1.3)).epsilon(1e-14));
    CHECK(sn({-4.0}, 0.5) ==
          doctest::Approx(0.5 * std::sinh(1.0)).epsilon(1e-14));

    CHECK(sn_prime({1.0}, pi / 3.0) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(sn_prime({-1.0}, 0.8) ==
          doctest::Approx(std::cosh(0.8)).epsilon(1e-14));
    CHECK(sn_prime({0.0}, 123.0) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("sn is continuous across the small curvature series branch") {
    // scan K through zero: consecutive values move by the K-derivative
    // (about r^3/6 per unit, so ~1.2e-9 per step); a branch jump would be
    // orders of magnitude larger
    const double r = 0.9;
    double prev = sn({-1e-6}, r);
    for (double K = -1e-6 + 1e-8; K <= 1e-6; K += 1e-8) {
        const double cur = sn({K}, r);
        CHECK(std::abs(cur - prev) < 1e-8);
        prev = cur;
    }
    // first order in K: sn = r - K r^3/6 + O(K^2)
    CHECK(sn({1e-7}, r) ==
          doctest::Approx(r - 1e-7 * r * r * r / 6.0).epsilon(1e-12));
}

TEST_CASE("ball parameter validation rejects nonsense") {
    SpaceFormBall good{3, 2, 1.0, {1.0}};
    CHECK_NOTHROW(good.validate());

    SpaceFormBall bad_k{3, 3, 1.0, {0.0}};
    CHECK_THROWS_AS(bad_k.validate(), std::invalid_argument);

    SpaceFormBall bad_R{3, 2, -1.0, {0.0}};
    CHECK_THROWS_AS(bad_R.validate(), std::invalid_argument);

    SpaceFormBall past_pole{3, 2, pi + 0.1, {1.0}};
    CHECK_THROWS_AS(past_pole.validate(), std::invalid_argument);
}

TEST_CASE("ball areas reproduce closed forms") {
    const double R = 0.8;

    auto flat = WarpedProfile::space_form({0.0}, R);
    CHECK(ball_area(1, flat) == doctest::Approx(2.0 * R).epsilon(1e-12));
    CHECK(ball_area(2, flat) == doctest::Approx(pi * R * R).epsilon(1e-10));
    CHECK(ball_area(3, flat) ==
          doctest::Approx(4.0 * pi * R * R * R / 3.0).epsilon(1e-10));

    // spherical cap: 2 pi (1 - cos R) for k = 2, K = 1
    auto round = WarpedProfile::space_form({1.0}, R);
    CHECK(ball_area(2, round) ==
          doctest::Approx(2.0 * pi * (1.0 - std::cos(R))).epsilon(1e-10));

    // hyperbolic disk: 2 pi (cosh R - 1)
    auto hyp = WarpedProfile::space_form({-1.0}, R);
    CHECK(ball_area(2, hyp) ==
          doctest::Approx(2.0 * pi * (std::cosh(R) - 1.0)).epsilon(1e-10));

    // hemisphere has half the sphere area, each k
    auto hemi = WarpedProfile::space_form({1.0}, pi / 2.0);
    for (int k = 1; k <= 3; ++k) {
        CHECK(ball_area(k, hemi) ==
              doctest::Approx(0.5 * beta(k)).epsilon(1e-9));
    }
}

TEST_CASE("equatorial slice radius against frozen references") {
    // frozen with an independent multiprecision evaluation of the
    // slice geometry (distance from slice centre to ball boundary)
    CHECK(slice_radius(1.0, {1.0}, 0.5) ==
          doctest::Approx(0.90755887468587701).epsilon(1e-13));
    CHECK(slice_radius(1.3, {-1.0}, 0.7) ==
          doctest::Approx(1.0227665390792459).epsilon(1e-13));
    CHECK(slice_radius(1.0, {0.5}, 0.4) ==
          doctest::Approx(0.92942980191595847).epsilon(1e-13));

    // flat space: plain Pythagoras
    CHECK(slice_radius(1.0, {0.0}, 0.6) ==
          doctest::Approx(0.8).epsilon(1e-13));

    // hemisphere: every equatorial slice is a full great hemisphere slice
    for (double t = 0.0; t <= 1.2; t += 0.3) {
        CHECK(slice_radius(pi / 2.0, {1.0}, t) ==
              doctest::Approx(pi / 2.0).epsilon(1e-12));
    }

    // slices shrink to a point at the boundary
    CHECK(slice_radius(1.0, {1.0}, 1.0) == doctest::Approx(0.0));
    CHECK(slice_radius(1.3, {-1.0}, 1.3) < 1e-7);
}

TEST_CASE("origin smoothness gate accepts space forms, rejects rough warps") {
    for (double K : {-1.0, 0.0, 1.0}) {
        auto profile = WarpedProfile::space_form({K}, 1.0);
        auto rep = check_dagger(profile);
        CHECK(rep.pass);
        CHECK(rep.h_at_zero == doctest::Approx(0.0).epsilon(1e-12));
    }
    // odd analytic warp: h(r) = r + r^3 extends smoothly and passes
    auto odd = WarpedProfile::from_function(
        [](double r) { return r + r * r * r; }, 1.0);
    CHECK(check_dagger(odd).pass);
    // h(r) = r + r^2 has h(sqrt(u))/sqrt(u) = 1 + sqrt(u): the second
    // difference diverges at the origin and the gate must refuse it
    auto rough = WarpedProfile::from_function(
        [](double r) { return r + r * r; }, 1.0);
    CHECK_FALSE(check_dagger(rough).pass);
    // nonzero value at the centre is rejected outright
    auto shifted = WarpedProfile::from_function(
        [](double r) { return r + 0.1; }, 1.0);
    CHECK_FALSE(check_dagger(shifted).pass);
}
