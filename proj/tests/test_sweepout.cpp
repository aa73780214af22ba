#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <widthlab/constants.hpp>
#include <widthlab/spaceform.hpp>
#include <widthlab/sweepout.hpp>

#include <cmath>

using namespace widthlab;

TEST_CASE("conformal chart radius maps invert each other") {
    for (double K : {-1.0, 0.0, 0.5}) {
        for (double r = 0.05; r <= 1.2; r += 0.12) {
            const double c = chart_radius_of({K}, r);
            CHECK(geodesic_radius_of({K}, c) == doctest::Approx(r).epsilon(1e-12));
        }
    }
    // closed forms: 2 tan(r/2) on the sphere, 2 tanh(r/2) hyperbolic
    CHECK(chart_radius_of({1.0}, 1.0) ==
          doctest::Approx(2.0 * std::tan(0.5)).epsilon(1e-12));
    CHECK(chart_radius_of({-1.0}, 1.0) ==
          doctest::Approx(2.0 * std::tanh(0.5)).epsilon(1e-12));
    CHECK(chart_radius_of({0.0}, 0.77) == doctest::Approx(0.77).epsilon(1e-15));
}

TEST_CASE("chord family starts at the diameter bound") {
    for (double K : {-1.0, 0.0, 0.5}) {
        auto fam = initial_sweepout({K}, 1.0, InitialFamily::Chords, 21, 32);
        CHECK(fam.max_length() == doctest::Approx(2.0).epsilon(1e-6));
        // every individual chord is at most a diameter
        for (int i = 0; i < int(fam.s.size()); ++i) {
            CHECK(fam.curve_length(i) <= 2.0 + 1e-9);
        }
    }
}

TEST_CASE("equatorial slice family peaks at the central slice") {
    SpaceFormBall ball{3, 2, 1.0, {1.0}};
    auto fam = equatorial_family(ball, 41);
    REQUIRE(fam.t.size() == 41);
    const int mid = 20;
    double max_area = 0.0;
    int argmax = -1;
    for (int i = 0; i < 41; ++i) {
        // symmetric in t -> -t
        CHECK(fam.area[i] ==
              doctest::Approx(fam.area[40 - i]).epsilon(1e-10));
        if (fam.area[i] > max_area) {
            max_area = fam.area[i];
            argmax = i;
        }
    }
    CHECK(argmax == mid);
    CHECK(width_upper_bound(ball) == doctest::Approx(max_area).epsilon(1e-12));
    // central slice is a geodesic ball of the full radius
    auto profile = WarpedProfile::space_form(ball.K, ball.R);
    CHECK(max_area == doctest::Approx(ball_area(2, profile)).epsilon(1e-10));
}

TEST_CASE("curve shortening pulls a bulged family back to diameter scale") {
    SpaceFormBall disk{2, 1, 1.0, {0.0}};
    auto init = initial_sweepout({0.0}, 1.0, InitialFamily::Bulged, 41, 48, 0.35, 5);
    CHECK(init.max_length() > 2.0 * 1.02);

    auto result = tighten_1sweepout(disk, init, 900);
    CHECK(result.trace_monotone);
    CHECK(result.covering_ok);
    CHECK(result.max_length_trace.back() < init.max_length());
    CHECK(result.family.max_length() < 2.0 * 1.05);

    const std::string csv = trace_to_csv(result.max_length_trace);
    CHECK(csv.find(',') != std::string::npos);
    CHECK(csv.find("step") != std::string::npos);
}
