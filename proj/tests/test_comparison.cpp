#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <widthlab/comparison.hpp>
#include <widthlab/constants.hpp>
#include <widthlab/spaceform.hpp>

#include <cmath>
#include <stdexcept>

using namespace widthlab;

TEST_CASE("curves (k = 1) always map by arc length") {
    auto map = solve_f(1, {-0.7}, {0.3}, 1.2);
    CHECK(map.R1 == doctest::Approx(1.2).epsilon(1e-12));
    CHECK(map.min_fp == doctest::Approx(1.0).epsilon(1e-12));
    for (double s = 0.0; s <= 1.2; s += 0.1) {
        CHECK(map.eval_f(s) == doctest::Approx(s).epsilon(1e-11));
    }
}

TEST_CASE("flat disk to round sphere matches the closed form map") {
    // area matching pi r^2 = 2 pi (1 - cos f) gives f = arccos(1 - r^2/2)
    auto map = solve_f(2, {0.0}, {1.0}, 1.0);
    CHECK(map.R1 == doctest::Approx(1.0471975511965977).epsilon(1e-9));
    for (int i = 1; i <= 20; ++i) {
        const double r = i / 20.0;
        const double exact = std::acos(1.0 - 0.5 * r * r);
        CHECK(std::abs(map.eval_f(r) - exact) < 1e-8);
        const double exact_fp = 1.0 / std::sqrt(1.0 - 0.25 * r * r);
        CHECK(std::abs(map.eval_fp(r) - exact_fp) < 1e-7);
        CHECK(std::abs(integral_residual(map, r)) < 1e-9);
    }
    CHECK(map.min_fp >= 1.0 - 1e-12);
}

TEST_CASE("derived curvature constants") {
    // cap-to-hemisphere: for curves the constant is (2 alpha / pi)^2
    CHECK(case2_curvature(1.0, 1).K ==
          doctest::Approx(4.0 / (pi * pi)).epsilon(1e-12));
    // for surfaces the sine integral gives 1 - cos(alpha)
    CHECK(case2_curvature(1.0, 2).K ==
          doctest::Approx(1.0 - std::cos(1.0)).epsilon(1e-11));
    // hyperbolic disk of radius 1 to hemisphere: 1 / (cosh 1 - 1)
    CHECK(case3_curvature(1.0, 2).K ==
          doctest::Approx(1.8413471884155846).epsilon(1e-11));
    // curves: (pi / 2R)^2
    CHECK(case3_curvature(2.0, 1).K ==
          doctest::Approx(pi * pi / 16.0).epsilon(1e-11));

    CHECK_THROWS_AS(case2_curvature(2.0, 2), std::invalid_argument);
    CHECK_THROWS_AS(case3_curvature(-1.0, 2), std::invalid_argument);
}

TEST_CASE("orientation guard: round to flat contracts and is rejected") {
    // going from curvature 1 down to 0 forces f' = cos(r/2) < 1
    CHECK_THROWS_AS(solve_f(2, {1.0}, {0.0}, 1.0), std::invalid_argument);

    auto rev = solve_f(2, {1.0}, {0.0}, 1.0, /*allow_reversed=*/true);
    CHECK(rev.min_fp < 1.0);
    CHECK(rev.min_fp == doctest::Approx(std::cos(0.5)).epsilon(1e-6));
    CHECK(rev.eval_f(1.0) ==
          doctest::Approx(2.0 * std::sin(0.5)).epsilon(1e-8));
}

TEST_CASE("contraction certificate for the flat to round map") {
    auto map = solve_f(2, {0.0}, {1.0}, 1.0, false, 4097);
    auto h0 = WarpedProfile::space_form({0.0}, 1.0);
    auto h1 = WarpedProfile::space_form({1.0}, map.R1);
    auto rep = verify_contraction(h0, h1, map);
    CHECK(rep.pass);
    CHECK(rep.max_violation_cond1 <= 1e-8);
    CHECK(rep.max_violation_cond2 <= 1e-10);
    CHECK(rep.area_source == doctest::Approx(rep.area_target).epsilon(1e-9));
}

TEST_CASE("maps survive a json round trip") {
    auto map = solve_f(3, {-1.0}, {0.25}, 0.9);
    const std::string text = map.to_json();
    auto back = ComparisonMap::from_json(text);
    CHECK(back.k == map.k);
    CHECK(back.K == doctest::Approx(map.K).epsilon(1e-15));
    CHECK(back.K1 == doctest::Approx(map.K1).epsilon(1e-15));
    CHECK(back.R0 == doctest::Approx(map.R0).epsilon(1e-15));
    CHECK(back.R1 == doctest::Approx(map.R1).epsilon(1e-12));
    for (double s = 0.05; s < 0.9; s += 0.08) {
        CHECK(back.eval_f(s) == doctest::Approx(map.eval_f(s)).epsilon(1e-10));
        CHECK(back.eval_fp(s) == doctest::Approx(map.eval_fp(s)).epsilon(1e-8));
    }
}
