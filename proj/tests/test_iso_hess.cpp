#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <widthlab/mesh.hpp>
#include <widthlab/stability.hpp>

#include <cmath>

using namespace widthlab;

TEST_CASE("radial field divergence is identically one on the geodesic disk") {
    auto mesh = geodesic_disk_mesh({-1.0}, 1.0, 25);
    auto rep = iso_check(mesh);

    // the pointwise identity is exact; only roundoff remains
    CHECK(rep.div_min >= 1.0 - 1e-9);
    CHECK(rep.div_max <= 1.0 + 1e-9);

    // integrated identity: area = f(R) * perimeter
    CHECK(rep.identity_residual < 3e-3);

    // frozen reference 2 pi (cosh 1 - 1) for the smooth disk
    CHECK(rep.area == doctest::Approx(3.4122762652849023).epsilon(5e-3));
    CHECK(rep.perimeter == doctest::Approx(7.3840068728826453).epsilon(5e-3));

    // geodesic disks achieve equality in L^2 >= 4 pi A + A^2
    CHECK(std::abs(rep.ratio_residual) < 0.01);
    CHECK(rep.ratio_lhs == doctest::Approx(rep.ratio_rhs).epsilon(0.01));
    CHECK(rep.minimality <= 1e-3);
}

TEST_CASE("identity residual shrinks under refinement") {
    auto coarse = iso_check(geodesic_disk_mesh({-1.0}, 1.0, 10));
    auto fine = iso_check(geodesic_disk_mesh({-1.0}, 1.0, 30));
    CHECK(fine.identity_residual < coarse.identity_residual);
}

TEST_CASE("distance potential solves the Hessian identity") {
    auto rep = hess_identity_check(1.0, 200, 7);
    CHECK(rep.samples == 200);
    CHECK(rep.max_residual <= 1e-6);

    // a different seed and a smaller ball agree
    auto rep2 = hess_identity_check(0.5, 150, 99);
    CHECK(rep2.max_residual <= 1e-6);
}
