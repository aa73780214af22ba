#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <widthlab/constants.hpp>
#include <widthlab/mesh.hpp>
#include <widthlab/spaceform.hpp>
#include <widthlab/stability.hpp>
#include <widthlab/varifold.hpp>

#include <cmath>

using namespace widthlab;

TEST_CASE("geodesic disk mesh combinatorics") {
    const int m = 6;
    auto mesh = geodesic_disk_mesh({0.0}, 1.0, m);
    CHECK(mesh.nv() == 1 + 3 * m * (m + 1));
    CHECK(mesh.nt() == 6 * m * m);

    int boundary = 0;
    for (char b : mesh.boundary_vertex) boundary += b ? 1 : 0;
    CHECK(boundary == 6 * m);

    // Euler characteristic of a disk is 1
    const int E = (3 * mesh.nt() + boundary) / 2;
    CHECK(mesh.nv() - E + mesh.nt() == 1);

    CHECK(min_triangle_angle(mesh) > 0.3);
}

TEST_CASE("disk mesh areas and perimeters match closed forms") {
    const int m = 24;

    auto flat = geodesic_disk_mesh({0.0}, 1.0, m);
    CHECK(surface_area(flat) == doctest::Approx(pi).epsilon(2e-3));
    CHECK(boundary_length(flat) == doctest::Approx(2.0 * pi).epsilon(1e-3));

    auto round = geodesic_disk_mesh({1.0}, 1.0, m);
    CHECK(surface_area(round) ==
          doctest::Approx(2.0 * pi * (1.0 - std::cos(1.0))).epsilon(2e-3));
    CHECK(boundary_length(round) ==
          doctest::Approx(2.0 * pi * std::sin(1.0)).epsilon(1e-3));

    auto hyper = geodesic_disk_mesh({-1.0}, 1.0, m);
    CHECK(surface_area(hyper) ==
          doctest::Approx(3.4122762652849023).epsilon(2e-3));
    CHECK(boundary_length(hyper) ==
          doctest::Approx(7.3840068728826453).epsilon(1e-3));

    // stored geodesic radius field agrees with the model metric
    REQUIRE(hyper.fields.count("geodesic_r") == 1);
    const auto& r = hyper.fields.at("geodesic_r");
    for (int v = 0; v < hyper.nv(); v += 37) {
        CHECK(model_radius(hyper, v) == doctest::Approx(r[v]).epsilon(1e-10));
    }
}

TEST_CASE("model exponential and logarithm invert each other") {
    for (double K : {0.5, -1.0}) {
        auto mesh = geodesic_disk_mesh({K}, 0.9, 4);
        const Eigen::VectorXd p = mesh.vertices.col(10);
        const Eigen::VectorXd q = mesh.vertices.col(40);
        const Eigen::VectorXd w = model_log(mesh, p, q);
        CHECK(std::sqrt(model_inner(mesh, w, w)) ==
              doctest::Approx(model_distance(mesh, p, q)).epsilon(1e-11));
        const Eigen::VectorXd back = model_exp(mesh, p, w);
        CHECK((back - q).norm() < 1e-11);
    }
}

TEST_CASE("critical catenoid parameters against frozen references") {
    auto par = critical_catenoid_parameters();
    CHECK(par.T == doctest::Approx(1.1996786402577338).epsilon(1e-12));
    CHECK(par.scale == doctest::Approx(0.46048508825013391).epsilon(1e-12));
    CHECK(par.area == doctest::Approx(5.2373903279879467).epsilon(1e-12));
    CHECK(par.orthogonality_residual <= 1e-14);
}

TEST_CASE("critical catenoid mesh: free boundary and minimality") {
    auto mesh = critical_catenoid_mesh(64, 32);
    CHECK(surface_area(mesh) ==
          doctest::Approx(5.2373903279879467).epsilon(2e-3));
    CHECK(minimality_residual(mesh) <= 1e-3);

    // boundary circles sit exactly on the unit sphere and meet it at a
    // right angle
    for (int v = 0; v < mesh.nv(); ++v) {
        if (!mesh.boundary_vertex[v]) continue;
        const Eigen::VectorXd x = mesh.vertices.col(v);
        CHECK(std::abs(x.norm() - 1.0) < 1e-13);
        CHECK(std::abs(x.dot(mesh.normals.col(v))) < 1e-13);
    }

    // quadratic fits recover the stored analytic second fundamental form;
    // the worst vertices sit next to the boundary where stencils are one
    // sided, so the max is looser than the bulk average
    auto fit = fit_curvatures(mesh);
    const auto& stored = mesh.fields.at("abs_A2");
    double worst = 0.0, total = 0.0;
    int interior = 0;
    for (int v = 0; v < mesh.nv(); ++v) {
        if (mesh.boundary_vertex[v]) continue;
        const double rel = std::abs(fit.abs_A2[v] - stored[v]) / stored[v];
        worst = std::max(worst, rel);
        total += rel;
        ++interior;
        CHECK(std::abs(fit.mean_curvature[v]) < 0.05);
    }
    CHECK(worst < 0.12);
    CHECK(total / interior < 0.02);
}

TEST_CASE("mesh converts to a varifold with matching mass") {
    auto mesh = critical_catenoid_mesh(48, 24);
    auto V = mesh_to_varifold(mesh);
    CHECK(V.n == 3);
    CHECK(V.k == 2);
    CHECK(int(V.atoms.size()) == mesh.nt());
    CHECK(mass(V) == doctest::Approx(surface_area(mesh)).epsilon(1e-12));
    CHECK(convex_hull_check(V).pass);
}

TEST_CASE("surface serialisation round trips with fields") {
    auto mesh = geodesic_disk_mesh({-1.0}, 1.0, 5);
    const std::string text = to_off(mesh);
    auto back = from_off(text);
    CHECK(back.model == mesh.model);
    CHECK(back.K == doctest::Approx(mesh.K).epsilon(1e-15));
    CHECK(back.R == doctest::Approx(mesh.R).epsilon(1e-15));
    REQUIRE(back.nv() == mesh.nv());
    REQUIRE(back.nt() == mesh.nt());
    CHECK((back.vertices - mesh.vertices).cwiseAbs().maxCoeff() < 1e-15);
    CHECK((back.triangles - mesh.triangles).cwiseAbs().maxCoeff() == 0);
    CHECK(back.boundary_vertex == mesh.boundary_vertex);
    for (const auto& [name, values] : mesh.fields) {
        REQUIRE(back.fields.count(name) == 1);
        CHECK((back.fields.at(name) - values).cwiseAbs().maxCoeff() < 1e-15);
    }
}

TEST_CASE("robin boundary coefficient in the three regimes") {
    CHECK(boundary_curvature({0.0}, 0.5) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(boundary_curvature({1.0}, pi / 2.0) ==
          doctest::Approx(0.0).epsilon(1e-12));
    CHECK(std::abs(boundary_curvature({1.0}, pi / 2.0)) < 1e-12);
    CHECK(boundary_curvature({-1.0}, 1.0) ==
          doctest::Approx(1.0 / std::tanh(1.0)).epsilon(1e-14));
    CHECK(boundary_curvature({0.25}, 2.0) ==
          doctest::Approx(0.5 / std::tan(1.0)).epsilon(1e-13));
}

TEST_CASE("quadratic form of the constant function on model disks") {
    // flat unit disk: Q(1,1) = -perimeter / R = -2 pi
    auto flat = geodesic_disk_mesh({0.0}, 1.0, 20);
    Eigen::VectorXd ones = Eigen::VectorXd::Ones(flat.nv());
    CHECK(q_form(flat, ones) == doctest::Approx(-2.0 * pi).epsilon(2e-3));
    CHECK(q_form(flat, ones, true) == doctest::Approx(-2.0 * pi).epsilon(2e-3));

    // hemisphere: boundary term vanishes, potential integrates to 4 pi
    auto hemi = geodesic_disk_mesh({1.0}, pi / 2.0, 20);
    Eigen::VectorXd ones2 = Eigen::VectorXd::Ones(hemi.nv());
    CHECK(q_form(hemi, ones2) == doctest::Approx(-4.0 * pi).epsilon(5e-3));
}

TEST_CASE("robin spectrum of the flat disk is negative with a gap") {
    auto flat = geodesic_disk_mesh({0.0}, 1.0, 12);
    auto spec = robin_spectrum(flat, 4);
    REQUIRE(spec.eigenvalues.size() >= 2);
    // reference: -lambda solves the radial Bessel problem, about -2.5866
    CHECK(spec.lambda1 > -2.8);
    CHECK(spec.lambda1 < -2.3);
    CHECK(spec.gap > 0.1);
    // ground state has a sign
    const auto& g = spec.ground_state;
    CHECK((g.minCoeff() > -1e-12 || g.maxCoeff() < 1e-12));
}
