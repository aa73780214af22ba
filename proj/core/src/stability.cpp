#include "widthlab/stability.hpp"

#include "widthlab/constants.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <vector>

namespace widthlab {

namespace {

struct TriangleGeometry {
    double area;             // flat area from the geodesic edge lengths
    double cot[3];           // cotangent at corner 0, 1, 2
};

TriangleGeometry flatten_triangle(double l12, double l20, double l01) {
    // corner c is opposite the edge not naming it: corner 0 faces l12, etc.
    auto corner_cos = [](double opp, double s1, double s2) {
        return std::max(-1.0, std::min(1.0, (s1 * s1 + s2 * s2 - opp * opp) / (2.0 * s1 * s2)));
    };
    TriangleGeometry g{};
    const double c0 = corner_cos(l12, l20, l01);
    const double c1 = corner_cos(l20, l01, l12);
    const double c2 = corner_cos(l01, l12, l20);
    const double angles[3] = {std::acos(c0), std::acos(c1), std::acos(c2)};
    for (int i = 0; i < 3; ++i) {
        const double s = std::sin(angles[i]);
        if (s < 1e-12) throw std::runtime_error("flatten_triangle: degenerate corner");
        g.cot[i] = std::cos(angles[i]) / s;
    }
    // Heron, sorted for stability
    double l[3] = {l12, l20, l01};
    std::sort(l, l + 3);
    const double x = l[2], y = l[1], z = l[0];
    const double q = (x + (y + z)) * (z - (x - y)) * (z + (x - y)) * (x + (y - z));
    g.area = 0.25 * std::sqrt(std::max(0.0, q));
    return g;
}

double lorentz_dot(const Eigen::VectorXd& u, const Eigen::VectorXd& v) {
    return u.head(3).dot(v.head(3)) - u(3) * v(3);
}

} // namespace

double boundary_curvature(double K, double R) {
    if (R <= 0.0) throw std::invalid_argument("boundary_curvature: R must be positive");
    if (K == 0.0) return 1.0 / R;
    if (K > 0.0) {
        const double s = std::sqrt(K);
        return s * std::cos(R * s) / std::sin(R * s);
    }
    const double s = std::sqrt(-K);
    return s * std::cosh(R * s) / std::sinh(R * s);
}

FemOperators assemble_operators(const SurfaceMesh& mesh, bool consistent_mass) {
    const int nv = mesh.nv();
    if (nv == 0) throw std::invalid_argument("assemble_operators: empty mesh");

    Eigen::VectorXd abs_A2 = Eigen::VectorXd::Zero(nv);
    if (const auto it = mesh.fields.find("abs_A2");
        it != mesh.fields.end() && it->second.size() == nv) {
        abs_A2 = it->second;
    }
    const double ric = 2.0 * mesh.K; // ambient dimension 3
    Eigen::VectorXd potential_coeff(nv);
    for (int v = 0; v < nv; ++v) potential_coeff(v) = ric + abs_A2(v);

    std::vector<Eigen::Triplet<double>> st, mt, pt;
    st.reserve(size_t(mesh.nt()) * 12);
    mt.reserve(size_t(mesh.nt()) * 9);
    pt.reserve(size_t(mesh.nt()) * 9);

    for (int t = 0; t < mesh.nt(); ++t) {
        const int vi[3] = {mesh.triangles(0, t), mesh.triangles(1, t), mesh.triangles(2, t)};
        const double l12 = model_distance(mesh, mesh.vertices.col(vi[1]), mesh.vertices.col(vi[2]));
        const double l20 = model_distance(mesh, mesh.vertices.col(vi[2]), mesh.vertices.col(vi[0]));
        const double l01 = model_distance(mesh, mesh.vertices.col(vi[0]), mesh.vertices.col(vi[1]));
        const TriangleGeometry g = flatten_triangle(l12, l20, l01);

        for (int c = 0; c < 3; ++c) {
            const int a = vi[(c + 1) % 3], b = vi[(c + 2) % 3];
            const double w = 0.5 * g.cot[c];
            st.emplace_back(a, a, w);
            st.emplace_back(b, b, w);
            st.emplace_back(a, b, -w);
            st.emplace_back(b, a, -w);
        }

        if (consistent_mass) {
            for (int a = 0; a < 3; ++a) {
                for (int b = 0; b < 3; ++b) {
                    const double m = g.area / 12.0 * (a == b ? 2.0 : 1.0);
                    mt.emplace_back(vi[a], vi[b], m);
                    const double cavg =
                        0.5 * (potential_coeff(vi[a]) + potential_coeff(vi[b]));
                    pt.emplace_back(vi[a], vi[b], m * cavg);
                }
            }
        } else {
            for (int a = 0; a < 3; ++a) {
                mt.emplace_back(vi[a], vi[a], g.area / 3.0);
                pt.emplace_back(vi[a], vi[a], g.area / 3.0 * potential_coeff(vi[a]));
            }
        }
    }

    const double kappa = boundary_curvature(mesh.K, mesh.R);
    std::vector<Eigen::Triplet<double>> bt;
    for (const auto& [i, j] : boundary_edges(mesh)) {
        const double len = model_distance(mesh, mesh.vertices.col(i), mesh.vertices.col(j));
        if (consistent_mass) {
            bt.emplace_back(i, i, kappa * len / 3.0);
            bt.emplace_back(j, j, kappa * len / 3.0);
            bt.emplace_back(i, j, kappa * len / 6.0);
            bt.emplace_back(j, i, kappa * len / 6.0);
        } else {
            bt.emplace_back(i, i, kappa * len / 2.0);
            bt.emplace_back(j, j, kappa * len / 2.0);
        }
    }

    FemOperators ops;
    ops.consistent = consistent_mass;
    ops.stiffness.resize(nv, nv);
    ops.mass.resize(nv, nv);
    ops.potential.resize(nv, nv);
    ops.boundary.resize(nv, nv);
    ops.stiffness.setFromTriplets(st.begin(), st.end());
    ops.mass.setFromTriplets(mt.begin(), mt.end());
    ops.potential.setFromTriplets(pt.begin(), pt.end());
    ops.boundary.setFromTriplets(bt.begin(), bt.end());
    return ops;
}

double q_form(const SurfaceMesh& mesh, const Eigen::VectorXd& phi, bool consistent_mass) {
    if (phi.size() != mesh.nv()) throw std::invalid_argument("q_form: phi size mismatch");
    const FemOperators ops = assemble_operators(mesh, consistent_mass);
    const double dirichlet = phi.dot(ops.stiffness * phi);
    const double zeroth = phi.dot(ops.potential * phi);
    const double robin = phi.dot(ops.boundary * phi);
    return dirichlet - zeroth - robin;
}

RobinSpectrum robin_spectrum(const SurfaceMesh& mesh, int count) {
    const int nv = mesh.nv();
    if (count < 1) throw std::invalid_argument("robin_spectrum: count must be positive");
    const FemOperators ops = assemble_operators(mesh, /*consistent_mass=*/false);

    Eigen::MatrixXd A = Eigen::MatrixXd(ops.stiffness) - Eigen::MatrixXd(ops.potential) -
                        Eigen::MatrixXd(ops.boundary);
    A = 0.5 * (A + A.transpose()); // scrub assembly round-off
    const Eigen::MatrixXd M = Eigen::MatrixXd(ops.mass);

    Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> solver(A, M);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("robin_spectrum: eigensolver failed");
    }

    RobinSpectrum out;
    const int keep = std::min<int>(count, nv);
    out.eigenvalues.assign(solver.eigenvalues().data(), solver.eigenvalues().data() + keep);
    out.lambda1 = solver.eigenvalues()(0);
    out.gap = nv > 1 ? solver.eigenvalues()(1) - solver.eigenvalues()(0) : 0.0;
    out.ground_state = solver.eigenvectors().col(0);
    if (out.ground_state.sum() < 0.0) out.ground_state = -out.ground_state;
    return out;
}

HessianReport hess_identity_check(double R, int samples, unsigned seed) {
    if (R <= 0.0) throw std::invalid_argument("hess_identity_check: R must be positive");
    if (samples < 1) throw std::invalid_argument("hess_identity_check: samples must be positive");

    SurfaceMesh probe; // carries only the model tag and curvature
    probe.model = AmbientModel::Hyperboloid;
    probe.K = -1.0;
    probe.R = R;

    Eigen::VectorXd base = Eigen::VectorXd::Zero(4);
    base(3) = 1.0;

    const double h = 1e-4;
    std::mt19937 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_real_distribution<double> unif(0.0, 1.0);

    HessianReport rep;
    rep.samples = samples;
    rep.radius = R;
    rep.step = h;

    for (int s = 0; s < samples; ++s) {
        Eigen::Vector3d dir(gauss(rng), gauss(rng), gauss(rng));
        while (dir.norm() < 1e-8) dir = Eigen::Vector3d(gauss(rng), gauss(rng), gauss(rng));
        dir.normalize();
        const double r = R * std::cbrt(std::max(1e-9, unif(rng)));

        Eigen::VectorXd p(4);
        p.head<3>() = std::sinh(r) * dir;
        p(3) = std::cosh(r);

        // Lorentz-orthonormal tangent triple at p
        Eigen::MatrixXd frame(4, 3);
        int found = 0;
        for (int i = 0; i < 4 && found < 3; ++i) {
            Eigen::VectorXd w = Eigen::VectorXd::Zero(4);
            w(i) = 1.0;
            w += lorentz_dot(w, p) * p; // remove the (timelike) point component
            for (int j = 0; j < found; ++j) {
                w -= lorentz_dot(w, frame.col(j)) * frame.col(j);
            }
            const double n2 = lorentz_dot(w, w);
            if (n2 > 1e-10) frame.col(found++) = w / std::sqrt(n2);
        }
        if (found < 3) throw std::runtime_error("hess_identity_check: frame construction failed");

        const auto potential = [&](const Eigen::VectorXd& q) { return -lorentz_dot(q, base); };
        const auto second_difference = [&](const Eigen::VectorXd& w) {
            const Eigen::VectorXd qp = model_exp(probe, p, h * w);
            const Eigen::VectorXd qm = model_exp(probe, p, -h * w);
            return (potential(qp) - 2.0 * potential(p) + potential(qm)) / (h * h);
        };

        const double expected = potential(p); // cosh of the geodesic radius
        double d2[3];
        for (int i = 0; i < 3; ++i) d2[i] = second_difference(frame.col(i));
        for (int i = 0; i < 3; ++i) {
            rep.max_residual = std::max(rep.max_residual, std::abs(d2[i] - expected));
            for (int j = i + 1; j < 3; ++j) {
                const double mixed =
                    0.5 * (second_difference(frame.col(i) + frame.col(j)) - d2[i] - d2[j]);
                rep.max_residual = std::max(rep.max_residual, std::abs(mixed));
            }
        }
    }
    return rep;
}

IsoReport iso_check(const SurfaceMesh& mesh) {
    if (mesh.model != AmbientModel::Hyperboloid || mesh.K >= 0.0) {
        throw std::invalid_argument("iso_check: negatively curved disk required");
    }
    const double s = std::sqrt(-mesh.K);
    const double R = mesh.R;

    IsoReport rep;
    rep.minimality = minimality_residual(mesh);

    Eigen::VectorXd center = Eigen::VectorXd::Zero(4);
    center(3) = 1.0 / s;

    // divergence of f(r) grad r, f = tanh(s r / 2)/s, at each vertex
    Eigen::VectorXd div(mesh.nv());
    for (int v = 0; v < mesh.nv(); ++v) {
        const Eigen::VectorXd l = model_log(mesh, mesh.vertices.col(v), center);
        const double r = std::sqrt(std::max(0.0, model_inner(mesh, l, l)));
        if (r * s < 1e-8) {
            div(v) = 1.0; // limit of the radial field's divergence at the pole
            continue;
        }
        const Eigen::VectorXd grad = -l / r;
        const double normal_part = model_inner(mesh, grad, mesh.normals.col(v));
        const double tang2 =
            std::max(0.0, model_inner(mesh, grad, grad) - normal_part * normal_part);
        const double f = std::tanh(0.5 * s * r) / s;
        const double fp = 0.5 / (std::cosh(0.5 * s * r) * std::cosh(0.5 * s * r));
        const double ct = s * std::cosh(s * r) / std::sinh(s * r);
        div(v) = fp * tang2 + f * ct * (2.0 - tang2);
    }

    rep.div_min = std::numeric_limits<double>::infinity();
    rep.div_max = -std::numeric_limits<double>::infinity();
    for (int t = 0; t < mesh.nt(); ++t) {
        const double d = (div(mesh.triangles(0, t)) + div(mesh.triangles(1, t)) +
                          div(mesh.triangles(2, t))) /
                         3.0;
        rep.div_min = std::min(rep.div_min, d);
        rep.div_max = std::max(rep.div_max, d);
    }

    rep.area = surface_area(mesh);
    rep.perimeter = boundary_length(mesh);
    const double f_R = std::tanh(0.5 * s * R) / s;
    rep.identity_residual = std::abs(rep.area - f_R * rep.perimeter) / rep.area;
    rep.ratio_lhs = rep.perimeter * rep.perimeter / rep.area;
    rep.ratio_rhs = 4.0 * pi + (-mesh.K) * rep.area;
    rep.ratio_residual = (rep.ratio_lhs - rep.ratio_rhs) / rep.ratio_lhs;
    return rep;
}

} // namespace widthlab
