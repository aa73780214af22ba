#pragma once

#include "widthlab/mesh.hpp"

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include <vector>

namespace widthlab {

// Normal curvature of the geodesic sphere of radius R in curvature K,
// i.e. the Robin coefficient of the second-variation boundary term.
double boundary_curvature(double K, double R);

// Finite element operators on a triangulated surface, assembled from
// geodesic edge lengths only. `potential` carries the zeroth-order
// coefficient Ric(nu, nu) + |A|^2 = (n-1)K + |A|^2 with the |A|^2 vertex
// field when the mesh stores one; `boundary` the Robin pairing with the
// sphere's normal curvature.
struct FemOperators {
    Eigen::SparseMatrix<double> stiffness;
    Eigen::SparseMatrix<double> mass;
    Eigen::SparseMatrix<double> potential;
    Eigen::SparseMatrix<double> boundary;
    bool consistent = false;
};

FemOperators assemble_operators(const SurfaceMesh& mesh, bool consistent_mass);

// Second-variation quadratic form Q(phi, phi) for a free-boundary surface
// in the ball: stiffness minus potential minus boundary terms. Lumped and
// consistent assembly give two independently discretised routes to the
// same number.
double q_form(const SurfaceMesh& mesh, const Eigen::VectorXd& phi, bool consistent_mass = false);

struct RobinSpectrum {
    std::vector<double> eigenvalues; // ascending
    Eigen::VectorXd ground_state;    // mass-normalised, nonnegative mean
    double lambda1 = 0.0;
    double gap = 0.0; // lambda2 - lambda1
};

// Generalised eigenproblem (S - P - B) phi = lambda M phi with lumped mass.
RobinSpectrum robin_spectrum(const SurfaceMesh& mesh, int count = 6);

struct HessianReport {
    double max_residual = 0.0;
    int samples = 0;
    double radius = 0.0;
    double step = 0.0;
};

// Second differences of the boosted distance potential along random
// geodesics in the curvature -1 ball of radius R: the Hessian of cosh(r)
// must equal cosh(r) times the metric.
HessianReport hess_identity_check(double R, int samples, unsigned seed);

struct IsoReport {
    double div_min = 0.0;
    double div_max = 0.0;
    double area = 0.0;
    double perimeter = 0.0;
    double identity_residual = 0.0; // |area - f(R) perimeter| / area
    double ratio_lhs = 0.0;         // perimeter^2 / area
    double ratio_rhs = 0.0;         // 4 pi + |K| area
    double ratio_residual = 0.0;    // relative defect of the equality case
    double minimality = 0.0;
};

// Divergence bookkeeping for the radial test field f(r) grad r with
// f(r) = tanh(sqrt(|K|) r / 2) / sqrt(|K|) on a negatively curved disk:
// per-triangle divergence, the area--perimeter identity it integrates to,
// and the isoperimetric ratio against the equality case.
IsoReport iso_check(const SurfaceMesh& mesh);

} // namespace widthlab
