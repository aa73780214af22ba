#pragma once

#include "widthlab/spaceform.hpp"
#include "widthlab/varifold.hpp"

#include <Eigen/Dense>

#include <map>
#include <string>
#include <vector>

namespace widthlab {

enum class AmbientModel { Euclidean, Sphere, Hyperboloid };

// Triangulated surface in a space-form ball. Vertices live in the ambient
// model: R^3 for K = 0, the radius-1/sqrt(K) sphere in R^4 for K > 0, the
// hyperboloid in Minkowski R^{3,1} for K < 0.
struct SurfaceMesh {
    AmbientModel model = AmbientModel::Euclidean;
    double K = 0.0;
    double R = 1.0;
    Eigen::MatrixXd vertices;          // dim x nv
    Eigen::Matrix3Xi triangles;        // 3 x nt
    std::vector<char> boundary_vertex; // nv markers
    Eigen::MatrixXd normals;           // dim x nv, unit normal of the surface in the ball
    std::map<std::string, Eigen::VectorXd> fields; // per-vertex scalars

    int nv() const { return int(vertices.cols()); }
    int nt() const { return int(triangles.cols()); }
};

// Geodesic distance between ambient points of a model.
double model_distance(const SurfaceMesh& mesh, const Eigen::VectorXd& a, const Eigen::VectorXd& b);

// Log map of q at p: tangent vector at p (ambient coordinates) whose length
// is the geodesic distance.
Eigen::VectorXd model_log(const SurfaceMesh& mesh, const Eigen::VectorXd& p,
                          const Eigen::VectorXd& q);

// Exponential map at p of the ambient tangent vector w.
Eigen::VectorXd model_exp(const SurfaceMesh& mesh, const Eigen::VectorXd& p,
                          const Eigen::VectorXd& w);

// Inner product of ambient tangent vectors at a point (Lorentzian for the
// hyperboloid model, Euclidean otherwise).
double model_inner(const SurfaceMesh& mesh, const Eigen::VectorXd& u, const Eigen::VectorXd& v);

// Geodesic radius of a vertex from the ball centre.
double model_radius(const SurfaceMesh& mesh, int vertex);

// Totally geodesic equatorial disk of the ball B_{R;K}, polar triangulation
// with `rings` concentric rings. Carries exact normals and zero curvature
// fields.
SurfaceMesh geodesic_disk_mesh(Curvature K, double R, int rings);

// The critical catenoid in the unit Euclidean 3-ball: rotation angle grid
// n_theta, meridian grid n_s. Carries analytic normals, |A|^2 and H = 0.
SurfaceMesh critical_catenoid_mesh(int n_theta, int n_s);

struct CatenoidParameters {
    double T = 0.0;    // coth(T) = T
    double scale = 0.0; // neck radius a with boundary on the unit sphere
    double area = 0.0;
    double orthogonality_residual = 0.0;
};
CatenoidParameters critical_catenoid_parameters();

// Quadratic-fit curvature estimation over 2-ring stencils in geodesic
// normal coordinates. Returns per-vertex |A|^2 and mean curvature fields
// (interior vertices; boundary vertices copy their nearest interior ring).
struct CurvatureFit {
    Eigen::VectorXd abs_A2;
    Eigen::VectorXd mean_curvature;
};
CurvatureFit fit_curvatures(const SurfaceMesh& mesh);

// Max |H| over interior vertices: the stored analytic field when present,
// otherwise the quadratic fit. Fixtures must pass <= 1e-3 before stability
// or calibration runs.
double minimality_residual(const SurfaceMesh& mesh);

// Min triangle angle in degrees (intrinsic, from geodesic edge lengths).
double min_triangle_angle(const SurfaceMesh& mesh);

// Triangle areas: intrinsic space-form areas (angle defect for K != 0,
// Heron for K = 0).
Eigen::VectorXd triangle_areas(const SurfaceMesh& mesh);

double surface_area(const SurfaceMesh& mesh);
double boundary_length(const SurfaceMesh& mesh);

// Edges incident to exactly one triangle.
std::vector<std::pair<int, int>> boundary_edges(const SurfaceMesh& mesh);

// Euclidean meshes only: one Grassmannian atom per triangle.
DiscreteVarifold mesh_to_varifold(const SurfaceMesh& mesh);

DiscreteVarifold critical_catenoid_fixture(int n_theta, int n_s);

std::string to_off(const SurfaceMesh& mesh);
SurfaceMesh from_off(const std::string& text);

} // namespace widthlab
