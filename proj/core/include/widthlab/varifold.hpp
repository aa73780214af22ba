#pragma once

#include <Eigen/Dense>

#include <functional>
#include <string>
#include <vector>

namespace widthlab {

// Small fixed-capacity vectors: ambient dimensions up to 8 without heap churn.
using VecN = Eigen::Matrix<double, Eigen::Dynamic, 1, Eigen::ColMajor, 8, 1>;
using MatN = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::ColMajor, 8, 8>;

// One weighted Grassmannian atom: a point, an orthonormal k-frame spanning
// the tangent plane, and a k-area weight.
struct Atom {
    VecN x;
    MatN frame; // n x k, orthonormal columns
    double w = 0.0;
};

struct DiscreteVarifold {
    int n = 3;
    int k = 2;
    std::vector<Atom> atoms;
    bool unit_ball = true;  // tagged as a varifold of the closed unit ball
    double spacing = 0.0;   // generator resolution hint (0 = unknown)
};

struct AnalyticVectorField {
    std::string name;
    std::function<VecN(const VecN&)> X;
    std::function<MatN(const VecN&)> DX;
    bool tangent_to_sphere = false;
};

double mass(const DiscreteVarifold& V);

// Sum of w * tr(F^T DX F): the first variation of mass along X.
double first_variation(const DiscreteVarifold& V, const AnalyticVectorField& X);

// div_S X at a single atom.
double div_S(const MatN& frame, const MatN& DX);

// The 12-field tangent test basis in the unit 3-ball: rotations, projected
// translations, projected quadratic shears, and radial fields vanishing on
// the sphere. All carry analytic Jacobians.
std::vector<AnalyticVectorField> tangent_test_basis();

// Max |<X(x), x>| over random unit-sphere samples; 0 for a tangent field.
double tangency_defect(const AnalyticVectorField& X, int n, int samples = 200,
                       unsigned seed = 11);

struct DensityReport {
    VecN point;
    double raw = 0.0;      // least-squares r -> 0 intercept of the ball ratios
    double modified = 0.0; // doubled at boundary points
    bool boundary_point = false;
    double smoothing = 0.0;
    double fit_residual = 0.0;
    std::vector<double> radii, ratios;
};

// Ball-ratio density ||V||(B_r(x)) / (alpha_k r^k) extrapolated over the
// radius schedule. smoothing > 0 mollifies the ball indicator on that scale.
DensityReport density(const DiscreteVarifold& V, const VecN& x, std::vector<double> radii,
                      double smoothing = 0.0);

struct MonotonicityReport {
    double gamma = 1.0;
    std::vector<double> grid;
    std::vector<double> corrected_ratio; // (1+gamma t)^k t^-k ||V||(B_t)
    std::vector<double> raw_ratio;
    std::vector<double> annulus_integral; // between consecutive grid radii
    std::vector<double> discretisation_slack;
    double min_margin = 0.0;
    bool pass = false;
};

// Verifies the corrected almost-monotone ratio inequality at a boundary
// point: consecutive differences of the corrected ratio dominate the annulus
// integral of |D_S^perp rho|^2 / ((1+gamma rho) rho^k) up to sampling slack.
MonotonicityReport monotonicity_check(const DiscreteVarifold& V, const VecN& y,
                                      std::vector<double> grid, double gamma = 1.0);

// Integral of |pi_S^perp(x-y)|^2 / |x-y|^{k+2}; atoms inside the cutoff
// radius around y are excluded (cutoff <= 0 selects 3x the fixture spacing).
double excess(const DiscreteVarifold& V, const VecN& y, double cutoff = -1.0);

struct ConvexHullReport {
    double max_outside = 0.0; // worst support-function violation
    int boundary_atoms = 0;
    bool pass = false;
};

// Convex hull surrogate: every atom lies inside the sampled-support-function
// hull of the boundary trace (atoms within one spacing of the sphere).
ConvexHullReport convex_hull_check(const DiscreteVarifold& V, int directions = 256,
                                   unsigned seed = 3);

// Largest principal-angle gap between atom planes and the first atom plane.
double plane_spread(const DiscreteVarifold& V);

// Fixtures. All are unit-ball varifolds with exact cell-area weights.
DiscreteVarifold equatorial_disk_fixture(int N, double weight = 1.0);
DiscreteVarifold doubled_disk_fixture(int N);
DiscreteVarifold offcenter_disk_fixture(int N, double offset = 0.5);
DiscreteVarifold tilted_disk_fixture(int N, double tilt_angle);

std::string to_jsonl(const DiscreteVarifold& V);
DiscreteVarifold from_jsonl(const std::string& text);

} // namespace widthlab
