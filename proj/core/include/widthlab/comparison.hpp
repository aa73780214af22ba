#pragma once

#include "widthlab/spaceform.hpp"

#include <string>
#include <vector>

namespace widthlab {

// Solution table of the radial comparison ODE
//   f'(r) = sn_K(r)^{k-1} / sn_{K1}(f(r))^{k-1},  f(0) = 0,
// with a cubic Hermite evaluator between grid nodes.
struct ComparisonMap {
    int k = 2;
    double K = 0.0;
    double K1 = 0.0;
    double R0 = 1.0;
    double R1 = 1.0; // = f(R0)
    std::vector<double> r, f, fp;
    double min_fp = 1.0;

    double eval_f(double s) const;
    double eval_fp(double s) const;

    std::string to_json() const;
    static ComparisonMap from_json(const std::string& text);
};

// Integrates the comparison ODE. Requires K <= K1 unless allow_reversed is
// set (used only to exhibit the failure of the f' >= 1 invariant when the
// curvatures are ordered the wrong way).
ComparisonMap solve_f(int k, Curvature K, Curvature K1, double R0,
                      bool allow_reversed = false, int grid_points = 1025);

// Residual of the defining integral identity at s:
//   int_0^s sn_K^{k-1} - int_0^{f(s)} sn_{K1}^{k-1}.
double integral_residual(const ComparisonMap& map, double s);

// Case 2 constant: the curvature K in (0,1) for which the ball of radius
// alpha/sqrt(K) in curvature K compares to the unit hemisphere.
Curvature case2_curvature(double alpha_angle, int k);

// Case 3 constant: the curvature K1 > 0 for which the hyperbolic ball of
// radius R (K = -1) compares to the hemisphere of curvature K1.
Curvature case3_curvature(double R, int k);

struct ContractionReport {
    double max_violation_cond1 = 0.0; // |f' h1(f)^{k-1} - h0^{k-1}|
    double max_violation_cond2 = 0.0; // max(0, h1(f) - h0)
    int grid_size = 0;
    bool pass = false;
    double area_source = 0.0;
    double area_target = 0.0;
};

// Checks the pointwise contraction conditions and the area substitution
// identity for the pair of profiles joined by the map f.
ContractionReport verify_contraction(const WarpedProfile& h0, const WarpedProfile& h1,
                                     const ComparisonMap& f);

} // namespace widthlab
