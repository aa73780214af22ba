#pragma once

#include "widthlab/spaceform.hpp"

#include <Eigen/Dense>

#include <string>
#include <vector>

namespace widthlab {

// Areas of the totally geodesic k-slices orthogonal to a fixed diameter.
struct SliceFamily {
    SpaceFormBall ball;
    std::vector<double> t, radius, area;
};

SliceFamily equatorial_family(const SpaceFormBall& ball, int grid_n = 41);

// Max slice area of the equatorial family: an upper bound certificate for
// the k-width of the ball.
double width_upper_bound(const SpaceFormBall& ball);

// Discrete sweepout of a geodesic 2-disk by polylines with endpoints on the
// boundary circle, held in the conformal chart of curvature K. The curves at
// s = 0 and s = 1 are degenerate (single boundary points).
struct PolylineSweepout {
    double K = 0.0;
    double R = 1.0;          // geodesic disk radius
    double chart_radius = 1.0; // image of R in the conformal chart
    std::vector<double> s;
    std::vector<Eigen::Matrix2Xd> curves; // chart coordinates, one column per vertex

    double curve_length(int i) const;   // geodesic length of curve i
    double max_length() const;
    std::string to_csv() const;
};

// Conformal chart helpers (metric lambda(x)^2 dx^2 of curvature K).
double chart_factor(Curvature K, const Eigen::Vector2d& p);
double chart_radius_of(Curvature K, double r_geodesic);
double geodesic_radius_of(Curvature K, double r_chart);

enum class InitialFamily { Chords, Bulged, Perturbed };

PolylineSweepout initial_sweepout(Curvature K, double R, InitialFamily shape,
                                  int n_curves = 41, int n_vertices = 48,
                                  double amplitude = 0.45, unsigned seed = 7);

struct TightenResult {
    PolylineSweepout family;
    std::vector<double> max_length_trace; // value after each step (step 0 = initial)
    bool covering_ok = true;              // swept-region covering held at every step
    bool trace_monotone = true;           // non-increasing up to 1e-12 slack
    int resamplings = 0;
};

// Line-searched discrete curve shortening with endpoints sliding on the
// boundary circle. The max length over the family is non-increasing per step.
TightenResult tighten_1sweepout(const SpaceFormBall& disk, const PolylineSweepout& init,
                                int steps);

std::string trace_to_csv(const std::vector<double>& trace);

} // namespace widthlab
