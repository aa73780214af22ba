#pragma once

#include <functional>
#include <string>
#include <vector>

namespace widthlab {

// Sectional curvature of a simply connected space form, units 1/length^2.
struct Curvature {
    double K = 0.0;
};

// sn_K(r): the warped product profile of the space form of curvature K.
// sin(r sqrt(K))/sqrt(K) for K > 0, r for K = 0, sinh(r sqrt(-K))/sqrt(-K) for K < 0.
double sn(Curvature K, double r);

// d/dr sn_K(r).
double sn_prime(Curvature K, double r);

// Geodesic ball B^n_{R;K} with a distinguished slice dimension k.
struct SpaceFormBall {
    int n = 3;
    int k = 2;
    double R = 1.0;
    Curvature K{0.0};

    void validate() const; // throws std::invalid_argument on a bad combination
};

// Radial warp profile h on [0, R] with h(0) = 0. Holds a smooth evaluator
// plus a tabulated sample of the profile for diagnostics and serialization.
struct WarpedProfile {
    std::function<double(double)> h;
    double R = 1.0;
    std::vector<double> sample_r, sample_h;

    static WarpedProfile from_function(std::function<double(double)> h, double R,
                                       int samples = 256);
    static WarpedProfile space_form(Curvature K, double R, int samples = 256);
    double operator()(double r) const { return h(r); }
};

// Numerical test that h(0) = 0 and g(u) = h(sqrt(u))/sqrt(u) extends
// C^2-smoothly to u = 0, probed by second differences on a dyadic grid.
struct DaggerReport {
    bool pass = false;
    double h_at_zero = 0.0;
    std::vector<double> u_grid;
    std::vector<double> second_differences;
    std::string message;
};
DaggerReport check_dagger(const WarpedProfile& profile);

// beta(k-1) * int_0^R h(r)^{k-1} dr; the k-area of the warped ball.
// k = 1 returns 2R exactly.
double ball_area(int k, const WarpedProfile& profile);

// Radius of the totally geodesic slice through a point at distance t from
// the centre of B_{R;K}, orthogonal to the diameter through that point.
double slice_radius(double R, Curvature K, double t);

} // namespace widthlab
