#pragma once

#include "widthlab/varifold.hpp"

#include <vector>

namespace widthlab {

// Boundary comparison field anchored at y on the unit sphere:
//   Y(x) = x/2 - (x-y)/|x-y|^k - (k-2)/2 * int_0^1 (tx-y)/|tx-y|^k dt.
VecN brendle_Y(const VecN& y, int k, const VecN& x);
MatN brendle_DY(const VecN& y, int k, const VecN& x);

// Interior variant anchored at y inside the ball, with the image pole
// y/|y|^2 and the ray integral truncated at |y|.
VecN interior_field(const VecN& y, int k, const VecN& x);
MatN interior_DY(const VecN& y, int k, const VecN& x);

struct FieldPropertyReport {
    int k = 0;
    int n = 0;
    int samples = 0;
    // (i): min over samples of [k/2 - k|pi_S_perp(x-y)|^2 rho^{-k-2} - div_S Y].
    double min_slack_i = 0.0;
    VecN worst_x;
    // (ii): max |<Y(x), x>| over unit-sphere samples.
    double tangency_defect = 0.0;
    // (iii)/(iv): decay envelope e(t) on a dyadic schedule.
    std::vector<double> decay_t;
    std::vector<double> decay_e;
    bool inequality_holds = false; // min_slack_i >= -1e-8
    bool decay_holds = false;      // e(0.01) <= 0.05 e(1)
};

// Random-sample verification of the field properties for anchor y.
FieldPropertyReport check_lemma_properties(const VecN& y, int k, int samples,
                                           unsigned seed = 42);

struct PipelinePass {
    double eps = 0.0, r = 0.0;
    double lhs = 0.0;       // (1/(eps r)) sum_annulus w rho^{1-k}
    double t1 = 0.0;        // sum w eta div_S Y
    double t2 = 0.0;        // (1/(eps r)) sum_annulus w rho^{1-k} |D_S_perp rho|^2
    double t3 = 0.0;        // (1/(eps r)) sum_annulus w |Y + rho^{1-k} D rho|
    double fv_cutoff = 0.0; // first variation of the cutoff field eta(rho) Y
    bool chain_ok = false;  // lhs <= t1 + t2 + t3 - fv_cutoff (pointwise algebra)
};

struct PipelineReport {
    int k = 0;
    VecN y;
    double mass = 0.0;
    std::vector<PipelinePass> passes;
    std::vector<double> eps_schedule;
    std::vector<double> lhs_extrapolated; // r -> 0 intercept per eps
    DensityReport density_at_y;
    double theta = 0.0;          // measured density at y
    double implied_bound = 0.0;  // 2 alpha_k theta
    double final_residual = 0.0; // (k/2) M - k alpha_k theta  (eps -> 0)
    bool t1_bounded = false;     // t1 <= (k/2) M at every pass
    bool chains_ok = false;
    bool density_converged = false;
};

// Evaluates the cutoff first-variation identity on a discrete fixture for
// every (r, eps) in the schedules, extrapolates r -> 0 and eps -> 0, and
// reports the implied lower mass bound 2 alpha_k Theta.
PipelineReport fb_estimate_pipeline(const DiscreteVarifold& V, const VecN& y,
                                    std::vector<double> r_schedule = {0.4, 0.3, 0.2},
                                    std::vector<double> eps_schedule = {0.5, 0.25, 0.125});

} // namespace widthlab
