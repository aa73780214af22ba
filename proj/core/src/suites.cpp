#include "widthlab/suites.hpp"

#include "widthlab/brendle.hpp"
#include "widthlab/comparison.hpp"
#include "widthlab/constants.hpp"
#include "widthlab/mesh.hpp"
#include "widthlab/quadrature.hpp"
#include "widthlab/spaceform.hpp"
#include "widthlab/stability.hpp"
#include "widthlab/sweepout.hpp"
#include "widthlab/varifold.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace widthlab {

namespace {

// measured should equal expected up to tolerance
// Suites run everything by default; an options["criterion"] filter restricts
// the expensive blocks to the ones feeding that acceptance criterion.
bool want(const RunConfig& cfg, int criterion) {
    const auto it = cfg.options.find("criterion");
    if (it == cfg.options.end()) return true;
    return std::stoi(it->second) == criterion;
}

Check target_check(std::string name, std::string anchor, int criterion, double measured,
                   double expected, double tolerance) {
    Check c;
    c.name = std::move(name);
    c.anchor = std::move(anchor);
    c.criterion = criterion;
    c.measured = measured;
    c.expected = expected;
    c.tolerance = tolerance;
    c.pass = std::abs(measured - expected) <= tolerance;
    return c;
}

// measured should not exceed the bound
Check upper_check(std::string name, std::string anchor, int criterion, double measured,
                  double bound) {
    Check c;
    c.name = std::move(name);
    c.anchor = std::move(anchor);
    c.criterion = criterion;
    c.measured = measured;
    c.expected = 0.0;
    c.tolerance = bound;
    c.pass = measured <= bound;
    c.detail = "upper bound";
    return c;
}

// measured should stay above the bound
Check lower_check(std::string name, std::string anchor, int criterion, double measured,
                  double bound) {
    Check c;
    c.name = std::move(name);
    c.anchor = std::move(anchor);
    c.criterion = criterion;
    c.measured = measured;
    c.expected = bound;
    c.tolerance = 0.0;
    c.pass = measured >= bound;
    c.detail = "lower bound";
    return c;
}

Check flag_check(std::string name, std::string anchor, int criterion, bool ok) {
    Check c;
    c.name = std::move(name);
    c.anchor = std::move(anchor);
    c.criterion = criterion;
    c.measured = ok ? 1.0 : 0.0;
    c.expected = 1.0;
    c.tolerance = 0.0;
    c.pass = ok;
    return c;
}

std::string format_double(double v) {
    std::ostringstream os;
    os.precision(12);
    os << v;
    return os.str();
}

// ---------------------------------------------------------------- widths

void run_widths(const RunConfig& cfg, SuiteReport& rep) {
    const double ts = cfg.tolerance_scale;
    const int grid = cfg.resolution > 0 ? cfg.resolution : 41;

    struct BallSpec {
        int n, k;
        double R, K;
    };
    const BallSpec balls[12] = {
        {2, 1, 1.0, 0.0},  {3, 1, 1.3, -1.0},          {3, 1, 0.6, 0.5},
        {3, 2, 1.0, 0.0},  {3, 2, 0.8, 1.0},           {3, 2, 1.2, -1.0},
        {4, 2, pi / 4, 1.0}, {4, 3, 1.0, 0.0},         {4, 3, 0.9, 0.5},
        {4, 3, 1.1, -0.7}, {3, 2, pi / 2, 1.0},        {4, 3, pi / 2, 1.0},
    };

    for (const BallSpec& b : balls) {
        SpaceFormBall ball{b.n, b.k, b.R, Curvature{b.K}};
        ball.validate();
        const SliceFamily family = equatorial_family(ball, grid);
        const double max_area = *std::max_element(family.area.begin(), family.area.end());
        const double central = ball_area(b.k, WarpedProfile::space_form(Curvature{b.K}, b.R));
        std::ostringstream name;
        name << "slice max equals central ball (n=" << b.n << " k=" << b.k << " R=" << b.R
             << " K=" << b.K << ")";
        rep.checks.push_back(upper_check(name.str(), "warped ball area of the middle slice", 1,
                                         std::abs(max_area - central), 1e-10 * ts));
    }

    for (int k = 1; k <= 3; ++k) {
        SpaceFormBall ball{k + 1, k, pi / 2, Curvature{1.0}};
        const double area = ball_area(k, WarpedProfile::space_form(Curvature{1.0}, pi / 2));
        rep.checks.push_back(target_check(
            "hemisphere ball area (k=" + std::to_string(k) + ")",
            "half the round sphere area", 1, area, 0.5 * beta(k), 1e-8 * ts));
        const SliceFamily family = equatorial_family(ball, grid);
        double lo = family.area.front(), hi = family.area.front();
        for (size_t i = 0; i < family.area.size(); ++i) {
            // the end slices are degenerate points only in the strictly
            // convex case; on the hemisphere every slice is equatorial
            lo = std::min(lo, family.area[i]);
            hi = std::max(hi, family.area[i]);
        }
        rep.checks.push_back(upper_check(
            "hemisphere slice family is constant (k=" + std::to_string(k) + ")",
            "all slices pass through the pole pair", 1, hi - lo, 1e-8 * ts));
    }

    for (double K : {-1.0, 0.0, 1.0}) {
        const DaggerReport dag = check_dagger(WarpedProfile::space_form(Curvature{K}, 1.0));
        rep.checks.push_back(flag_check("profile smoothness gate (K=" + format_double(K) + ")",
                                        "even extension second differences", 0, dag.pass));
    }
}

// ------------------------------------------------------------ comparison

double endpoint_by_bisection(int k, Curvature K, Curvature K1, double R0) {
    // independent endpoint: match the defining integrals with a root find
    const auto profile_int = [k](Curvature c, double upper) {
        return quad::integrate_or_throw(
            [&](double r) { return std::pow(sn(c, r), k - 1); }, 0.0, upper, 1e-13);
    };
    const double target = profile_int(K, R0);
    double lo = 0.0;
    double hi = K1.K > 0 ? pi / std::sqrt(K1.K) - 1e-12 : 10.0;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (profile_int(K1, mid) < target) lo = mid;
        else hi = mid;
        if (hi - lo < 1e-13) break;
    }
    return 0.5 * (lo + hi);
}

void run_comparison_case(const RunConfig& cfg, SuiteReport& rep, const std::string& label,
                         int k, Curvature K, Curvature K1, double R0) {
    const double ts = cfg.tolerance_scale;
    const int grid = cfg.resolution > 0 ? cfg.resolution : 4097;
    const ComparisonMap map = solve_f(k, K, K1, R0, false, grid);

    double worst_residual = 0.0;
    for (int i = 1; i <= 32; ++i) {
        const double s = R0 * double(i) / 32.0;
        worst_residual = std::max(worst_residual, std::abs(integral_residual(map, s)));
    }
    rep.checks.push_back(upper_check("ode residual " + label, "defining integral identity", 2,
                                     worst_residual, 1e-8 * ts));
    rep.checks.push_back(upper_check("expansion lower bound " + label,
                                     "monotone slope invariant", 2, 1.0 - map.min_fp,
                                     1e-12 * ts));

    const double endpoint = endpoint_by_bisection(k, K, K1, R0);
    rep.checks.push_back(target_check("endpoint mapping " + label,
                                      "bisection on the integral identity", 2, map.eval_f(R0),
                                      endpoint, 1e-7 * ts));

    const WarpedProfile h0 = WarpedProfile::space_form(K, R0);
    const WarpedProfile h1 = WarpedProfile::space_form(K1, map.eval_f(R0));
    const ContractionReport con = verify_contraction(h0, h1, map);
    rep.checks.push_back(upper_check("area substitution identity " + label,
                                     "change of variables through the map", 2,
                                     std::abs(con.area_source - con.area_target), 1e-8 * ts));
    rep.checks.push_back(upper_check("profile contraction pointwise " + label,
                                     "slope times target profile", 2, con.max_violation_cond1,
                                     1e-8 * ts));
    rep.checks.push_back(upper_check("profile ordering " + label, "target below source", 2,
                                     con.max_violation_cond2, 1e-10 * ts));
}

void run_comparison(const RunConfig& cfg, SuiteReport& rep) {
    for (int k = 1; k <= 3; ++k) {
        const std::string suffix = "(k=" + std::to_string(k) + ")";

        run_comparison_case(cfg, rep, "flat to round " + suffix, k, Curvature{0.0},
                            Curvature{1.0}, 1.0);

        const double alpha_angle = 1.0;
        const Curvature K2 = case2_curvature(alpha_angle, k);
        run_comparison_case(cfg, rep, "cap to hemisphere " + suffix, k, K2, Curvature{1.0},
                            alpha_angle / std::sqrt(K2.K));

        const Curvature K13 = case3_curvature(1.0, k);
        run_comparison_case(cfg, rep, "hyperbolic to round " + suffix, k, Curvature{-1.0}, K13,
                            1.0);
        if (k == 2) {
            rep.checks.push_back(target_check(
                "matched curvature closed form (k=2)", "1/(cosh R - 1) at R = 1", 2, K13.K,
                1.8413471884155846, 1e-9 * cfg.tolerance_scale));
        }
    }
}

// -------------------------------------------------------------- sweepout

void run_sweepout(const RunConfig& cfg, SuiteReport& rep) {
    const double ts = cfg.tolerance_scale;
    const int steps = cfg.resolution > 0 ? cfg.resolution : 3000;
    const double R = 1.0;

    for (double K : {-1.0, 0.0, 0.5}) {
        SpaceFormBall disk{2, 1, R, Curvature{K}};
        const PolylineSweepout init =
            initial_sweepout(Curvature{K}, R, InitialFamily::Bulged, 41, 48, 0.45, cfg.seed);
        const TightenResult res = tighten_1sweepout(disk, init, steps);
        const std::string suffix = "(K=" + format_double(K) + ")";

        rep.checks.push_back(target_check("tightened width bound " + suffix,
                                          "diameter of the disk", 3,
                                          res.family.max_length() / (2.0 * R), 1.0, 0.01 * ts));
        rep.checks.push_back(
            flag_check("monotone max-length trace " + suffix, "line search invariant", 3,
                       res.trace_monotone));
        rep.checks.push_back(flag_check("sweep covering maintained " + suffix,
                                        "swept quadrilateral surrogate", 3, res.covering_ok));
        rep.checks.push_back(lower_check("initial family is slack " + suffix,
                                         "bulged seed family", 0,
                                         res.max_length_trace.front() / (2.0 * R), 1.05));
    }
}

// --------------------------------------------------------------- brendle

void run_brendle(const RunConfig& cfg, SuiteReport& rep) {
    const double ts = cfg.tolerance_scale;
    const int samples = cfg.resolution > 0 ? cfg.resolution : 17000;
    std::mt19937 rng(cfg.seed);
    std::normal_distribution<double> gauss(0.0, 1.0);

    int combo = 0;
    for (int n : {3, 4}) {
        for (int k = 1; k <= 3; ++k) {
            VecN y = VecN::Zero(n);
            for (int i = 0; i < n; ++i) y(i) = gauss(rng);
            y.normalize();

            const FieldPropertyReport fp =
                check_lemma_properties(y, k, samples, cfg.seed + 100 * unsigned(combo));
            const std::string suffix = "(k=" + std::to_string(k) + " n=" + std::to_string(n) + ")";

            rep.checks.push_back(lower_check("divergence inequality slack " + suffix,
                                             "random plane probes", 4, fp.min_slack_i,
                                             -1e-8 * ts));
            rep.checks.push_back(upper_check("sphere tangency " + suffix,
                                             "field pairing with the position", 4,
                                             fp.tangency_defect, 1e-9 * ts));
            const double e_small = fp.decay_e.front();
            const double e_unit = fp.decay_e[6]; // t = 1.0 on the pinned schedule
            rep.checks.push_back(upper_check("pole cancellation decay " + suffix,
                                             "scaled envelope near the anchor", 4,
                                             e_small, 0.05 * e_unit));
            ++combo;
        }
    }
}

// -------------------------------------------------------------- varifold

void run_varifold(const RunConfig& cfg, SuiteReport& rep) {
    const double ts = cfg.tolerance_scale;
    const int n_max = cfg.resolution > 0 ? cfg.resolution : 200;
    const int Ns[3] = {std::max(8, n_max / 4), std::max(16, n_max / 2), std::max(32, n_max)};

    VecN y = VecN::Zero(3);
    y(0) = 1.0;

    const std::vector<AnalyticVectorField> basis = tangent_test_basis();
    std::vector<double> slacks;

    for (const int N : Ns) {
        const DiscreteVarifold V = equatorial_disk_fixture(N);
        const std::string suffix = "(N=" + std::to_string(N) + ")";

        if (want(cfg, 5)) {
            const PipelineReport pipe = fb_estimate_pipeline(V, y);
            rep.checks.push_back(target_check("boundary density " + suffix,
                                              "half plane through the anchor", 5, pipe.theta,
                                              0.5, 0.05 * ts));
            rep.checks.push_back(lower_check("implied mass bound " + suffix,
                                             "two alpha_k times the boundary density", 5,
                                             pipe.implied_bound, 0.98 * alpha(2)));
            rep.checks.push_back(flag_check("cutoff identity chain " + suffix,
                                            "per-atom algebraic inequality", 5, pipe.chains_ok));
            rep.checks.push_back(flag_check("interior divergence cap " + suffix,
                                            "half mass per unit of k", 5, pipe.t1_bounded));
            slacks.push_back(std::abs(pipe.mass - pipe.implied_bound));
        }

        if (want(cfg, 6)) {
            double fv_max = 0.0;
            std::string fv_worst;
            for (const AnalyticVectorField& X : basis) {
                const double fv = std::abs(first_variation(V, X));
                if (fv > fv_max) {
                    fv_max = fv;
                    fv_worst = X.name;
                }
            }
            Check fv_check = upper_check("stationarity over the field basis " + suffix,
                                         "balanced ring quadrature", 6, fv_max, 0.5 / N * ts);
            fv_check.detail = "worst field: " + fv_worst;
            rep.checks.push_back(fv_check);
        }
    }

    if (want(cfg, 5)) {
        double worst_increase = -1e300;
        for (size_t i = 1; i < slacks.size(); ++i) {
            worst_increase = std::max(worst_increase, slacks[i] - slacks[i - 1]);
        }
        rep.checks.push_back(upper_check("mass bound slack decreases with refinement",
                                         "three-resolution fixture ladder", 5, worst_increase,
                                         1e-12));

        {
            const DiscreteVarifold V2 = doubled_disk_fixture(Ns[1]);
            const PipelineReport pipe = fb_estimate_pipeline(V2, y);
            rep.checks.push_back(lower_check("implied mass bound (doubled sheet)",
                                             "twice the single sheet target", 5,
                                             pipe.implied_bound, 0.98 * 2.0 * alpha(2)));
        }

        {
            const SurfaceMesh cat = critical_catenoid_mesh(96, 48);
            rep.checks.push_back(upper_check("minimality gate (catenoid)",
                                             "stored mean curvature field", 5,
                                             minimality_residual(cat), 1e-3 * ts));
            const DiscreteVarifold Vc = mesh_to_varifold(cat);
            const CatenoidParameters par = critical_catenoid_parameters();
            VecN yc = VecN::Zero(3);
            yc(0) = par.scale * std::cosh(par.T);
            yc(2) = par.scale * par.T;
            const PipelineReport pipe = fb_estimate_pipeline(Vc, yc);
            Check c = lower_check("strict mass slack (catenoid)",
                                  "area exceeds the half-density bound", 5,
                                  pipe.mass - pipe.implied_bound, 0.1);
            c.detail = "mass " + format_double(pipe.mass) + ", bound " +
                       format_double(pipe.implied_bound);
            rep.checks.push_back(c);
        }
    }

    if (want(cfg, 6)) {
        const DiscreteVarifold Vo = offcenter_disk_fixture(Ns[1], 0.5);
        double fv_max = 0.0;
        for (const AnalyticVectorField& X : basis) {
            fv_max = std::max(fv_max, std::abs(first_variation(Vo, X)));
        }
        rep.checks.push_back(lower_check("off-centre sheet is not stationary",
                                         "vertical translation pairing", 6, fv_max, 0.1));
    }

    if (want(cfg, 0)) {
        const DiscreteVarifold V = equatorial_disk_fixture(Ns[1]);
        const MonotonicityReport mono =
            monotonicity_check(V, y, {0.1, 0.2, 0.3, 0.4, 0.5}, cfg.gamma);
        rep.checks.push_back(flag_check("corrected ratio monotonicity",
                                        "annulus transport inequality", 0, mono.pass));
    }
}

// ------------------------------------------------------------- stability

void run_stability(const RunConfig& cfg, SuiteReport& rep) {
    const double ts = cfg.tolerance_scale;
    const int m_q = cfg.resolution > 0 ? cfg.resolution : 40;
    const int m_eig = std::max(6, m_q / 2);

    struct DiskSpec {
        const char* label;
        double K, R;
        double q_expected;
        double q_tol;
        bool cosh_weight;
    };
    const DiskSpec disks[3] = {
        {"flat disk", 0.0, 1.0, -2.0 * pi, 0.02, false},
        {"hemisphere", 1.0, pi / 2, -4.0 * pi, 0.05, false},
        {"hyperbolic disk", -1.0, 1.0, -2.0 * pi * std::cosh(1.0), 0.05, true},
    };

    if (want(cfg, 7)) {
        for (const DiskSpec& d : disks) {
            const SurfaceMesh mesh = geodesic_disk_mesh(Curvature{d.K}, d.R, m_q);
            Eigen::VectorXd phi = Eigen::VectorXd::Ones(mesh.nv());
            if (d.cosh_weight) {
                const Eigen::VectorXd& r = mesh.fields.at("geodesic_r");
                for (int v = 0; v < mesh.nv(); ++v) phi(v) = std::cosh(r(v));
            }
            const double q_lumped = q_form(mesh, phi, false);
            const double q_consistent = q_form(mesh, phi, true);
            const std::string suffix = std::string("(") + d.label + ")";
            rep.checks.push_back(target_check("second variation value " + suffix,
                                              "closed form via parts", 7, q_lumped,
                                              d.q_expected, d.q_tol * ts));
            rep.checks.push_back(target_check("second variation, consistent route " + suffix,
                                              "independent mass discretisation", 7,
                                              q_consistent, d.q_expected, d.q_tol * ts));

            const SurfaceMesh coarse = geodesic_disk_mesh(Curvature{d.K}, d.R, m_eig);
            const RobinSpectrum spec = robin_spectrum(coarse, 4);
            Check c1 = upper_check("ground state is unstable " + suffix,
                                   "negative principal eigenvalue", 7, spec.lambda1, -1e-6);
            c1.detail = "lambda1 = " + format_double(spec.lambda1);
            rep.checks.push_back(c1);
            rep.checks.push_back(lower_check("spectral gap is open " + suffix,
                                             "simple ground state", 7, spec.gap, 1e-6));
        }
    }

    if (want(cfg, 0)) {
        const SurfaceMesh coarse = geodesic_disk_mesh(Curvature{0.0}, 1.0, m_eig);
        const RobinSpectrum spec = robin_spectrum(coarse, 2);
        rep.checks.push_back(target_check("flat disk principal eigenvalue",
                                          "Bessel quotient root", 0, spec.lambda1,
                                          -2.5865628591780898, 0.05 * ts));
    }

    if (want(cfg, 9)) {
        const HessianReport hess = hess_identity_check(1.0, 1000, cfg.seed);
        rep.checks.push_back(upper_check("distance potential Hessian identity",
                                         "second differences along geodesics", 9,
                                         hess.max_residual, 1e-6 * ts));
    }
}

// --------------------------------------------------------- isoperimetric

void run_isoperimetric(const RunConfig& cfg, SuiteReport& rep) {
    const double ts = cfg.tolerance_scale;
    const int rings = cfg.resolution > 0 ? cfg.resolution : 40;
    const SurfaceMesh mesh = geodesic_disk_mesh(Curvature{-1.0}, 1.0, rings);
    const IsoReport iso = iso_check(mesh);

    rep.checks.push_back(upper_check("minimality gate (geodesic disk)",
                                     "stored mean curvature field", 8, iso.minimality,
                                     1e-3 * ts));
    rep.checks.push_back(upper_check("radial field divergence is unit",
                                     "projection identity with exact frames", 8,
                                     std::max(std::abs(iso.div_min - 1.0),
                                              std::abs(iso.div_max - 1.0)),
                                     1e-6 * ts));
    Check ident = upper_check("area equals weighted perimeter", "divergence theorem", 8,
                              iso.identity_residual, 1e-3 * ts);
    ident.detail = "area " + format_double(iso.area) + ", perimeter " +
                   format_double(iso.perimeter);
    rep.checks.push_back(ident);
    rep.checks.push_back(upper_check("isoperimetric ratio sits at equality",
                                     "round disk equality case", 8,
                                     std::abs(iso.ratio_residual), 0.005 * ts));
}

} // namespace

// ---------------------------------------------------------------- public

bool SuiteReport::pass() const {
    for (const Check& c : checks) {
        if (!c.pass) return false;
    }
    return true;
}

int SuiteReport::criteria_mask() const {
    int mask = 0;
    for (const Check& c : checks) {
        if (c.criterion > 0) mask |= 1 << c.criterion;
    }
    return mask;
}

std::string SuiteReport::to_json() const {
    nlohmann::ordered_json j;
    j["suite"] = suite;
    j["seed"] = seed;
    j["pass"] = pass();
    j["elapsed_seconds"] = elapsed_seconds;
    auto arr = nlohmann::ordered_json::array();
    for (const Check& c : checks) {
        nlohmann::ordered_json cj;
        cj["name"] = c.name;
        cj["anchor"] = c.anchor;
        cj["criterion"] = c.criterion;
        cj["measured"] = c.measured;
        cj["expected"] = c.expected;
        cj["tolerance"] = c.tolerance;
        cj["pass"] = c.pass;
        if (!c.detail.empty()) cj["detail"] = c.detail;
        arr.push_back(cj);
    }
    j["checks"] = arr;
    return j.dump(2) + "\n";
}

std::string SuiteReport::summary() const {
    std::ostringstream os;
    os << "suite " << suite << ": " << (pass() ? "PASS" : "FAIL") << "\n";
    for (const Check& c : checks) {
        os << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.name
           << ": measured=" << format_double(c.measured);
        if (c.detail != "upper bound" && c.detail != "lower bound") {
            os << " expected=" << format_double(c.expected);
        }
        os << " tol=" << format_double(c.tolerance);
        if (c.criterion > 0) os << " [criterion " << c.criterion << "]";
        os << "\n";
    }
    return os.str();
}

std::vector<std::string> suite_names() {
    return {"widths",   "comparison", "sweepout-1d",  "brendle",
            "varifold", "stability",  "isoperimetric"};
}

SuiteReport run_suite(const RunConfig& config) {
    SuiteReport rep;
    rep.suite = config.suite;
    rep.seed = config.seed;
    const auto start = std::chrono::steady_clock::now();

    if (config.suite == "widths") run_widths(config, rep);
    else if (config.suite == "comparison") run_comparison(config, rep);
    else if (config.suite == "sweepout-1d") run_sweepout(config, rep);
    else if (config.suite == "brendle") run_brendle(config, rep);
    else if (config.suite == "varifold") run_varifold(config, rep);
    else if (config.suite == "stability") run_stability(config, rep);
    else if (config.suite == "isoperimetric") run_isoperimetric(config, rep);
    else throw std::invalid_argument("run_suite: unknown suite " + config.suite);

    rep.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

std::vector<std::string> fixture_names() {
    return {"equatorial-disk", "doubled-disk", "offcenter-disk", "critical-catenoid",
            "geodesic-disk-hyperbolic"};
}

void export_fixture(const std::string& name, const std::string& path) {
    std::string payload;
    if (name == "equatorial-disk") payload = to_jsonl(equatorial_disk_fixture(100));
    else if (name == "doubled-disk") payload = to_jsonl(doubled_disk_fixture(100));
    else if (name == "offcenter-disk") payload = to_jsonl(offcenter_disk_fixture(100, 0.5));
    else if (name == "critical-catenoid") payload = to_off(critical_catenoid_mesh(96, 48));
    else if (name == "geodesic-disk-hyperbolic")
        payload = to_off(geodesic_disk_mesh(Curvature{-1.0}, 1.0, 40));
    else throw std::invalid_argument("export_fixture: unknown fixture " + name);

    std::ofstream out(path);
    if (!out) throw std::runtime_error("export_fixture: cannot open " + path);
    out << payload;
    if (!out) throw std::runtime_error("export_fixture: write failed for " + path);
}

} // namespace widthlab
