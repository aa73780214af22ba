#include "widthlab/comparison.hpp"

#include "widthlab/constants.hpp"
#include "widthlab/ode.hpp"
#include "widthlab/quadrature.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace widthlab {

namespace {

double hermite(double s, double r0, double r1, double f0, double f1, double d0, double d1) {
    const double h = r1 - r0;
    const double t = (s - r0) / h;
    const double t2 = t * t, t3 = t2 * t;
    return (2 * t3 - 3 * t2 + 1) * f0 + (t3 - 2 * t2 + t) * h * d0 +
           (-2 * t3 + 3 * t2) * f1 + (t3 - t2) * h * d1;
}

size_t locate(const std::vector<double>& grid, double s) {
    auto it = std::upper_bound(grid.begin(), grid.end(), s);
    size_t i = (it == grid.begin()) ? 0 : size_t(it - grid.begin()) - 1;
    return std::min(i, grid.size() - 2);
}

} // namespace

double ComparisonMap::eval_f(double s) const {
    if (s <= r.front()) return f.front();
    if (s >= r.back()) return f.back();
    const size_t i = locate(r, s);
    return hermite(s, r[i], r[i + 1], f[i], f[i + 1], fp[i], fp[i + 1]);
}

double ComparisonMap::eval_fp(double s) const {
    if (s <= r.front()) return fp.front();
    if (s >= r.back()) return fp.back();
    const size_t i = locate(r, s);
    const double h = r[i + 1] - r[i];
    const double t = (s - r[i]) / h;
    const double t2 = t * t;
    return ((6 * t2 - 6 * t) * f[i] + (3 * t2 - 4 * t + 1) * h * fp[i] +
            (-6 * t2 + 6 * t) * f[i + 1] + (3 * t2 - 2 * t) * h * fp[i + 1]) / h;
}

std::string ComparisonMap::to_json() const {
    nlohmann::ordered_json j;
    j["k"] = k;
    j["K"] = K;
    j["K1"] = K1;
    j["R0"] = R0;
    j["R1"] = R1;
    auto grid = nlohmann::ordered_json::array();
    for (size_t i = 0; i < r.size(); ++i)
        grid.push_back({{"r", r[i]}, {"f", f[i]}, {"fp", fp[i]}});
    j["grid"] = std::move(grid);
    return j.dump(2);
}

ComparisonMap ComparisonMap::from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    ComparisonMap m;
    m.k = j.at("k").get<int>();
    m.K = j.at("K").get<double>();
    m.K1 = j.at("K1").get<double>();
    m.R0 = j.at("R0").get<double>();
    m.R1 = j.at("R1").get<double>();
    for (const auto& row : j.at("grid")) {
        m.r.push_back(row.at("r").get<double>());
        m.f.push_back(row.at("f").get<double>());
        m.fp.push_back(row.at("fp").get<double>());
    }
    m.min_fp = *std::min_element(m.fp.begin(), m.fp.end());
    return m;
}

ComparisonMap solve_f(int k, Curvature K, Curvature K1, double R0, bool allow_reversed,
                      int grid_points) {
    if (k < 1) throw std::invalid_argument("solve_f: k must be >= 1");
    if (!(R0 > 0.0)) throw std::invalid_argument("solve_f: R0 must be positive");
    if (K.K > K1.K && !allow_reversed)
        throw std::invalid_argument("solve_f: requires K <= K1");

    ComparisonMap m;
    m.k = k;
    m.K = K.K;
    m.K1 = K1.K;
    m.R0 = R0;
    m.r.resize(grid_points);
    m.f.resize(grid_points);
    m.fp.resize(grid_points);
    for (int i = 0; i < grid_points; ++i)
        m.r[i] = R0 * double(i) / double(grid_points - 1);

    if (k == 1) {
        // Exponent k-1 = 0 forces f' = 1.
        m.f = m.r;
        std::fill(m.fp.begin(), m.fp.end(), 1.0);
        m.R1 = R0;
        m.min_fp = 1.0;
        return m;
    }

    const auto rhs = [&](double r, double f) {
        if (r <= 0.0) return 1.0;
        const double num = sn(K, r);
        const double den = sn(K1, f);
        if (den <= 0.0) return 1.0;
        return std::pow(num / den, k - 1);
    };

    // Both sides of the ODE vanish like r^{k-1} at 0; start from the series
    // f(r) = r (1 + c r^2) on [0, r_series].
    const double c = double(k - 1) * (K1.K - K.K) / (6.0 * double(k + 2));
    const double r_series = std::min(1e-3, 0.5 * R0);

    double f_running = 0.0;
    double r_running = 0.0;
    for (int i = 0; i < grid_points; ++i) {
        const double r_i = m.r[i];
        if (r_i <= r_series) {
            f_running = r_i * (1.0 + c * r_i * r_i);
        } else {
            if (r_running < r_series) {
                r_running = r_series;
                f_running = r_series * (1.0 + c * r_series * r_series);
            }
            f_running = ode::integrate(rhs, r_running, f_running, r_i, 1e-10);
        }
        r_running = r_i;
        m.f[i] = f_running;
        m.fp[i] = rhs(r_i, f_running);
    }
    m.R1 = m.f.back();
    m.min_fp = *std::min_element(m.fp.begin(), m.fp.end());
    if (!allow_reversed && m.min_fp < 1.0 - 1e-12)
        throw std::runtime_error("solve_f: contraction invariant f' >= 1 violated");
    return m;
}

double integral_residual(const ComparisonMap& map, double s) {
    const int k = map.k;
    const Curvature K{map.K}, K1{map.K1};
    const double lhs = quad::integrate_or_throw(
        [&](double r) { return std::pow(sn(K, r), k - 1); }, 0.0, s, 1e-12);
    const double rhs = quad::integrate_or_throw(
        [&](double r) { return std::pow(sn(K1, r), k - 1); }, 0.0, map.eval_f(s), 1e-12);
    return lhs - rhs;
}

namespace {

double sin_power_integral(double a, double b, int km1) {
    return quad::integrate_or_throw(
        [km1](double r) { return std::pow(std::sin(r), km1); }, a, b, 1e-12);
}

double sinh_power_integral(double a, double b, int km1) {
    return quad::integrate_or_throw(
        [km1](double r) { return std::pow(std::sinh(r), km1); }, a, b, 1e-12);
}

} // namespace

Curvature case2_curvature(double alpha_angle, int k) {
    if (!(alpha_angle > 0.0 && alpha_angle < pi / 2.0))
        throw std::invalid_argument("case2_curvature: alpha must lie in (0, pi/2)");
    const double num = sin_power_integral(0.0, alpha_angle, k - 1);
    const double den = sin_power_integral(0.0, pi / 2.0, k - 1);
    const Curvature K{std::pow(num / den, 2.0 / double(k))};
    const double R0 = alpha_angle / std::sqrt(K.K);
    const auto map = solve_f(k, K, Curvature{1.0}, R0);
    if (std::abs(map.R1 - pi / 2.0) > 1e-7)
        throw std::runtime_error("case2_curvature: endpoint mapping check failed");
    return K;
}

Curvature case3_curvature(double R, int k) {
    if (!(R > 0.0)) throw std::invalid_argument("case3_curvature: R must be positive");
    const double num = sin_power_integral(0.0, pi / 2.0, k - 1);
    const double den = sinh_power_integral(0.0, R, k - 1);
    const Curvature K1{std::pow(num / den, 2.0 / double(k))};
    const auto map = solve_f(k, Curvature{-1.0}, K1, R);
    if (std::abs(map.R1 - pi / (2.0 * std::sqrt(K1.K))) > 1e-7)
        throw std::runtime_error("case3_curvature: endpoint mapping check failed");
    return K1;
}

ContractionReport verify_contraction(const WarpedProfile& h0, const WarpedProfile& h1,
                                     const ComparisonMap& f) {
    ContractionReport rep;
    const int k = f.k;
    const int n_grid = 2048;
    rep.grid_size = n_grid;
    for (int i = 1; i <= n_grid; ++i) {
        const double r = f.R0 * double(i) / double(n_grid);
        const double fr = f.eval_f(r);
        const double fpr = f.eval_fp(r);
        const double lhs1 = fpr * std::pow(h1(fr), k - 1);
        const double rhs1 = std::pow(h0(r), k - 1);
        rep.max_violation_cond1 = std::max(rep.max_violation_cond1, std::abs(lhs1 - rhs1));
        rep.max_violation_cond2 = std::max(rep.max_violation_cond2, h1(fr) - h0(r));
    }
    rep.area_source = ball_area(k, h0);
    rep.area_target = ball_area(k, h1);
    const bool areas_match = std::abs(rep.area_source - rep.area_target) <= 1e-8;
    rep.pass = rep.max_violation_cond1 <= 1e-8 && rep.max_violation_cond2 <= 1e-10 &&
               areas_match && f.min_fp >= 1.0 - 1e-12;
    return rep;
}

} // namespace widthlab
