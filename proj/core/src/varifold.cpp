#include "widthlab/varifold.hpp"

#include "widthlab/constants.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>

namespace widthlab {

double mass(const DiscreteVarifold& V) {
    double total = 0.0;
    for (const auto& a : V.atoms) total += a.w;
    return total;
}

double div_S(const MatN& frame, const MatN& DX) {
    double d = 0.0;
    for (int j = 0; j < frame.cols(); ++j) d += frame.col(j).dot(DX * frame.col(j));
    return d;
}

namespace {

MatN jacobian_of(const AnalyticVectorField& X, const VecN& x) {
    if (X.DX) return X.DX(x);
    // Central finite differences for fields without an analytic Jacobian.
    const double h = 1e-5;
    const int n = int(x.size());
    MatN J(n, n);
    for (int j = 0; j < n; ++j) {
        VecN xp = x, xm = x;
        xp[j] += h;
        xm[j] -= h;
        J.col(j) = (X.X(xp) - X.X(xm)) / (2.0 * h);
    }
    return J;
}

} // namespace

double first_variation(const DiscreteVarifold& V, const AnalyticVectorField& X) {
    double total = 0.0;
    for (const auto& a : V.atoms) total += a.w * div_S(a.frame, jacobian_of(X, a.x));
    return total;
}

namespace {

Eigen::Vector3d basis3(int i) {
    Eigen::Vector3d e = Eigen::Vector3d::Zero();
    e[i] = 1.0;
    return e;
}

AnalyticVectorField rotation_field(int axis) {
    const Eigen::Vector3d a = basis3(axis);
    MatN skew = MatN::Zero(3, 3);
    skew(0, 1) = -a.z(); skew(1, 0) = a.z();
    skew(0, 2) = a.y();  skew(2, 0) = -a.y();
    skew(1, 2) = -a.x(); skew(2, 1) = a.x();
    return {
        "rotation_" + std::string(1, char('x' + axis)),
        [a](const VecN& x) -> VecN { return a.cross(Eigen::Vector3d(x.head<3>())); },
        [skew](const VecN&) -> MatN { return skew; },
        true,
    };
}

AnalyticVectorField projected_translation_field(int i) {
    const Eigen::Vector3d e = basis3(i);
    return {
        "translation_" + std::string(1, char('x' + i)),
        [e](const VecN& x) -> VecN { return VecN(e - e.dot(x.head<3>()) * x.head<3>()); },
        [e, i](const VecN& x) -> MatN {
            MatN d = MatN::Zero(3, 3);
            d -= x.head<3>() * e.transpose();
            d -= x[i] * Eigen::Matrix3d::Identity();
            return d;
        },
        true,
    };
}

AnalyticVectorField shear_field(int ia, int ib) {
    const Eigen::Vector3d a = basis3(ia), b = basis3(ib);
    return {
        "shear_" + std::string(1, char('x' + ia)) + std::string(1, char('x' + ib)),
        [a, b](const VecN& xv) -> VecN {
            const Eigen::Vector3d x = xv.head<3>();
            return VecN(a.dot(x) * b + b.dot(x) * a - 2.0 * a.dot(x) * b.dot(x) * x);
        },
        [a, b](const VecN& xv) -> MatN {
            const Eigen::Vector3d x = xv.head<3>();
            MatN d = b * a.transpose() + a * b.transpose();
            d -= 2.0 * (b.dot(x) * x * a.transpose() + a.dot(x) * x * b.transpose() +
                        a.dot(x) * b.dot(x) * Eigen::Matrix3d::Identity());
            return d;
        },
        true,
    };
}

AnalyticVectorField radial_field(int i) {
    const Eigen::Vector3d e = basis3(i);
    return {
        "radial_" + std::string(1, char('x' + i)),
        [e](const VecN& x) -> VecN { return VecN((1.0 - x.head<3>().squaredNorm()) * e); },
        [e](const VecN& x) -> MatN { return MatN(-2.0 * e * x.head<3>().transpose()); },
        true,
    };
}

} // namespace

std::vector<AnalyticVectorField> tangent_test_basis() {
    std::vector<AnalyticVectorField> fields;
    for (int i = 0; i < 3; ++i) fields.push_back(rotation_field(i));
    for (int i = 0; i < 3; ++i) fields.push_back(projected_translation_field(i));
    fields.push_back(shear_field(0, 1));
    fields.push_back(shear_field(0, 2));
    fields.push_back(shear_field(1, 2));
    for (int i = 0; i < 3; ++i) fields.push_back(radial_field(i));
    return fields;
}

double tangency_defect(const AnalyticVectorField& X, int n, int samples, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss;
    double worst = 0.0;
    for (int s = 0; s < samples; ++s) {
        VecN x(n);
        for (int i = 0; i < n; ++i) x[i] = gauss(rng);
        x /= x.norm();
        worst = std::max(worst, std::abs(x.dot(X.X(x))));
    }
    return worst;
}

namespace {

double ball_measure(const DiscreteVarifold& V, const VecN& y, double r, double smoothing) {
    double total = 0.0;
    for (const auto& a : V.atoms) {
        const double rho = (a.x - y).norm();
        if (smoothing > 0.0) {
            total += a.w * 0.5 * (1.0 + std::tanh((r - rho) / smoothing));
        } else if (rho <= r) {
            total += a.w;
        }
    }
    return total;
}

} // namespace

DensityReport density(const DiscreteVarifold& V, const VecN& x, std::vector<double> radii,
                      double smoothing) {
    if (radii.size() < 2) throw std::invalid_argument("density: need at least two radii");
    DensityReport rep;
    rep.point = x;
    rep.smoothing = smoothing;
    rep.boundary_point = V.unit_ball && std::abs(x.norm() - 1.0) < 1e-9;
    const double ak = alpha(V.k);
    for (double r : radii) {
        rep.radii.push_back(r);
        rep.ratios.push_back(ball_measure(V, x, r, smoothing) / (ak * std::pow(r, V.k)));
    }
    // Least-squares line ratio = theta + c r; the intercept is the density.
    const size_t m = radii.size();
    double sr = 0, srr = 0, sm = 0, srm = 0;
    for (size_t i = 0; i < m; ++i) {
        sr += rep.radii[i];
        srr += rep.radii[i] * rep.radii[i];
        sm += rep.ratios[i];
        srm += rep.radii[i] * rep.ratios[i];
    }
    const double det = double(m) * srr - sr * sr;
    rep.raw = (srr * sm - sr * srm) / det;
    const double slope = (double(m) * srm - sr * sm) / det;
    for (size_t i = 0; i < m; ++i) {
        const double fit = rep.raw + slope * rep.radii[i];
        rep.fit_residual = std::max(rep.fit_residual, std::abs(fit - rep.ratios[i]));
    }
    rep.modified = rep.boundary_point ? 2.0 * rep.raw : rep.raw;
    return rep;
}

MonotonicityReport monotonicity_check(const DiscreteVarifold& V, const VecN& y,
                                      std::vector<double> grid, double gamma) {
    if (grid.size() < 2) throw std::invalid_argument("monotonicity_check: need a grid");
    std::sort(grid.begin(), grid.end());
    MonotonicityReport rep;
    rep.gamma = gamma;
    rep.grid = grid;
    const int k = V.k;
    const auto corrected = [&](double t) {
        return std::pow(1.0 + gamma * t, k) * ball_measure(V, y, t, 0.0) / std::pow(t, k);
    };
    for (double t : grid) {
        const double b = ball_measure(V, y, t, 0.0);
        rep.raw_ratio.push_back(b / std::pow(t, k));
        rep.corrected_ratio.push_back(std::pow(1.0 + gamma * t, k) * b / std::pow(t, k));
    }
    const double h_probe = std::max(2.0 * V.spacing, 1e-3);
    rep.min_margin = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i + 1 < grid.size(); ++i) {
        const double s = grid[i], t = grid[i + 1];
        double annulus = 0.0;
        for (const auto& a : V.atoms) {
            const double rho = (a.x - y).norm();
            if (rho <= s || rho > t || rho == 0.0) continue;
            const VecN dir = (a.x - y) / rho;
            const double tangential = (a.frame.transpose() * dir).squaredNorm();
            const double perp = std::max(0.0, 1.0 - tangential);
            annulus += a.w * perp / ((1.0 + gamma * rho) * std::pow(rho, k));
        }
        rep.annulus_integral.push_back(annulus);
        // Shell-count jitter estimate: one atom layer at each sphere.
        const double shell_s =
            (ball_measure(V, y, s + h_probe, 0.0) - ball_measure(V, y, std::max(0.0, s - h_probe), 0.0)) /
            (2.0 * h_probe);
        const double shell_t =
            (ball_measure(V, y, t + h_probe, 0.0) - ball_measure(V, y, t - h_probe, 0.0)) /
            (2.0 * h_probe);
        const double slack =
            2.0 * V.spacing *
            (shell_s * std::pow(1.0 + gamma * s, k) / std::pow(s, k) +
             shell_t * std::pow(1.0 + gamma * t, k) / std::pow(t, k));
        rep.discretisation_slack.push_back(slack);
        const double margin = corrected(t) - corrected(s) - annulus + slack;
        rep.min_margin = std::min(rep.min_margin, margin);
    }
    rep.pass = rep.min_margin >= 0.0;
    return rep;
}

double excess(const DiscreteVarifold& V, const VecN& y, double cutoff) {
    if (cutoff < 0.0) cutoff = 3.0 * V.spacing;
    double total = 0.0;
    for (const auto& a : V.atoms) {
        const VecN d = a.x - y;
        const double rho = d.norm();
        if (rho <= cutoff) continue;
        const double tangential = (a.frame.transpose() * d).squaredNorm();
        const double perp2 = std::max(0.0, d.squaredNorm() - tangential);
        total += a.w * perp2 / std::pow(rho, V.k + 2);
    }
    return total;
}

ConvexHullReport convex_hull_check(const DiscreteVarifold& V, int directions, unsigned seed) {
    ConvexHullReport rep;
    const double band = std::max(2.0 * V.spacing, 1e-6);
    std::vector<const Atom*> boundary;
    for (const auto& a : V.atoms)
        if (a.x.norm() >= 1.0 - band) boundary.push_back(&a);
    rep.boundary_atoms = int(boundary.size());
    if (boundary.empty()) return rep;
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss;
    for (int d = 0; d < directions; ++d) {
        VecN u(V.n);
        for (int i = 0; i < V.n; ++i) u[i] = gauss(rng);
        u /= u.norm();
        double support = -std::numeric_limits<double>::infinity();
        for (const Atom* b : boundary) support = std::max(support, u.dot(b->x));
        for (const auto& a : V.atoms)
            rep.max_outside = std::max(rep.max_outside, u.dot(a.x) - support);
    }
    rep.pass = rep.max_outside <= band + 1e-9;
    return rep;
}

double plane_spread(const DiscreteVarifold& V) {
    if (V.atoms.empty()) return 0.0;
    const MatN& f0 = V.atoms.front().frame;
    const MatN p0 = f0 * f0.transpose();
    double spread = 0.0;
    for (const auto& a : V.atoms) {
        const MatN p = a.frame * a.frame.transpose();
        spread = std::max(spread, (p - p0).norm());
    }
    return spread;
}

namespace {

DiscreteVarifold planar_disk(int N, double weight, const Eigen::Vector3d& normal, double offset) {
    if (N < 2) throw std::invalid_argument("disk fixture: N must be >= 2");
    DiscreteVarifold V;
    V.n = 3;
    V.k = 2;
    const double disk_radius = std::sqrt(std::max(0.0, 1.0 - offset * offset));
    const double dr = disk_radius / N;
    V.spacing = dr;

    const Eigen::Vector3d nu = normal.normalized();
    Eigen::Vector3d seed = std::abs(nu.z()) < 0.9 ? Eigen::Vector3d::UnitZ() : Eigen::Vector3d::UnitX();
    const Eigen::Vector3d u = (seed - seed.dot(nu) * nu).normalized();
    const Eigen::Vector3d v = nu.cross(u);
    const Eigen::Vector3d centre = offset * nu;

    MatN frame(3, 2);
    frame.col(0) = u;
    frame.col(1) = v;

    for (int i = 0; i < N; ++i) {
        const double r = (i + 0.5) * dr;
        const int m = std::max(6, int(std::lround(2.0 * pi * r / dr)));
        const double cell = r * dr * 2.0 * pi / m;
        for (int j = 0; j < m; ++j) {
            const double th = (j + 0.5) * 2.0 * pi / m;
            Atom a;
            a.x = VecN(centre + r * std::cos(th) * u + r * std::sin(th) * v);
            a.frame = frame;
            a.w = weight * cell;
            V.atoms.push_back(std::move(a));
        }
    }
    return V;
}

} // namespace

DiscreteVarifold equatorial_disk_fixture(int N, double weight) {
    return planar_disk(N, weight, Eigen::Vector3d::UnitZ(), 0.0);
}

DiscreteVarifold doubled_disk_fixture(int N) {
    return planar_disk(N, 2.0, Eigen::Vector3d::UnitZ(), 0.0);
}

DiscreteVarifold offcenter_disk_fixture(int N, double offset) {
    return planar_disk(N, 1.0, Eigen::Vector3d::UnitZ(), offset);
}

DiscreteVarifold tilted_disk_fixture(int N, double tilt_angle) {
    const Eigen::Vector3d normal(std::sin(tilt_angle), 0.0, std::cos(tilt_angle));
    return planar_disk(N, 1.0, normal, 0.0);
}

std::string to_jsonl(const DiscreteVarifold& V) {
    std::ostringstream os;
    nlohmann::ordered_json header;
    header["n"] = V.n;
    header["k"] = V.k;
    header["atoms"] = V.atoms.size();
    header["spacing"] = V.spacing;
    header["unit_ball"] = V.unit_ball;
    os << header.dump() << "\n";
    for (const auto& a : V.atoms) {
        nlohmann::ordered_json j;
        j["x"] = std::vector<double>(a.x.data(), a.x.data() + a.x.size());
        auto frame = nlohmann::ordered_json::array();
        for (int c = 0; c < a.frame.cols(); ++c) {
            std::vector<double> col(a.frame.rows());
            for (int r = 0; r < a.frame.rows(); ++r) col[size_t(r)] = a.frame(r, c);
            frame.push_back(col);
        }
        j["frame"] = std::move(frame);
        j["w"] = a.w;
        os << j.dump() << "\n";
    }
    return os.str();
}

DiscreteVarifold from_jsonl(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    if (!std::getline(is, line)) throw std::runtime_error("varifold load: empty input");
    const auto header = nlohmann::json::parse(line);
    DiscreteVarifold V;
    V.n = header.at("n").get<int>();
    V.k = header.at("k").get<int>();
    V.spacing = header.value("spacing", 0.0);
    V.unit_ball = header.value("unit_ball", true);
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        const auto j = nlohmann::json::parse(line);
        Atom a;
        const auto xs = j.at("x").get<std::vector<double>>();
        a.x = VecN(int(xs.size()));
        for (size_t i = 0; i < xs.size(); ++i) a.x[int(i)] = xs[i];
        const auto cols = j.at("frame");
        a.frame = MatN(V.n, int(cols.size()));
        for (size_t c = 0; c < cols.size(); ++c) {
            const auto col = cols[c].get<std::vector<double>>();
            for (size_t r = 0; r < col.size(); ++r) a.frame(int(r), int(c)) = col[r];
        }
        a.w = j.at("w").get<double>();
        V.atoms.push_back(std::move(a));
    }
    return V;
}

} // namespace widthlab
