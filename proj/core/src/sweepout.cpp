#include "widthlab/sweepout.hpp"

#include "widthlab/constants.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

namespace widthlab {

double chart_factor(Curvature K, const Eigen::Vector2d& p) {
    return 1.0 / (1.0 + 0.25 * K.K * p.squaredNorm());
}

double chart_radius_of(Curvature K, double r) {
    const double k = K.K;
    if (std::abs(k) * r * r < 1e-12) return r;
    if (k > 0.0) {
        const double s = std::sqrt(k);
        return (2.0 / s) * std::tan(0.5 * r * s);
    }
    const double s = std::sqrt(-k);
    return (2.0 / s) * std::tanh(0.5 * r * s);
}

double geodesic_radius_of(Curvature K, double rc) {
    const double k = K.K;
    if (std::abs(k) * rc * rc < 1e-12) return rc;
    if (k > 0.0) {
        const double s = std::sqrt(k);
        return (2.0 / s) * std::atan(0.5 * rc * s);
    }
    const double s = std::sqrt(-k);
    return (2.0 / s) * std::atanh(0.5 * rc * s);
}

SliceFamily equatorial_family(const SpaceFormBall& ball, int grid_n) {
    ball.validate();
    if (grid_n < 3) throw std::invalid_argument("equatorial_family: grid too small");
    SliceFamily fam;
    fam.ball = ball;
    fam.t.resize(grid_n);
    fam.radius.resize(grid_n);
    fam.area.resize(grid_n);
    for (int i = 0; i < grid_n; ++i) {
        const double t = -ball.R + 2.0 * ball.R * double(i) / double(grid_n - 1);
        fam.t[i] = t;
        fam.radius[i] = slice_radius(ball.R, ball.K, t);
        fam.area[i] = fam.radius[i] == 0.0
                          ? 0.0
                          : ball_area(ball.k, WarpedProfile::space_form(ball.K, fam.radius[i]));
    }
    return fam;
}

double width_upper_bound(const SpaceFormBall& ball) {
    const auto fam = equatorial_family(ball);
    return *std::max_element(fam.area.begin(), fam.area.end());
}

namespace {

constexpr double kGauss1 = 0.5 * (1.0 - 0.5773502691896258);
constexpr double kGauss2 = 0.5 * (1.0 + 0.5773502691896258);

double segment_length(Curvature K, const Eigen::Vector2d& a, const Eigen::Vector2d& b) {
    const Eigen::Vector2d d = b - a;
    const double len = d.norm();
    if (len == 0.0) return 0.0;
    const double l1 = chart_factor(K, a + kGauss1 * d);
    const double l2 = chart_factor(K, a + kGauss2 * d);
    return len * 0.5 * (l1 + l2);
}

double polyline_length(Curvature K, const Eigen::Matrix2Xd& v) {
    double total = 0.0;
    for (int j = 0; j + 1 < v.cols(); ++j)
        total += segment_length(K, v.col(j), v.col(j + 1));
    return total;
}

Eigen::Vector2d chart_factor_gradient(Curvature K, const Eigen::Vector2d& p) {
    const double l = chart_factor(K, p);
    return (-0.5 * K.K * l * l) * p;
}

// Gradient of the total chart length with respect to every vertex.
Eigen::Matrix2Xd length_gradient(Curvature K, const Eigen::Matrix2Xd& v) {
    Eigen::Matrix2Xd g = Eigen::Matrix2Xd::Zero(2, v.cols());
    for (int j = 0; j + 1 < v.cols(); ++j) {
        const Eigen::Vector2d a = v.col(j), b = v.col(j + 1);
        const Eigen::Vector2d d = b - a;
        const double len = d.norm();
        if (len < 1e-14) continue;
        const Eigen::Vector2d dhat = d / len;
        const Eigen::Vector2d m1 = a + kGauss1 * d, m2 = a + kGauss2 * d;
        const double w = 0.5 * (chart_factor(K, m1) + chart_factor(K, m2));
        const Eigen::Vector2d gl1 = chart_factor_gradient(K, m1);
        const Eigen::Vector2d gl2 = chart_factor_gradient(K, m2);
        g.col(j) += -dhat * w + 0.5 * len * ((1.0 - kGauss1) * gl1 + (1.0 - kGauss2) * gl2);
        g.col(j + 1) += dhat * w + 0.5 * len * (kGauss1 * gl1 + kGauss2 * gl2);
    }
    return g;
}

bool degenerate(const Eigen::Matrix2Xd& v) {
    return (v.col(0) - v.col(v.cols() - 1)).norm() < 1e-12 &&
           (v.col(0) - v.col(v.cols() / 2)).norm() < 1e-12;
}

// Endpoints are pinned to their initial stations on the boundary circle.
// Letting them slide lets every curve escape past the diameter and the
// family tears: the discrete max then drops below the width, which no
// genuine sweepout can do. With a fixed endpoint fan each curve flows to
// the geodesic chord through its stations and the middle one realises the
// diameter.
void freeze_endpoint_gradients(Eigen::Matrix2Xd& g) {
    g.col(0).setZero();
    g.col(g.cols() - 1).setZero();
}

void retract_endpoints(Eigen::Matrix2Xd& v, double chart_radius) {
    for (int idx : {0, int(v.cols()) - 1}) {
        const double norm = v.col(idx).norm();
        if (norm > 1e-14) v.col(idx) *= chart_radius / norm;
    }
}

// Resample the polyline to uniform geodesic arclength, keeping endpoints.
Eigen::Matrix2Xd resample_by_arclength(Curvature K, const Eigen::Matrix2Xd& v) {
    const int m = int(v.cols());
    std::vector<double> cum(m, 0.0);
    for (int j = 1; j < m; ++j)
        cum[j] = cum[j - 1] + segment_length(K, v.col(j - 1), v.col(j));
    const double total = cum.back();
    if (total < 1e-13) return v;
    Eigen::Matrix2Xd out(2, m);
    out.col(0) = v.col(0);
    out.col(m - 1) = v.col(m - 1);
    int seg = 0;
    for (int j = 1; j + 1 < m; ++j) {
        const double target = total * double(j) / double(m - 1);
        while (seg + 2 < m && cum[seg + 1] < target) ++seg;
        const double span = cum[seg + 1] - cum[seg];
        const double t = span > 0.0 ? (target - cum[seg]) / span : 0.0;
        out.col(j) = (1.0 - t) * v.col(seg) + t * v.col(seg + 1);
    }
    return out;
}

struct CoveringGrid {
    Curvature K;
    double R = 1.0;
    int nr = 12, ntheta = 24;
    std::vector<char> hit;

    void reset() { hit.assign(size_t(nr) * ntheta, 0); }
    void mark(const Eigen::Vector2d& p) {
        const double r = geodesic_radius_of(K, p.norm());
        int i = int(std::floor(double(nr) * r / R));
        i = std::clamp(i, 0, nr - 1);
        double th = std::atan2(p.y(), p.x());
        if (th < 0.0) th += 2.0 * pi;
        int j = int(std::floor(double(ntheta) * th / (2.0 * pi)));
        j = std::clamp(j, 0, ntheta - 1);
        hit[size_t(i) * ntheta + j] = 1;
    }
    bool complete() const {
        for (char c : hit)
            if (!c) return false;
        return true;
    }
};

void mark_segment(CoveringGrid& grid, const Eigen::Vector2d& a, const Eigen::Vector2d& b,
                  int samples = 8) {
    for (int s = 0; s <= samples; ++s) {
        const double t = double(s) / samples;
        grid.mark(a + t * (b - a));
    }
}

// Mark the quadrilateral swept between matching vertices of two curves: the
// discrete image of the homotopy between consecutive family members. Sample
// counts adapt to the quad extents so that wide quads (curves far apart)
// cannot straddle grid cells unseen; the step targets a fraction of the
// innermost cells, whose angular arcs are the narrowest.
void mark_swept_quads(CoveringGrid& grid, const Eigen::Matrix2Xd& u, const Eigen::Matrix2Xd& v) {
    const double rc = chart_radius_of(grid.K, grid.R);
    const double h = rc / (8.0 * double(grid.nr));
    const int m = int(std::min(u.cols(), v.cols()));
    for (int j = 0; j + 1 < m; ++j) {
        const double wa = std::max((u.col(j + 1) - u.col(j)).norm(),
                                   (v.col(j + 1) - v.col(j)).norm());
        const double wb = std::max((v.col(j) - u.col(j)).norm(),
                                   (v.col(j + 1) - u.col(j + 1)).norm());
        const int na = std::clamp(int(wa / h) + 1, 3, 160);
        const int nb = std::clamp(int(wb / h) + 1, 3, 160);
        for (int a = 0; a <= na; ++a) {
            const double ta = double(a) / na;
            const Eigen::Vector2d p = (1.0 - ta) * u.col(j) + ta * u.col(j + 1);
            const Eigen::Vector2d q = (1.0 - ta) * v.col(j) + ta * v.col(j + 1);
            for (int b = 0; b <= nb; ++b) {
                const double tb = double(b) / nb;
                grid.mark((1.0 - tb) * p + tb * q);
            }
        }
    }
}

bool family_covers(const PolylineSweepout& fam, bool swept) {
    CoveringGrid grid{Curvature{fam.K}, fam.R};
    grid.reset();
    if (swept) {
        for (size_t c = 0; c + 1 < fam.curves.size(); ++c)
            mark_swept_quads(grid, fam.curves[c], fam.curves[c + 1]);
    } else {
        for (const auto& v : fam.curves)
            for (int j = 0; j + 1 < v.cols(); ++j) mark_segment(grid, v.col(j), v.col(j + 1));
    }
    return grid.complete();
}

} // namespace

double PolylineSweepout::curve_length(int i) const {
    return polyline_length(Curvature{K}, curves.at(size_t(i)));
}

double PolylineSweepout::max_length() const {
    double m = 0.0;
    for (size_t i = 0; i < curves.size(); ++i)
        m = std::max(m, polyline_length(Curvature{K}, curves[i]));
    return m;
}

std::string PolylineSweepout::to_csv() const {
    std::ostringstream os;
    os.precision(17);
    os << "s,length,vertices_xy\n";
    for (size_t i = 0; i < curves.size(); ++i) {
        os << s[i] << "," << polyline_length(Curvature{K}, curves[i]);
        for (int j = 0; j < curves[i].cols(); ++j)
            os << "," << curves[i](0, j) << "," << curves[i](1, j);
        os << "\n";
    }
    return os.str();
}

std::string trace_to_csv(const std::vector<double>& trace) {
    std::ostringstream os;
    os.precision(17);
    os << "step,max_length\n";
    for (size_t i = 0; i < trace.size(); ++i) os << i << "," << trace[i] << "\n";
    return os.str();
}

PolylineSweepout initial_sweepout(Curvature K, double R, InitialFamily shape, int n_curves,
                                  int n_vertices, double amplitude, unsigned seed) {
    if (n_curves < 3 || n_vertices < 4)
        throw std::invalid_argument("initial_sweepout: family too small");
    PolylineSweepout fam;
    fam.K = K.K;
    fam.R = R;
    fam.chart_radius = chart_radius_of(K, R);
    const double rc = fam.chart_radius;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);

    for (int c = 0; c < n_curves; ++c) {
        const double s = double(c) / double(n_curves - 1);
        fam.s.push_back(s);
        const double x = rc * (2.0 * s - 1.0);
        const double y0 = std::sqrt(std::max(0.0, rc * rc - x * x));
        Eigen::Matrix2Xd v(2, n_vertices);
        for (int j = 0; j < n_vertices; ++j) {
            const double tau = double(j) / double(n_vertices - 1);
            v(0, j) = x;
            v(1, j) = -y0 + 2.0 * y0 * tau;
        }
        if (shape == InitialFamily::Bulged && y0 > 0.0) {
            const double dir = x >= 0.0 ? 1.0 : -1.0;
            for (int j = 1; j + 1 < n_vertices; ++j) {
                const double tau = double(j) / double(n_vertices - 1);
                v(0, j) += dir * amplitude * y0 * std::sin(pi * tau);
            }
        } else if (shape == InitialFamily::Perturbed && y0 > 0.0) {
            const double a1 = unif(rng), a2 = unif(rng), b1 = unif(rng), b2 = unif(rng);
            for (int j = 1; j + 1 < n_vertices; ++j) {
                const double tau = double(j) / double(n_vertices - 1);
                v(0, j) += 0.25 * amplitude * rc *
                           (a1 * std::sin(pi * tau) + a2 * std::sin(2.0 * pi * tau));
                v(1, j) += 0.25 * amplitude * rc *
                           (b1 * std::sin(pi * tau) + b2 * std::sin(2.0 * pi * tau));
            }
        }
        // Clamp any perturbed vertex back into the open disk.
        for (int j = 0; j < n_vertices; ++j) {
            const double norm = v.col(j).norm();
            if (norm > 0.999 * rc && j != 0 && j != n_vertices - 1)
                v.col(j) *= 0.999 * rc / norm;
        }
        retract_endpoints(v, rc);
        fam.curves.push_back(std::move(v));
    }
    return fam;
}

TightenResult tighten_1sweepout(const SpaceFormBall& disk, const PolylineSweepout& init,
                                int steps) {
    disk.validate();
    if (disk.n != 2 || disk.k != 1)
        throw std::invalid_argument("tighten_1sweepout: needs a 2-disk with k = 1");
    if (std::abs(disk.K.K - init.K) > 1e-14 || std::abs(disk.R - init.R) > 1e-14)
        throw std::invalid_argument("tighten_1sweepout: family does not match the disk");

    const Curvature K = disk.K;
    const double rc = init.chart_radius;
    for (const auto& v : init.curves) {
        for (int idx : {0, int(v.cols()) - 1})
            if (std::abs(v.col(idx).norm() - rc) > 1e-10)
                throw std::invalid_argument("tighten_1sweepout: endpoint off the boundary circle");
    }
    // covering is a property of the homotopy, not of the curves alone: the
    // quads swept between consecutive family members must tile the disk
    if (!family_covers(init, /*swept=*/true))
        throw std::invalid_argument("tighten_1sweepout: initial family does not cover the disk");

    TightenResult result;
    result.family = init;
    auto& curves = result.family.curves;
    const size_t nc = curves.size();

    std::vector<double> lengths(nc), trial_step(nc, 0.05);
    for (size_t c = 0; c < nc; ++c) lengths[c] = polyline_length(K, curves[c]);
    result.max_length_trace.push_back(*std::max_element(lengths.begin(), lengths.end()));

    for (int step = 1; step <= steps; ++step) {
        for (size_t c = 0; c < nc; ++c) {
            if (degenerate(curves[c])) continue;
            Eigen::Matrix2Xd grad = length_gradient(K, curves[c]);
            freeze_endpoint_gradients(grad);
            const double gnorm2 = grad.squaredNorm();
            if (gnorm2 < 1e-24) continue;
            double t = trial_step[c];
            bool accepted = false;
            for (int tries = 0; tries < 40; ++tries) {
                Eigen::Matrix2Xd cand = curves[c] - t * grad;
                retract_endpoints(cand, rc);
                const double cand_len = polyline_length(K, cand);
                if (cand_len <= lengths[c]) {
                    curves[c] = std::move(cand);
                    lengths[c] = cand_len;
                    trial_step[c] = std::min(t * 1.3, 0.25);
                    accepted = true;
                    break;
                }
                t *= 0.5;
            }
            if (!accepted) trial_step[c] = std::max(trial_step[c] * 0.5, 1e-12);
        }

        if (step % 25 == 0) {
            for (size_t c = 0; c < nc; ++c) {
                if (degenerate(curves[c])) continue;
                Eigen::Matrix2Xd re = resample_by_arclength(K, curves[c]);
                const double re_len = polyline_length(K, re);
                if (re_len <= lengths[c] + 1e-12) {
                    curves[c] = std::move(re);
                    lengths[c] = re_len;
                    ++result.resamplings;
                }
            }
        }

        const double current = *std::max_element(lengths.begin(), lengths.end());
        if (current > result.max_length_trace.back() + 1e-12) result.trace_monotone = false;
        result.max_length_trace.push_back(current);
        if (step % 5 == 0 && !family_covers(result.family, /*swept=*/true))
            result.covering_ok = false;
    }
    if (!family_covers(result.family, /*swept=*/true)) result.covering_ok = false;
    return result;
}

} // namespace widthlab
