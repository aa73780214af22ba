#include "widthlab/brendle.hpp"

#include "widthlab/constants.hpp"
#include "widthlab/quadrature.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace widthlab {

namespace {

// d/dx [ v/|v|^k ] with v = x - c: (I - k vhat vhat^T)/|v|^k.
MatN pole_jacobian(const VecN& v, int k) {
    const double rho = v.norm();
    const VecN vhat = v / rho;
    const int n = int(v.size());
    MatN out = MatN::Identity(n, n);
    out -= double(k) * vhat * vhat.transpose();
    out /= std::pow(rho, k);
    return out;
}

VecN pole_term(const VecN& v, int k) {
    return VecN(v / std::pow(v.norm(), k));
}

// int_0^upper (t x - c)/|t x - c|^k dt and its x-Jacobian.
VecN ray_integral(const VecN& x, const VecN& c, int k, double upper) {
    return quad::integrate([&](double t) -> VecN { return pole_term(VecN(t * x - c), k); },
                           0.0, upper, 1e-10)
        .value;
}

MatN ray_integral_jacobian(const VecN& x, const VecN& c, int k, double upper) {
    return quad::integrate(
               [&](double t) -> MatN { return MatN(t * pole_jacobian(VecN(t * x - c), k)); },
               0.0, upper, 1e-10)
        .value;
}

void check_anchor(const VecN& y, const VecN& x, bool boundary) {
    if (boundary && std::abs(y.norm() - 1.0) > 1e-9)
        throw std::invalid_argument("field anchor must lie on the unit sphere");
    if ((x - y).norm() < 1e-14)
        throw std::invalid_argument("field is singular at its anchor point");
}

} // namespace

VecN brendle_Y(const VecN& y, int k, const VecN& x) {
    check_anchor(y, x, true);
    VecN out = 0.5 * x - pole_term(VecN(x - y), k);
    if (k != 2) out -= (0.5 * double(k - 2)) * ray_integral(x, y, k, 1.0);
    return out;
}

MatN brendle_DY(const VecN& y, int k, const VecN& x) {
    check_anchor(y, x, true);
    const int n = int(x.size());
    MatN out = 0.5 * MatN::Identity(n, n);
    out -= pole_jacobian(VecN(x - y), k);
    if (k != 2) out -= (0.5 * double(k - 2)) * ray_integral_jacobian(x, y, k, 1.0);
    return out;
}

VecN interior_field(const VecN& y, int k, const VecN& x) {
    const double ynorm = y.norm();
    if (ynorm <= 0.0 || ynorm >= 1.0)
        throw std::invalid_argument("interior_field: anchor must satisfy 0 < |y| < 1");
    const VecN image = VecN(y / (ynorm * ynorm));
    if ((x - y).norm() < 1e-14 || (x - image).norm() < 1e-14)
        throw std::invalid_argument("interior_field: singular point");
    VecN out = 0.5 * x - 0.5 * pole_term(VecN(x - y), k) - 0.5 * pole_term(VecN(x - image), k);
    if (k != 2) out -= (0.5 * double(k - 2)) * ray_integral(x, VecN(y / ynorm), k, ynorm);
    return out;
}

MatN interior_DY(const VecN& y, int k, const VecN& x) {
    const double ynorm = y.norm();
    const VecN image = VecN(y / (ynorm * ynorm));
    const int n = int(x.size());
    MatN out = 0.5 * MatN::Identity(n, n);
    out -= 0.5 * pole_jacobian(VecN(x - y), k);
    out -= 0.5 * pole_jacobian(VecN(x - image), k);
    if (k != 2) out -= (0.5 * double(k - 2)) * ray_integral_jacobian(x, VecN(y / ynorm), k, ynorm);
    return out;
}

FieldPropertyReport check_lemma_properties(const VecN& y, int k, int samples, unsigned seed) {
    const int n = int(y.size());
    FieldPropertyReport rep;
    rep.k = k;
    rep.n = n;
    rep.samples = samples;
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss;
    std::uniform_real_distribution<double> unif(0.0, 1.0);

    const auto random_ball_point = [&]() {
        VecN x(n);
        for (int i = 0; i < n; ++i) x[i] = gauss(rng);
        x *= std::pow(unif(rng), 1.0 / n) / x.norm();
        return x;
    };
    const auto random_frame = [&]() {
        Eigen::MatrixXd g(n, k);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < k; ++j) g(i, j) = gauss(rng);
        Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
        Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(n, k);
        return MatN(q);
    };

    // Property (i) over random Grassmannian samples.
    rep.min_slack_i = std::numeric_limits<double>::infinity();
    for (int s = 0; s < samples; ++s) {
        VecN x = random_ball_point();
        if ((x - y).norm() < 1e-6) {
            --s;
            continue;
        }
        const MatN frame = random_frame();
        const VecN d = x - y;
        const double rho = d.norm();
        const double perp2 = std::max(0.0, d.squaredNorm() - (frame.transpose() * d).squaredNorm());
        const double bound = 0.5 * k - double(k) * perp2 / std::pow(rho, k + 2);
        const double slack = bound - div_S(frame, brendle_DY(y, k, x));
        if (slack < rep.min_slack_i) {
            rep.min_slack_i = slack;
            rep.worst_x = x;
        }
    }
    rep.inequality_holds = rep.min_slack_i >= -1e-8;

    // Property (ii): tangency along the sphere.
    for (int s = 0; s < 200; ++s) {
        VecN x(n);
        for (int i = 0; i < n; ++i) x[i] = gauss(rng);
        x /= x.norm();
        if ((x - y).norm() < 1e-3) continue;
        rep.tangency_defect = std::max(rep.tangency_defect, std::abs(x.dot(brendle_Y(y, k, x))));
    }

    // Properties (iii)/(iv): dyadic decay of the pole-compensated envelope
    // e(t) = max_{|x-y| <= t} |Y + (x-y)/|x-y|^k| |x-y|^{k-1}.
    double running_env = 0.0;
    for (double t : {0.01, 0.02, 0.05, 0.1, 0.25, 0.5, 1.0, 2.0}) {
        double level_env = 0.0;
        for (int s = 0; s < 400; ++s) {
            const double rho = t * (0.5 + 0.5 * unif(rng));
            VecN dir(n);
            for (int i = 0; i < n; ++i) dir[i] = gauss(rng);
            dir /= dir.norm();
            VecN x = y + rho * dir;
            if (x.norm() > 1.0) x = y - rho * dir; // reflect into the ball
            if (x.norm() > 1.0) continue;
            const VecN dev = brendle_Y(y, k, x) + pole_term(VecN(x - y), k);
            level_env = std::max(level_env, dev.norm() * std::pow((x - y).norm(), k - 1));
        }
        running_env = std::max(running_env, level_env);
        rep.decay_t.push_back(t);
        rep.decay_e.push_back(running_env);
    }
    double e_001 = 0.0, e_1 = 0.0;
    for (size_t i = 0; i < rep.decay_t.size(); ++i) {
        if (rep.decay_t[i] == 0.01) e_001 = rep.decay_e[i];
        if (rep.decay_t[i] == 1.0) e_1 = rep.decay_e[i];
    }
    rep.decay_holds = e_001 <= 0.05 * e_1;
    return rep;
}

PipelineReport fb_estimate_pipeline(const DiscreteVarifold& V, const VecN& y,
                                    std::vector<double> r_schedule,
                                    std::vector<double> eps_schedule) {
    if (std::abs(y.norm() - 1.0) > 1e-9)
        throw std::invalid_argument("fb_estimate_pipeline: y must lie on the unit sphere");
    PipelineReport rep;
    rep.k = V.k;
    rep.y = y;
    rep.mass = mass(V);
    rep.eps_schedule = eps_schedule;
    const int k = V.k;
    const double ak = alpha(k);

    // Per-atom field data, shared across the (r, eps) passes.
    struct AtomData {
        double rho, w, perp2, divY, tangential_pairing, deviation;
    };
    std::vector<AtomData> data;
    data.reserve(V.atoms.size());
    for (const auto& a : V.atoms) {
        AtomData d;
        const VecN dx = a.x - y;
        d.rho = dx.norm();
        d.w = a.w;
        if (d.rho < 1e-12) continue; // the anchor atom itself carries no cutoff weight
        const VecN dir = dx / d.rho;
        const double tan2 = (a.frame.transpose() * dir).squaredNorm();
        d.perp2 = std::max(0.0, 1.0 - tan2);
        const VecN Yx = brendle_Y(y, k, a.x);
        d.divY = div_S(a.frame, brendle_DY(y, k, a.x));
        const VecN tangential = a.frame * (a.frame.transpose() * dir);
        d.tangential_pairing = tangential.dot(Yx);
        d.deviation = (Yx + pole_term(dx, k)).norm();
        data.push_back(d);
    }

    rep.t1_bounded = true;
    rep.chains_ok = true;
    for (double eps : eps_schedule) {
        std::vector<double> lhs_of_r;
        for (double r : r_schedule) {
            PipelinePass pass;
            pass.eps = eps;
            pass.r = r;
            const double top = (1.0 + eps) * r;
            const double slope = 1.0 / (eps * r);
            for (const auto& d : data) {
                const bool in_annulus = d.rho > r && d.rho <= top;
                const double eta = d.rho <= r ? 0.0 : (d.rho >= top ? 1.0 : (d.rho - r) * slope);
                pass.t1 += d.w * eta * d.divY;
                pass.fv_cutoff += d.w * eta * d.divY;
                if (in_annulus) {
                    const double rr = std::pow(d.rho, 1 - k);
                    pass.lhs += d.w * slope * rr;
                    pass.t2 += d.w * slope * rr * d.perp2;
                    pass.t3 += d.w * slope * d.deviation * std::pow(d.rho, k - 1) * rr;
                    pass.fv_cutoff += d.w * slope * d.tangential_pairing;
                }
            }
            const double scale = std::max({1.0, std::abs(pass.lhs), std::abs(pass.t1)});
            pass.chain_ok = pass.lhs <= pass.t1 + pass.t2 + pass.t3 - pass.fv_cutoff + 1e-9 * scale;
            if (pass.t1 > 0.5 * k * rep.mass + 1e-9 * scale) rep.t1_bounded = false;
            if (!pass.chain_ok) rep.chains_ok = false;
            lhs_of_r.push_back(pass.lhs);
            rep.passes.push_back(pass);
        }
        // Linear least squares extrapolation of lhs to r = 0.
        const size_t m = r_schedule.size();
        double sr = 0, srr = 0, sl = 0, srl = 0;
        for (size_t i = 0; i < m; ++i) {
            sr += r_schedule[i];
            srr += r_schedule[i] * r_schedule[i];
            sl += lhs_of_r[i];
            srl += r_schedule[i] * lhs_of_r[i];
        }
        const double det = double(m) * srr - sr * sr;
        rep.lhs_extrapolated.push_back((srr * sl - sr * srl) / det);
    }

    std::vector<double> density_radii;
    for (double r = 0.15; r <= 0.451; r += 0.05) density_radii.push_back(r);
    rep.density_at_y = density(V, y, density_radii, V.spacing);
    rep.theta = rep.density_at_y.raw;
    rep.density_converged = rep.density_at_y.fit_residual < 0.05;
    rep.implied_bound = 2.0 * ak * rep.theta;
    rep.final_residual = 0.5 * k * rep.mass - double(k) * ak * rep.theta;
    return rep;
}

} // namespace widthlab
