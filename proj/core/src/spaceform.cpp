#include "widthlab/spaceform.hpp"

#include "widthlab/constants.hpp"
#include "widthlab/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace widthlab {

double sn(Curvature K, double r) {
    const double k = K.K;
    const double u = k * r * r;
    if (std::abs(u) < 1e-6) {
        // sin(x)/sqrt(K) with x = r sqrt(K): series in u avoids cancellation
        // and covers both signs of K through u alone.
        return r * (1.0 - u / 6.0 + u * u / 120.0 - u * u * u / 5040.0);
    }
    if (k > 0.0) {
        const double s = std::sqrt(k);
        return std::sin(r * s) / s;
    }
    const double s = std::sqrt(-k);
    return std::sinh(r * s) / s;
}

double sn_prime(Curvature K, double r) {
    const double k = K.K;
    const double u = k * r * r;
    if (std::abs(u) < 1e-6) {
        return 1.0 - u / 2.0 + u * u / 24.0 - u * u * u / 720.0;
    }
    if (k > 0.0) return std::cos(r * std::sqrt(k));
    return std::cosh(r * std::sqrt(-k));
}

void SpaceFormBall::validate() const {
    if (n < 2) throw std::invalid_argument("ball: ambient dimension must be >= 2");
    if (k < 1 || k >= n) throw std::invalid_argument("ball: need 1 <= k < n");
    if (!(R > 0.0)) throw std::invalid_argument("ball: radius must be positive");
    if (!std::isfinite(K.K)) throw std::invalid_argument("ball: curvature must be finite");
    if (K.K > 0.0 && R > pi / (2.0 * std::sqrt(K.K)) + 1e-12)
        throw std::invalid_argument("ball: for K > 0 the radius may not exceed pi/(2 sqrt(K))");
}

WarpedProfile WarpedProfile::from_function(std::function<double(double)> h, double R,
                                           int samples) {
    WarpedProfile p;
    p.h = std::move(h);
    p.R = R;
    p.sample_r.resize(samples);
    p.sample_h.resize(samples);
    for (int i = 0; i < samples; ++i) {
        const double r = R * double(i) / double(samples - 1);
        p.sample_r[i] = r;
        p.sample_h[i] = p.h(r);
    }
    return p;
}

WarpedProfile WarpedProfile::space_form(Curvature K, double R, int samples) {
    return from_function([K](double r) { return sn(K, r); }, R, samples);
}

DaggerReport check_dagger(const WarpedProfile& profile) {
    DaggerReport rep;
    rep.h_at_zero = profile.h(0.0);
    if (std::abs(rep.h_at_zero) > 1e-10) {
        rep.message = "h(0) != 0";
        return rep;
    }
    const auto g = [&](double u) { return profile.h(std::sqrt(u)) / std::sqrt(u); };
    const double u0 = 0.25 * std::min(profile.R, 1.0) * std::min(profile.R, 1.0);
    for (int j = 0; j <= 12; ++j) {
        const double u = u0 * std::pow(2.0, -j);
        const double d = 0.5 * u;
        const double d2 = (g(u + d) - 2.0 * g(u) + g(u - d)) / (d * d);
        rep.u_grid.push_back(u);
        rep.second_differences.push_back(d2);
    }
    // Smooth g: the estimates settle toward g''(0). Non-smooth g: they blow
    // up geometrically as u -> 0.
    const auto& d2 = rep.second_differences;
    double early = 0.0;
    for (int j = 0; j <= 6; ++j) early = std::max(early, std::abs(d2[j]));
    const double growth = std::abs(d2.back()) / (1.0 + early);
    double tail_move = 0.0;
    for (size_t j = d2.size() - 4; j + 1 < d2.size(); ++j)
        tail_move = std::max(tail_move, std::abs(d2[j + 1] - d2[j]));
    const bool stable = tail_move <= 2e-2 * (1.0 + std::abs(d2.back()));
    if (growth > 50.0) {
        rep.message = "second difference of h(sqrt(u))/sqrt(u) diverges as u -> 0";
        return rep;
    }
    if (!stable) {
        rep.message = "second difference of h(sqrt(u))/sqrt(u) does not stabilise";
        return rep;
    }
    rep.pass = true;
    rep.message = "profile is a smooth even warp at the origin";
    return rep;
}

double ball_area(int k, const WarpedProfile& profile) {
    if (k < 1) throw std::invalid_argument("ball_area: k must be >= 1");
    if (k == 1) return 2.0 * profile.R;
    auto integrand = [&](double r) { return std::pow(profile.h(r), k - 1); };
    const double integral = quad::integrate_or_throw(integrand, 0.0, profile.R, 1e-10);
    return beta(k - 1) * integral;
}

double slice_radius(double R, Curvature K, double t) {
    t = std::abs(t);
    if (t > R + 1e-12) throw std::domain_error("slice_radius: requires |t| <= R");
    t = std::min(t, R);
    if (t == R) return 0.0;
    const double k = K.K;
    if (std::abs(k) * R * R < 1e-12) {
        return std::sqrt(std::max(0.0, R * R - t * t));
    }
    if (k > 0.0) {
        const double s = std::sqrt(k);
        double c = std::cos(R * s) / std::cos(t * s);
        c = std::min(1.0, std::max(-1.0, c));
        return std::acos(c) / s;
    }
    const double s = std::sqrt(-k);
    const double c = std::max(1.0, std::cosh(R * s) / std::cosh(t * s));
    return std::acosh(c) / s;
}

} // namespace widthlab
