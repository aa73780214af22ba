#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace widthlab::ode {

// Embedded Dormand-Prince 5(4) step for a scalar ODE y' = f(t, y).
// Returns the 5th order solution; err receives the embedded error estimate.
template <class F>
double dopri_step(F& f, double t, double y, double h, double& err, double k1, double& k_last) {
    const double k2 = f(t + h / 5.0, y + h * (k1 / 5.0));
    const double k3 = f(t + 3.0 * h / 10.0, y + h * (3.0 / 40.0 * k1 + 9.0 / 40.0 * k2));
    const double k4 = f(t + 4.0 * h / 5.0, y + h * (44.0 / 45.0 * k1 - 56.0 / 15.0 * k2 + 32.0 / 9.0 * k3));
    const double k5 = f(t + 8.0 * h / 9.0,
                        y + h * (19372.0 / 6561.0 * k1 - 25360.0 / 2187.0 * k2 +
                                 64448.0 / 6561.0 * k3 - 212.0 / 729.0 * k4));
    const double k6 = f(t + h, y + h * (9017.0 / 3168.0 * k1 - 355.0 / 33.0 * k2 +
                                        46732.0 / 5247.0 * k3 + 49.0 / 176.0 * k4 -
                                        5103.0 / 18656.0 * k5));
    const double y5 = y + h * (35.0 / 384.0 * k1 + 500.0 / 1113.0 * k3 + 125.0 / 192.0 * k4 -
                               2187.0 / 6784.0 * k5 + 11.0 / 84.0 * k6);
    const double k7 = f(t + h, y5);
    const double y4 = y + h * (5179.0 / 57600.0 * k1 + 7571.0 / 16695.0 * k3 + 393.0 / 640.0 * k4 -
                               92097.0 / 339200.0 * k5 + 187.0 / 2100.0 * k6 + k7 / 40.0);
    err = std::abs(y5 - y4);
    k_last = k7;
    return y5;
}

// Integrates y' = f(t, y) from (t0, y0) to t1 with adaptive steps.
// rel_tol controls the local error relative to max(|y|, 1).
template <class F>
double integrate(F&& f, double t0, double y0, double t1, double rel_tol = 1e-10) {
    if (t1 == t0) return y0;
    const double dir = t1 > t0 ? 1.0 : -1.0;
    double t = t0, y = y0;
    double h = dir * std::max(1e-8, std::abs(t1 - t0) / 64.0);
    double k1 = f(t, y);
    int rejected_in_a_row = 0;
    for (int iter = 0; iter < 2000000; ++iter) {
        if (dir * (t + h - t1) > 0.0) h = t1 - t;
        double err = 0.0, k_last = 0.0;
        const double y_new = dopri_step(f, t, y, h, err, k1, k_last);
        const double scale = rel_tol * std::max({1.0, std::abs(y), std::abs(y_new)});
        if (err <= scale) {
            t += h;
            y = y_new;
            k1 = k_last;
            rejected_in_a_row = 0;
            if (dir * (t1 - t) <= 1e-15 * std::max(1.0, std::abs(t1))) return y;
        } else if (++rejected_in_a_row > 60) {
            throw std::runtime_error("ode step failure: error control cannot make progress");
        }
        const double ratio = err > 0.0 ? std::pow(scale / err, 0.2) : 5.0;
        h *= std::clamp(0.9 * ratio, 0.2, 5.0);
        if (std::abs(h) < 1e-15 * std::max(1.0, std::abs(t))) {
            throw std::runtime_error("ode step failure: step size underflow");
        }
    }
    throw std::runtime_error("ode step failure: iteration cap exceeded");
}

} // namespace widthlab::ode
