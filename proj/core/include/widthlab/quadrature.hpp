#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <type_traits>
#include <utility>

namespace widthlab::quad {

// Gauss-Kronrod 7-15 pair on [-1, 1].
inline constexpr double gk_nodes[8] = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691,
    0.7415311855993944, 0.5860872354676911, 0.4058451513773972,
    0.2077849550078985, 0.0,
};
inline constexpr double gk_weights[8] = {
    0.0229353220105292, 0.0630920926299786, 0.1047900103222502,
    0.1406532597155259, 0.1690047266392679, 0.1903505780647854,
    0.2044329400752989, 0.2094821410847278,
};
inline constexpr double gauss_weights[4] = {
    0.1294849661688697, 0.2797053914892767,
    0.3818300505051189, 0.4179591836734694,
};

namespace detail {

template <class T> double magnitude(const T& v) {
    if constexpr (std::is_floating_point_v<T>) return std::abs(v);
    else return v.norm();
}

template <class F>
auto kronrod_panel(F& f, double a, double b, double& err, int& evals) {
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    using R = std::decay_t<decltype(f(c))>;
    R fc = f(c);
    R kron = gk_weights[7] * fc;
    R gauss = gauss_weights[3] * fc;
    evals += 1;
    for (int i = 0; i < 7; ++i) {
        const double dx = h * gk_nodes[i];
        R lo = f(c - dx), hi = f(c + dx);
        evals += 2;
        kron = kron + gk_weights[i] * (lo + hi);
        if (i % 2 == 1) gauss = gauss + gauss_weights[i / 2] * (lo + hi);
    }
    kron = h * kron;
    gauss = h * gauss;
    err = magnitude(R(kron - gauss));
    return kron;
}

template <class F, class R>
void adapt(F& f, double a, double b, double tol, int depth, R& total,
           double& err_total, int& evals) {
    double err = 0.0;
    R panel = kronrod_panel(f, a, b, err, evals);
    if (err <= tol || depth >= 48 || (b - a) < 1e-15 * (1.0 + std::abs(a))) {
        total = total + panel;
        err_total += err;
        return;
    }
    const double c = 0.5 * (a + b);
    adapt(f, a, c, 0.5 * tol, depth + 1, total, err_total, evals);
    adapt(f, c, b, 0.5 * tol, depth + 1, total, err_total, evals);
}

} // namespace detail

template <class T> struct Result {
    T value;
    double error = 0.0;
    int evaluations = 0;
    bool converged = true;
};

// Adaptive integration of f over [a, b] to absolute tolerance abs_tol.
// Works for double-valued and Eigen-valued integrands.
template <class F>
auto integrate(F&& f, double a, double b, double abs_tol = 1e-10) {
    using R = std::decay_t<decltype(f(0.5 * (a + b)))>;
    Result<R> out;
    double err = 0.0;
    R seed = detail::kronrod_panel(f, a, b, err, out.evaluations);
    if (err <= abs_tol) {
        out.value = seed;
        out.error = err;
        return out;
    }
    out.evaluations = 0;
    R total = R(0.0 * seed);
    double err_total = 0.0;
    detail::adapt(f, a, b, abs_tol, 0, total, err_total, out.evaluations);
    out.value = total;
    out.error = err_total;
    out.converged = err_total <= 64.0 * abs_tol;
    return out;
}

template <class F>
double integrate_or_throw(F&& f, double a, double b, double abs_tol = 1e-10) {
    auto r = integrate(std::forward<F>(f), a, b, abs_tol);
    if (!r.converged)
        throw std::runtime_error("quadrature did not converge: achieved error bound " +
                                 std::to_string(r.error));
    return r.value;
}

} // namespace widthlab::quad
