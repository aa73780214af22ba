#pragma once

#include <cmath>
#include <numbers>

namespace widthlab {

inline constexpr double pi = std::numbers::pi;

// Area (k-volume) of the unit Euclidean k-ball.
inline double alpha(int k) {
    return std::pow(pi, 0.5 * k) / std::tgamma(0.5 * k + 1.0);
}

// Area of the unit round k-sphere in R^{k+1}.
inline double beta(int k) {
    return 2.0 * std::pow(pi, 0.5 * (k + 1)) / std::tgamma(0.5 * (k + 1));
}

} // namespace widthlab
