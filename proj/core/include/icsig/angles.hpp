// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>

namespace icsig {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Map any finite angle to (-pi, pi].
inline double normalize_angle(double a) {
    double x = std::fmod(a, kTwoPi);
    if (x <= -kPi) x += kTwoPi;
    if (x > kPi) x -= kTwoPi;
    return x;
}

/// Map any finite angle to [0, 2*pi).
inline double normalize_angle_2pi(double a) {
    double x = std::fmod(a, kTwoPi);
    if (x < 0.0) x += kTwoPi;
    if (x >= kTwoPi) x = 0.0;
    return x;
}

/// Map to [0, pi). Beam orientations are pi-periodic: q and -q span the
/// same covariance, so angles that differ by pi are the same strategy.
inline double normalize_half_period(double a) {
    double x = std::fmod(a, kPi);
    if (x < 0.0) x += kPi;
    if (x >= kPi) x = 0.0;
    return x;
}

}  // namespace icsig
