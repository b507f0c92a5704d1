// SPDX-License-Identifier: Apache-2.0
#include "icsig/mat2.hpp"

#include <algorithm>
#include <cmath>

#include "icsig/errors.hpp"

namespace icsig {

bool Mat2::is_finite() const {
    return std::isfinite(m00) && std::isfinite(m01) && std::isfinite(m10) && std::isfinite(m11);
}

Mat2 rotation_matrix(double phi) {
    const double c = std::cos(phi);
    const double s = std::sin(phi);
    return {c, -s, s, c};
}

Mat2 inv2(const Mat2& m) {
    const double d = det2(m);
    const double scale = std::max(std::max(std::fabs(m.m00), std::fabs(m.m01)),
                                  std::max(std::fabs(m.m10), std::fabs(m.m11)));
    if (std::fabs(d) <= 1e-14 * scale * scale || d == 0.0) {
        throw SingularMatrix("inv2: determinant below conditioning floor");
    }
    const double inv_d = 1.0 / d;
    return {m.m11 * inv_d, -m.m01 * inv_d, -m.m10 * inv_d, m.m00 * inv_d};
}

std::pair<double, double> eig_sym2(const Mat2& m) {
    if (std::fabs(m.m01 - m.m10) > 1e-12) {
        throw NotSymmetric("eig_sym2: off-diagonal mismatch above 1e-12");
    }
    // mid +/- sqrt(((a-d)/2)^2 + b^2); this form avoids the cancellation that
    // tr^2/4 - det suffers for nearly scalar matrices.
    const double b = 0.5 * (m.m01 + m.m10);
    const double mid = 0.5 * (m.m00 + m.m11);
    const double halfgap = 0.5 * (m.m00 - m.m11);
    const double disc = std::hypot(halfgap, b);
    return {mid + disc, mid - disc};
}

}  // namespace icsig
