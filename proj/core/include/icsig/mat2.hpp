// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <utility>

namespace icsig {

/// Real 2x2 matrix, row-major. Everything in this library lives in the
/// two-dimensional real composite representation of a complex scalar, so a
/// fixed-size closed-form kernel beats any general linear-algebra dependency
/// for the million-point sweeps done elsewhere.
struct Mat2 {
    double m00 = 0.0, m01 = 0.0;
    double m10 = 0.0, m11 = 0.0;

    static constexpr Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
    static constexpr Mat2 diag(double a, double b) { return {a, 0.0, 0.0, b}; }

    constexpr Mat2 operator+(const Mat2& o) const {
        return {m00 + o.m00, m01 + o.m01, m10 + o.m10, m11 + o.m11};
    }
    constexpr Mat2 operator-(const Mat2& o) const {
        return {m00 - o.m00, m01 - o.m01, m10 - o.m10, m11 - o.m11};
    }
    constexpr Mat2 operator*(const Mat2& o) const {
        return {m00 * o.m00 + m01 * o.m10, m00 * o.m01 + m01 * o.m11,
                m10 * o.m00 + m11 * o.m10, m10 * o.m01 + m11 * o.m11};
    }
    constexpr Mat2 scaled(double c) const { return {c * m00, c * m01, c * m10, c * m11}; }
    constexpr Mat2 transpose() const { return {m00, m10, m01, m11}; }
    constexpr double trace() const { return m00 + m11; }

    bool is_finite() const;
};

/// Planar rotation by phi: [[cos, -sin], [sin, cos]].
Mat2 rotation_matrix(double phi);

/// ad - bc.
constexpr double det2(const Mat2& m) { return m.m00 * m.m11 - m.m01 * m.m10; }

/// Inverse via the adjugate. Throws SingularMatrix when |det| is below
/// 1e-14 * max|entry|^2.
Mat2 inv2(const Mat2& m);

/// Eigenvalues of a symmetric matrix, descending. The symmetric check is
/// absolute at 1e-12 (all quantities are O(1) after power normalization).
/// Throws NotSymmetric.
std::pair<double, double> eig_sym2(const Mat2& m);

}  // namespace icsig
