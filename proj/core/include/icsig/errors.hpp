// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>

namespace icsig {

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// inv2() on a matrix whose determinant is below the conditioning floor.
struct SingularMatrix final : Error {
    using Error::Error;
};

/// eig_sym2() on a matrix that is not symmetric within tolerance.
struct NotSymmetric final : Error {
    using Error::Error;
};

/// Covariance parameters outside the positive-semidefinite set, or other
/// argument-validation failures.
struct InvalidParams final : Error {
    using Error::Error;
};

/// Search grid smaller than the documented minimum.
struct InvalidGrid final : Error {
    using Error::Error;
};

/// Target SINR for the boundary map lies outside the feasible interval.
struct InfeasibleSinr1 final : Error {
    using Error::Error;
};

/// Second derivative of the sum rate at zero SNR came out non-negative.
/// Cannot happen for valid covariances; raised to surface a formula bug.
struct DegenerateCurvature final : Error {
    using Error::Error;
};

/// A receive direction is fully jammed: the power offset diverges.
struct InfiniteOffset final : Error {
    using Error::Error;
};

/// No boundary point improves on the threat point in both coordinates.
struct NoImprovingPoint final : Error {
    using Error::Error;
};

}  // namespace icsig
