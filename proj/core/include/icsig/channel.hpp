// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "icsig/mat2.hpp"

namespace icsig {

/// Two-user interference channel in standard form: both direct gains are
/// normalized to one, so only the cross power gains and cross phases remain.
struct ChannelParams {
    double g12 = 0.0;    ///< power gain of the path from tx 2 into rx 1
    double g21 = 0.0;    ///< power gain of the path from tx 1 into rx 2
    double phi12 = 0.0;  ///< phase of that path, radians
    double phi21 = 0.0;

    /// Sum of the cross phases. The only phase combination entering the
    /// boundary and offset closed forms, together with dphi().
    double phi_bar() const { return phi12 + phi21; }
    /// Difference of the cross phases.
    double dphi() const { return phi12 - phi21; }

    /// The same channel seen with the user roles exchanged.
    ChannelParams swapped() const { return {g21, g12, phi21, phi12}; }

    /// Throws InvalidParams unless gains are finite and non-negative and
    /// phases are finite.
    void validate() const;
};

/// Shared power budget and noise floor. Both users transmit with the same
/// total power; the noise enters every rate formula as noise/2 per real
/// dimension, so helpers for both are provided rather than having callers
/// re-derive them.
struct PowerConfig {
    double p_total = 1.0;  ///< transmit power P, linear scale
    double noise = 1.0;    ///< noise power N, linear scale

    double snr() const { return p_total / noise; }
    double half_noise() const { return 0.5 * noise; }

    /// N is fixed to 1 and P = 10^(snr_db/10); exposing both P and N
    /// independently on the wire would invite inconsistent states.
    static PowerConfig from_snr_db(double snr_db);

    void validate() const;  ///< throws InvalidParams unless both positive
};

/// Symmetric PSD 2x2 transmit covariance with trace equal to the power
/// budget. Parameterized by the power split p between the real and
/// imaginary axes and the cross-correlation alpha.
class Covariance2 {
  public:
    const Mat2& mat() const { return m_; }
    double power() const { return power_; }

    /// Power fraction on the first axis, in [0, 1].
    double p() const { return m_.m00 / power_; }
    /// Correlation parameter, |alpha| <= sqrt(p(1-p)).
    double alpha() const { return m_.m01 / power_; }

    /// (power/2) * I: equal power on both axes, no correlation.
    static Covariance2 proper(double power);

    friend Covariance2 covariance_from_params(double p, double alpha, double power);
    friend Covariance2 covariance_rank_one(double tau, double power);

  private:
    Covariance2(const Mat2& m, double power) : m_(m), power_(power) {}
    Mat2 m_;
    double power_;
};

/// power * [[p, alpha], [alpha, 1-p]]. Throws InvalidParams when (p, alpha)
/// leaves the PSD set by more than 1e-12 or power is not positive.
Covariance2 covariance_from_params(double p, double alpha, double power);

/// power * q q^T with q = [cos tau, sin tau]^T; eigenvalues (power, 0).
Covariance2 covariance_rank_one(double tau, double power);

/// True when the covariance is a scaled identity within tol: off-diagonals
/// |alpha| <= tol * power and |p - (1-p)| <= 2 * tol.
bool is_proper(const Covariance2& q, double tol);

}  // namespace icsig
