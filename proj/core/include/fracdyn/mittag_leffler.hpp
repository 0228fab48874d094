#pragma once

#include <complex>

#include "fracdyn/errors.hpp"

namespace fracdyn {

/// Fractional order alpha in (0, 1]. Validated on construction; every
/// special-function call in the library is governed by one of these.
struct FractionalOrder {
    double alpha;

    explicit FractionalOrder(double a) : alpha(a) {
        if (!(a > 0.0) || !(a <= 1.0) || !std::isfinite(a))
            throw DomainError("FractionalOrder: alpha must lie in (0, 1]");
    }
};

/// Value plus a certified absolute error bound (truncation + rounding).
struct MLResult {
    std::complex<double> value;
    double error_bound;
};

// Branch conventions, fixed once and used everywhere downstream:
//   i^{-alpha}   = exp(-i pi alpha / 2)   (principal value)
//   (-1)^{p}     = exp(+i pi p)           (so (-1)^{-alpha} = exp(-i pi alpha))
// These reproduce the alpha = 1 limits (E_1(-ix) = e^{-ix} etc.).
std::complex<double> i_pow_minus_alpha(double alpha);
std::complex<double> minus_one_pow(double exponent);

/// One-parameter Mittag-Leffler function E_alpha(z) = sum_k z^k / Gamma(alpha k + 1).
///
/// Truncated Taylor series accumulated in double-double with gamma values at
/// the same precision; terms are added until the geometric tail bound and the
/// rounding bound together certify error_bound <= tol * max(1, |value|).
/// Throws NonConvergence when that cannot be certified (series peak term
/// exp(|z|^{1/alpha}) beyond double range, or cancellation past double-double
/// headroom), and DomainError for tol <= 0 or non-finite z.
MLResult ml(FractionalOrder alpha, std::complex<double> z, double tol);

/// Fractional cosine C_alpha(x) = [E_alpha(i^{-a} x) + E_alpha(-i^{-a} x)] / 2.
MLResult frac_cos(FractionalOrder alpha, std::complex<double> x, double tol);

/// Fractional sine S_alpha(x) = [E_alpha(i^{-a} x) - E_alpha(-i^{-a} x)] / (2 i^{-a}).
MLResult frac_sin(FractionalOrder alpha, std::complex<double> x, double tol);

/// 1 / Gamma(alpha + 1), used for the removable S_alpha(x)/x -> 1/Gamma(alpha+1)
/// limit at an exceptional point (Delta = 0).
double inv_gamma_alpha_plus_one(FractionalOrder alpha);

} // namespace fracdyn
