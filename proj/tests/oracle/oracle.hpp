#pragma once

// Test-only verification paths, deliberately naive and slow, sharing no code
// with the primary evaluators. The Mittag-Leffler reference sums the series
// in IEEE quad precision via libquadmath; the matrix-exponential reference is
// the closed-form 2x2 eigendecomposition.

#include <complex>

#include "fracdyn/two_level.hpp"

namespace oracle {

struct OracleConfig {
    enum class Precision { double_prec, extended };
    Precision working_precision = Precision::extended;
    int max_terms = 20000;  // must be >= 64
};

struct MLRef {
    std::complex<double> value;
    double error_bound;
};

/// Straightforward quad-precision summation of sum_k z^k / Gamma(alpha k + 1).
/// Throws fracdyn::NonConvergence if the terms are not decreasing (below a
/// stopping threshold) by max_terms.
MLRef ml_reference(double alpha, std::complex<double> z, int max_terms = 20000);

/// Same series at the configured working precision (plain double or quad).
MLRef ml_reference(double alpha, std::complex<double> z, const OracleConfig& config);

/// exp(-i H t) by closed-form eigendecomposition (hbar = 1). Works for any
/// finite 2x2 H, Hermitian or not.
fracdyn::Matrix2 expm_2x2(const fracdyn::Matrix2& H, double t);

/// Direct power series for the fractional cosine/sine with coefficient
/// (-1)^{alpha k} = (i^{-alpha})^{2k} = e^{-i pi alpha k}:
///   C_a(x) = sum_k e^{-i pi a k} x^{2k}   / Gamma(2ka + 1)
///   S_a(x) = sum_k e^{-i pi a k} x^{2k+1} / Gamma((2k+1)a + 1)
std::complex<double> frac_cos_series(double alpha, std::complex<double> x,
                                     int max_terms = 20000);
std::complex<double> frac_sin_series(double alpha, std::complex<double> x,
                                     int max_terms = 20000);

/// E_{1/2}(x) = e^{x^2} erfc(-x) for real x, evaluated in quad precision.
double e_half_via_erfc(double x);

} // namespace oracle
