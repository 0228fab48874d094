#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "fracdyn/mittag_leffler.hpp"
#include "fracdyn/two_level.hpp"

namespace fracdyn {

/// Entries of the non-unitary propagator U_alpha(t) = [[W+, T-], [T+, W-]],
/// plus the fractional cosine/sine pair they were assembled from. At t = 0
/// the coefficients are exactly (1, 1, 0, 0).
struct PropagatorCoeffs {
    double t;
    double alpha;
    double tol;
    Complex Wp, Wm, Tp, Tm;
    Complex C, S;        // C_alpha, S_alpha at Delta t^alpha
    double error_bound;  // propagated from the Mittag-Leffler evaluations
};

///   W+- = C_alpha(Delta t^a) +- i^{-a} (w3/Delta) S_alpha(Delta t^a)
///   T+- = i^{-a} ((w1 +- i w2)/Delta) S_alpha(Delta t^a)
/// with the removable limit S_alpha(x)/x -> 1/Gamma(alpha+1) taken when
/// |Delta t^a| < 1e-8 (exceptional points included).
PropagatorCoeffs propagator_coeffs(FractionalOrder alpha, const OmegaVector& omega,
                                   double t, double tol);

/// Same, with the square root of sum w_k^2 supplied explicitly. Negating the
/// root leaves every coefficient unchanged up to roundoff (C is even, S/Delta
/// is even); exposed so that branch irrelevance can be exercised directly.
PropagatorCoeffs propagator_coeffs_with_delta(FractionalOrder alpha,
                                              const OmegaVector& omega,
                                              Complex delta_root, double t,
                                              double tol);

Matrix2 propagator_matrix(const PropagatorCoeffs& coeffs);

/// D_alpha = W+ W- - T+ T-, cross-checked against C^2 - (-1)^{-a} S^2;
/// throws InternalInconsistency if the two routes differ beyond 100 tol.
Complex det_propagator(const PropagatorCoeffs& coeffs);

/// ln D_alpha along a grid: re part is ln|D|, im part the phase unwrapped
/// continuously from 0 at t = 0.
struct LogDetTrack {
    double t;
    double re_lnD;
    double im_lnD;
};

/// Incremental unwrapping of ln D along an ordered grid. The first step must
/// be t = 0 where D = 1; later steps add the principal argument of the ratio
/// of consecutive determinants and refuse (PhaseJumpError) when a single
/// increment reaches pi.
class PhaseTracker {
public:
    LogDetTrack step(double t, Complex d);

private:
    bool first_ = true;
    Complex prev_{1.0, 0.0};
    double phase_ = 0.0;
    std::size_t index_ = 0;
};

/// Track ln D_alpha(t) on a grid that starts at 0 and is strictly increasing.
std::vector<LogDetTrack> track_log_det(FractionalOrder alpha,
                                       const OmegaVector& omega,
                                       std::span<const double> grid, double tol);

} // namespace fracdyn
