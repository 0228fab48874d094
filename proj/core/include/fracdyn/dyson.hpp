#pragma once

#include <complex>

#include "fracdyn/frac_evolution.hpp"
#include "fracdyn/two_level.hpp"

namespace fracdyn {

/// Initial Dyson map parameters; Lambda0 > 0 is required throughout.
struct DysonInit {
    double kappa0;
    Complex lambda0;
    double Lambda0;

    DysonInit(double k0, Complex l0, double L0)
        : kappa0(k0), lambda0(l0), Lambda0(L0) {
        if (!(L0 > 0.0))
            throw DomainError("DysonInit: Lambda0 must be > 0");
    }
};

/// Dyson map parameters at a time point.
struct DysonParams {
    double kappa;
    Complex lambda;
    double Lambda;
    double t;
};

/// The four propagator/initial-value combinations the closed forms consume:
///   zeta+ = T+ - conj(lambda0) W-        zeta- = lambda0 T+ - [Lambda0+|lambda0|^2] W-
///   xi+   = W+ - conj(lambda0) T-        xi-   = lambda0 W+ - [Lambda0+|lambda0|^2] T-
struct ZetaXi {
    Complex zeta_p, zeta_m, xi_p, xi_m;
};

ZetaXi zeta_xi(const PropagatorCoeffs& coeffs, const DysonInit& init);

/// kappa(t) = kappa0 - Re[ln D(t)] / 2.
double kappa(const DysonInit& init, const LogDetTrack& track);

/// Exact closed forms for (lambda(t), Lambda(t)); throws PositivityViolation
/// if Lambda comes out <= 0 (never expected analytically).
std::pair<Complex, double> lambda_Lambda(const ZetaXi& zx, const DysonInit& init,
                                         const LogDetTrack& track);

/// Convenience: all three parameters at the track's time point.
DysonParams dyson_params(const PropagatorCoeffs& coeffs, const DysonInit& init,
                         const LogDetTrack& track);

/// eta = (e^kappa / sqrt(Lambda)) [[Lambda + |lambda|^2, lambda], [conj(lambda), 1]]
/// (Hermitian by construction, det = e^{2 kappa}).
Matrix2 dyson_matrix(const DysonParams& params);

/// Analytic inverse of the Dyson matrix.
Matrix2 dyson_matrix_inverse(const DysonParams& params);

/// Metric Theta = eta^dagger eta; throws PositivityViolation if its smallest
/// eigenvalue is numerically non-positive.
Matrix2 metric(const DysonParams& params);

} // namespace fracdyn
