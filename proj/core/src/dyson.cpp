#include "fracdyn/dyson.hpp"

#include <cmath>
#include <sstream>

namespace fracdyn {

ZetaXi zeta_xi(const PropagatorCoeffs& coeffs, const DysonInit& init) {
    const Complex l0c = std::conj(init.lambda0);
    const double q0 = init.Lambda0 + std::norm(init.lambda0);
    return {coeffs.Tp - l0c * coeffs.Wm,
            init.lambda0 * coeffs.Tp - q0 * coeffs.Wm,
            coeffs.Wp - l0c * coeffs.Tm,
            init.lambda0 * coeffs.Wp - q0 * coeffs.Tm};
}

double kappa(const DysonInit& init, const LogDetTrack& track) {
    return init.kappa0 - 0.5 * track.re_lnD;
}

std::pair<Complex, double> lambda_Lambda(const ZetaXi& zx, const DysonInit& init,
                                         const LogDetTrack& track) {
    const double weight = init.Lambda0 * std::exp(track.re_lnD);
    const double denom = std::norm(zx.xi_p) + std::norm(zx.xi_m) + weight;
    const Complex lambda =
        -(zx.xi_p * std::conj(zx.zeta_p) + zx.xi_m * std::conj(zx.zeta_m)) / denom;
    const double Lambda =
        (std::norm(zx.zeta_p) + std::norm(zx.zeta_m) + weight) / denom -
        std::norm(lambda);
    if (!(Lambda > 0.0)) {
        std::ostringstream os;
        os << "lambda_Lambda: Lambda = " << Lambda << " <= 0 at t=" << track.t;
        throw PositivityViolation(os.str());
    }
    return {lambda, Lambda};
}

DysonParams dyson_params(const PropagatorCoeffs& coeffs, const DysonInit& init,
                         const LogDetTrack& track) {
    const auto zx = zeta_xi(coeffs, init);
    const auto [lambda, Lambda] = lambda_Lambda(zx, init, track);
    return {kappa(init, track), lambda, Lambda, track.t};
}

Matrix2 dyson_matrix(const DysonParams& params) {
    if (!(params.Lambda > 0.0))
        throw PositivityViolation("dyson_matrix: Lambda must be > 0");
    const double scale = std::exp(params.kappa) / std::sqrt(params.Lambda);
    return {scale * (params.Lambda + std::norm(params.lambda)),
            scale * params.lambda, scale * std::conj(params.lambda), scale};
}

Matrix2 dyson_matrix_inverse(const DysonParams& params) {
    if (!(params.Lambda > 0.0))
        throw PositivityViolation("dyson_matrix_inverse: Lambda must be > 0");
    const double scale = 1.0 / (std::exp(params.kappa) * std::sqrt(params.Lambda));
    return {scale, -scale * params.lambda, -scale * std::conj(params.lambda),
            scale * (params.Lambda + std::norm(params.lambda))};
}

Matrix2 metric(const DysonParams& params) {
    const Matrix2 eta = dyson_matrix(params);
    const Matrix2 theta = eta.adjoint() * eta;
    const auto [lo, hi] = hermitian_eigenvalues(theta);
    if (!(lo > 0.0)) {
        std::ostringstream os;
        os << "metric: smallest eigenvalue " << lo << " <= 0 at t=" << params.t;
        throw PositivityViolation(os.str());
    }
    return theta;
}

} // namespace fracdyn
