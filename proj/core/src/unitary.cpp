#include "fracdyn/unitary.hpp"

#include <cmath>
#include <sstream>

namespace fracdyn {

namespace {

struct GeneralCoeffs {
    Complex varpi_p, varpi_m, tau_p, tau_m;
};

GeneralCoeffs general_coeffs(const PropagatorCoeffs& coeffs,
                             const DysonParams& params, const DysonInit& init) {
    if (!(params.Lambda > 0.0) || !(init.Lambda0 > 0.0))
        throw PositivityViolation("unitary: Lambda must be > 0");
    const auto zx = zeta_xi(coeffs, init);
    const double pref = std::exp(params.kappa - init.kappa0) /
                        std::sqrt(params.Lambda * init.Lambda0);
    const double q = params.Lambda + std::norm(params.lambda);
    const Complex lc = std::conj(params.lambda);
    return {pref * (params.lambda * zx.zeta_p + q * zx.xi_p),
            -pref * (params.lambda * zx.zeta_m + q * zx.xi_m),
            pref * (lc * zx.xi_p + zx.zeta_p),
            -pref * (lc * zx.xi_m + zx.zeta_m)};
}

} // namespace

Matrix2 unitary_general(const PropagatorCoeffs& coeffs, const DysonParams& params,
                        const DysonInit& init) {
    const auto g = general_coeffs(coeffs, params, init);
    return {g.varpi_p, g.varpi_m, g.tau_p, g.tau_m};
}

UnitaryCoeffs unitary_reduced(const PropagatorCoeffs& coeffs,
                              const DysonParams& params, const DysonInit& init,
                              const LogDetTrack& track) {
    const auto g = general_coeffs(coeffs, params, init);
    const double half_phase = 0.5 * track.im_lnD;
    const Complex unwind = std::polar(1.0, -half_phase);
    UnitaryCoeffs u{unwind * g.varpi_p, unwind * g.varpi_m, half_phase, track.t};

    const Matrix2 general{g.varpi_p, g.varpi_m, g.tau_p, g.tau_m};
    const double mismatch = (unitary_matrix(u) - general).max_abs();
    if (mismatch > 1e-7) {
        std::ostringstream os;
        os << "unitary_reduced: reduced and general forms differ by " << mismatch
           << " at t=" << track.t;
        throw InternalInconsistency(os.str());
    }
    return u;
}

Matrix2 unitary_matrix(const UnitaryCoeffs& u) {
    const Complex phase = std::polar(1.0, u.global_phase);
    return {phase * u.varpi, phase * u.tau, phase * (-std::conj(u.tau)),
            phase * std::conj(u.varpi)};
}

StateVector evolve_state(const Matrix2& u, const StateVector& psi0) {
    if (norm_squared(psi0) == 0.0)
        throw DegenerateState("evolve_state: zero initial state");
    return apply(u, psi0);
}

} // namespace fracdyn
