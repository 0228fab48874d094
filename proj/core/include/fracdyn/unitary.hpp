#pragma once

#include "fracdyn/dyson.hpp"
#include "fracdyn/frac_evolution.hpp"
#include "fracdyn/two_level.hpp"

namespace fracdyn {

/// Reduced form of the unitary propagator:
///   u = e^{i global_phase} [[varpi, tau], [-conj(tau), conj(varpi)]]
/// with global_phase = Im[ln D]/2 and |varpi|^2 + |tau|^2 = 1.
struct UnitaryCoeffs {
    Complex varpi;
    Complex tau;
    double global_phase;
    double t;
};

/// u(t) = eta(t) U(t) eta^{-1}(0) assembled entrywise from the closed forms
/// (the inverse of eta(0) enters analytically, never numerically).
Matrix2 unitary_general(const PropagatorCoeffs& coeffs, const DysonParams& params,
                        const DysonInit& init);

/// Reduced (phase-factored) form; cross-checked against the general form and
/// throwing InternalInconsistency if they disagree beyond 1e-7 entrywise.
UnitaryCoeffs unitary_reduced(const PropagatorCoeffs& coeffs,
                              const DysonParams& params, const DysonInit& init,
                              const LogDetTrack& track);

/// Rebuild the matrix from reduced coefficients.
Matrix2 unitary_matrix(const UnitaryCoeffs& u);

/// psi(t) = u psi(0).
StateVector evolve_state(const Matrix2& u, const StateVector& psi0);

} // namespace fracdyn
