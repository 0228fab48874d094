#pragma once

#include <span>
#include <vector>

#include "fracdyn/models.hpp"
#include "fracdyn/two_level.hpp"

namespace fracdyn {

struct Magnetization {
    double m1, m2, m3;
};

/// M_k = <psi|sigma_k|psi> / <psi|psi>; unit Bloch norm for pure states.
Magnetization magnetization(const StateVector& psi);

/// Closed-form magnetization trajectory for a spin-up start:
///   M1 = -2 Re(varpi tau), M2 = 2 Im(varpi tau), M3 = |varpi|^2 - |tau|^2.
/// Agrees pointwise with magnetization(evolve_state(...)).
std::vector<Magnetization> magnetization_trajectory(FractionalOrder alpha,
                                                    const Preset& preset,
                                                    const DysonInit& init,
                                                    std::span<const double> grid,
                                                    double tol = 1e-12);

/// <sigma_3> = (|c_up|^2 - |c_down|^2) / <psi|psi>; for a spin-down start this
/// is |tau|^2 - |varpi|^2 in reduced coefficients.
double population_difference(const StateVector& psi);

struct Intensities {
    double i_plus, i_minus;
};

/// Mode-basis projections |<+-|psi>|^2 with |+-> = (1, +-1)/sqrt(2); they sum
/// to <psi|psi>.
Intensities waveguide_intensities(const StateVector& psi);

/// Per-guide intensities |E+|^2 = |c_up|^2, |E-|^2 = |c_down|^2 (the emitted
/// intensity columns use this basis).
Intensities guide_intensities(const StateVector& psi);

/// Everything observed at one grid point. Intensity fields are guide-basis.
struct ObservableRecord {
    double t;
    double m1, m2, m3;
    double pop_diff;
    double i_plus, i_minus;
};

ObservableRecord observe(double t, const StateVector& psi);

} // namespace fracdyn
