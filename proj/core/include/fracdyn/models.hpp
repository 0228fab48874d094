#pragma once

#include <map>
#include <string>

#include "fracdyn/dyson.hpp"
#include "fracdyn/two_level.hpp"

namespace fracdyn {

/// Coefficient vector (0, 0, -omega_L/2) of the Zeeman Hamiltonian; Delta = omega_L/2.
OmegaVector zeeman(double omega_L);

/// One-site Yang-Lee reduction: (-i xi/2, 0, -1/2); Delta = sqrt(1 - xi^2)/2.
/// xi = 1 sits at the exceptional point Delta = 0.
OmegaVector yang_lee_one_site(double xi);

/// General Yang-Lee chain entry point. Only the one-site, zero-coupling
/// reduction is supported; anything else is rejected explicitly rather than
/// silently truncated.
OmegaVector yang_lee_chain(int n_sites, double coupling, double xi);

/// PT-symmetric coupled waveguides: (varsigma, 0, -i epsilon);
/// Delta = sqrt(varsigma^2 - epsilon^2), zero at varsigma = epsilon.
OmegaVector pt_waveguide(double varsigma, double epsilon);

enum class PresetName { zeeman, yang_lee_one_site, pt_waveguide };

const char* to_string(PresetName name);

/// Named model with its parameters, default initial state and Dyson map
/// initial values (kappa0 = 0, |lambda0| = 3/2 phase 0, Lambda0 = 2).
struct Preset {
    PresetName name;
    std::map<std::string, double> parameters;
    StateVector initial_state;
    DysonInit dyson_init;

    OmegaVector omega() const;
};

/// Preset with default parameters: zeeman {omega_L: 2} starting spin-up,
/// yang_lee_one_site {xi: 0.5} starting spin-down, pt_waveguide
/// {varsigma: 1, epsilon: 0.5} starting (1,1)/sqrt(2).
Preset make_preset(PresetName name);

/// Preset with explicit parameters; a key that does not belong to the model
/// is rejected (DomainError), missing keys take their defaults.
Preset make_preset(PresetName name, const std::map<std::string, double>& parameters);

} // namespace fracdyn
