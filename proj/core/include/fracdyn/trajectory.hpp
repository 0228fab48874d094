#pragma once

#include <span>
#include <vector>

#include "fracdyn/dyson.hpp"
#include "fracdyn/frac_evolution.hpp"
#include "fracdyn/unitary.hpp"

namespace fracdyn {

/// One grid point of a fully propagated evolution: non-unitary coefficients,
/// tracked log-determinant, Dyson parameters, and the unitary propagator in
/// both forms.
struct TrajectoryPoint {
    double t;
    PropagatorCoeffs prop;
    LogDetTrack logdet;
    DysonParams dyson;
    Matrix2 u_general;
    UnitaryCoeffs u;
};

struct Trajectory {
    double alpha;
    OmegaVector omega;
    DysonInit init;
    std::vector<TrajectoryPoint> points;
};

/// Propagate along an ordered grid (t0 = 0, strictly increasing). Runs the
/// t = 0 self-consistency guard: the closed forms must reproduce
/// (lambda0, Lambda0) at the first point or InternalInconsistency is thrown.
Trajectory compute_trajectory(FractionalOrder alpha, const OmegaVector& omega,
                              const DysonInit& init, std::span<const double> grid,
                              double tol);

/// n_points uniformly spaced values covering [0, t_max], first exactly 0.
std::vector<double> uniform_grid(double t_max, int n_points);

} // namespace fracdyn
