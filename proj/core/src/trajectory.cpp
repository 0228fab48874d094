#include "fracdyn/trajectory.hpp"

#include <cmath>
#include <sstream>

namespace fracdyn {

std::vector<double> uniform_grid(double t_max, int n_points) {
    if (!(t_max > 0.0) || !std::isfinite(t_max))
        throw DomainError("uniform_grid: t_max must be finite and > 0");
    if (n_points < 2)
        throw DomainError("uniform_grid: n_points must be >= 2");
    std::vector<double> grid(static_cast<std::size_t>(n_points));
    for (int i = 0; i < n_points; ++i)
        grid[static_cast<std::size_t>(i)] =
            t_max * static_cast<double>(i) / static_cast<double>(n_points - 1);
    grid[0] = 0.0;
    return grid;
}

Trajectory compute_trajectory(FractionalOrder alpha, const OmegaVector& omega,
                              const DysonInit& init, std::span<const double> grid,
                              double tol) {
    if (grid.empty() || grid[0] != 0.0)
        throw DomainError("compute_trajectory: grid must start at t = 0");
    for (std::size_t i = 1; i < grid.size(); ++i)
        if (!(grid[i] > grid[i - 1]))
            throw DomainError("compute_trajectory: grid must be strictly increasing");

    Trajectory traj{alpha.alpha, omega, init, {}};
    traj.points.reserve(grid.size());

    PhaseTracker tracker;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double t = grid[i];
        TrajectoryPoint pt{};
        pt.t = t;
        pt.prop = propagator_coeffs(alpha, omega, t, tol);
        pt.logdet = tracker.step(t, det_propagator(pt.prop));
        pt.dyson = dyson_params(pt.prop, init, pt.logdet);

        if (i == 0) {
            // The closed forms must reproduce the initial values exactly;
            // anything else signals a transcription or branch error.
            const double dl = std::abs(pt.dyson.lambda - init.lambda0);
            const double dL = std::abs(pt.dyson.Lambda - init.Lambda0);
            if (dl > 1e-12 * (1.0 + std::abs(init.lambda0)) ||
                dL > 1e-12 * init.Lambda0) {
                std::ostringstream os;
                os << "compute_trajectory: t=0 self-consistency failed "
                   << "(|dlambda|=" << dl << ", |dLambda|=" << dL << ")";
                throw InternalInconsistency(os.str());
            }
        }

        pt.u_general = unitary_general(pt.prop, pt.dyson, init);
        pt.u = unitary_reduced(pt.prop, pt.dyson, init, pt.logdet);
        traj.points.push_back(pt);
    }
    return traj;
}

} // namespace fracdyn
