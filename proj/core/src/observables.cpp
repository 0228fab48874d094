#include "fracdyn/observables.hpp"

#include <cmath>

#include "fracdyn/trajectory.hpp"

namespace fracdyn {

Magnetization magnetization(const StateVector& psi) {
    const double n = norm_squared(psi);
    if (n == 0.0)
        throw DegenerateState("magnetization: zero state");
    const Complex cross = std::conj(psi.c_up) * psi.c_down;
    return {2.0 * cross.real() / n, 2.0 * cross.imag() / n,
            (std::norm(psi.c_up) - std::norm(psi.c_down)) / n};
}

std::vector<Magnetization> magnetization_trajectory(FractionalOrder alpha,
                                                    const Preset& preset,
                                                    const DysonInit& init,
                                                    std::span<const double> grid,
                                                    double tol) {
    const auto traj = compute_trajectory(alpha, preset.omega(), init, grid, tol);
    std::vector<Magnetization> out;
    out.reserve(traj.points.size());
    for (const auto& pt : traj.points) {
        const Complex prod = pt.u.varpi * pt.u.tau;
        out.push_back({-2.0 * prod.real(), 2.0 * prod.imag(),
                       std::norm(pt.u.varpi) - std::norm(pt.u.tau)});
    }
    return out;
}

double population_difference(const StateVector& psi) {
    const double n = norm_squared(psi);
    if (n == 0.0)
        throw DegenerateState("population_difference: zero state");
    return (std::norm(psi.c_up) - std::norm(psi.c_down)) / n;
}

Intensities waveguide_intensities(const StateVector& psi) {
    if (norm_squared(psi) == 0.0)
        throw DegenerateState("waveguide_intensities: zero state");
    return {0.5 * std::norm(psi.c_up + psi.c_down),
            0.5 * std::norm(psi.c_up - psi.c_down)};
}

Intensities guide_intensities(const StateVector& psi) {
    if (norm_squared(psi) == 0.0)
        throw DegenerateState("guide_intensities: zero state");
    return {std::norm(psi.c_up), std::norm(psi.c_down)};
}

ObservableRecord observe(double t, const StateVector& psi) {
    const auto m = magnetization(psi);
    const auto g = guide_intensities(psi);
    return {t, m.m1, m.m2, m.m3, population_difference(psi), g.i_plus, g.i_minus};
}

} // namespace fracdyn
