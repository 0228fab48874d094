#include "fracdyn/frac_evolution.hpp"

#include <cmath>
#include <sstream>

namespace fracdyn {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kRemovableLimit = 1e-8;  // |Delta t^a| below this takes the limit path

} // namespace

PropagatorCoeffs propagator_coeffs(FractionalOrder alpha, const OmegaVector& omega,
                                   double t, double tol) {
    return propagator_coeffs_with_delta(alpha, omega, delta(omega), t, tol);
}

PropagatorCoeffs propagator_coeffs_with_delta(FractionalOrder alpha,
                                              const OmegaVector& omega,
                                              Complex delta_root, double t,
                                              double tol) {
    if (!(t >= 0.0) || !std::isfinite(t))
        throw DomainError("propagator_coeffs: t must be finite and >= 0");
    if (!(tol > 0.0))
        throw DomainError("propagator_coeffs: tol must be positive");
    if (!omega.is_finite())
        throw DomainError("propagator_coeffs: omega must be finite");

    const double ta = std::pow(t, alpha.alpha);
    const Complex x = delta_root * ta;           // Delta t^alpha
    const Complex u = i_pow_minus_alpha(alpha.alpha);

    MLResult ep, em;
    try {
        ep = ml(alpha, u * x, tol);
        em = ml(alpha, -(u * x), tol);
    } catch (const NonConvergence& e) {
        std::ostringstream os;
        os << "propagator_coeffs at t=" << t << ", alpha=" << alpha.alpha << ": "
           << e.what();
        throw NonConvergence(os.str());
    }

    const Complex c = 0.5 * (ep.value + em.value);
    Complex s;        // S_alpha(x)
    Complex g;        // i^{-a} S_alpha(x) / Delta = (E+ - E-) / (2 Delta)
    double g_err;

    if (std::abs(x) < kRemovableLimit) {
        const double inv_gamma = inv_gamma_alpha_plus_one(alpha);
        s = x * inv_gamma;
        g = u * (ta * inv_gamma);
        g_err = std::abs(g) * 1e-15;  // limit truncation O(|x|^2) plus roundoff
    } else {
        const Complex diff = ep.value - em.value;
        s = 0.5 * std::conj(u) * diff;
        g = diff / (2.0 * delta_root);
        g_err = 0.5 * (ep.error_bound + em.error_bound) / std::abs(delta_root);
    }

    const double wmag =
        std::abs(omega.w3) + std::abs(omega.w1) + std::abs(omega.w2);

    PropagatorCoeffs coeffs{};
    coeffs.t = t;
    coeffs.alpha = alpha.alpha;
    coeffs.tol = tol;
    coeffs.Wp = c + omega.w3 * g;
    coeffs.Wm = c - omega.w3 * g;
    coeffs.Tp = (omega.w1 + Complex{0.0, 1.0} * omega.w2) * g;
    coeffs.Tm = (omega.w1 - Complex{0.0, 1.0} * omega.w2) * g;
    coeffs.C = c;
    coeffs.S = s;
    coeffs.error_bound = 0.5 * (ep.error_bound + em.error_bound) + wmag * g_err;
    return coeffs;
}

Matrix2 propagator_matrix(const PropagatorCoeffs& coeffs) {
    return {coeffs.Wp, coeffs.Tm, coeffs.Tp, coeffs.Wm};
}

Complex det_propagator(const PropagatorCoeffs& coeffs) {
    const Complex d1 = coeffs.Wp * coeffs.Wm - coeffs.Tp * coeffs.Tm;
    const Complex d2 = coeffs.C * coeffs.C -
                       minus_one_pow(-coeffs.alpha) * coeffs.S * coeffs.S;
    const double diff = std::abs(d1 - d2);
    if (diff > 100.0 * coeffs.tol * std::max(1.0, std::abs(d1))) {
        std::ostringstream os;
        os << "det_propagator: determinant routes differ by " << diff
           << " at t=" << coeffs.t << " (alpha=" << coeffs.alpha << ")";
        throw InternalInconsistency(os.str());
    }
    return d1;
}

LogDetTrack PhaseTracker::step(double t, Complex d) {
    if (first_) {
        first_ = false;
        if (std::abs(d - Complex{1.0, 0.0}) > 1e-8)
            throw InternalInconsistency(
                "PhaseTracker: determinant at t=0 is not 1");
        prev_ = d;
        index_ = 1;
        return {t, 0.0, 0.0};
    }
    const double ad = std::abs(d);
    if (!(ad > 0.0))
        throw PhaseJumpError(index_, t, kPi);  // determinant vanished; untrackable
    const double inc = std::arg(d / prev_);
    if (std::abs(inc) >= kPi - 1e-6)
        throw PhaseJumpError(index_, t, inc);
    phase_ += inc;
    prev_ = d;
    ++index_;
    return {t, std::log(ad), phase_};
}

std::vector<LogDetTrack> track_log_det(FractionalOrder alpha,
                                       const OmegaVector& omega,
                                       std::span<const double> grid, double tol) {
    if (grid.empty() || grid[0] != 0.0)
        throw DomainError("track_log_det: grid must start at t = 0");
    for (std::size_t i = 1; i < grid.size(); ++i)
        if (!(grid[i] > grid[i - 1]))
            throw DomainError("track_log_det: grid must be strictly increasing");

    std::vector<LogDetTrack> out;
    out.reserve(grid.size());
    PhaseTracker tracker;
    for (double t : grid) {
        const auto coeffs = propagator_coeffs(alpha, omega, t, tol);
        out.push_back(tracker.step(t, det_propagator(coeffs)));
    }
    return out;
}

} // namespace fracdyn
