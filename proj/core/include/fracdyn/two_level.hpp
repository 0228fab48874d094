#pragma once

#include <complex>
#include <utility>

#include "fracdyn/errors.hpp"

namespace fracdyn {

using Complex = std::complex<double>;

/// Coefficient vector of the traceless two-level Hamiltonian H = hbar sigma.omega,
/// components omega_k = omega_{k,R} + i omega_{k,I} in units s^{-alpha}.
struct OmegaVector {
    Complex w1, w2, w3;

    bool is_finite() const {
        auto ok = [](Complex c) {
            return std::isfinite(c.real()) && std::isfinite(c.imag());
        };
        return ok(w1) && ok(w2) && ok(w3);
    }
};

/// Dimensionless Planck scale constant; strictly positive, 1 in all presets.
struct HbarAlpha {
    double value;

    explicit HbarAlpha(double v = 1.0) : value(v) {
        if (!(v > 0.0) || !std::isfinite(v))
            throw DomainError("HbarAlpha: must be strictly positive");
    }
};

/// Dense 2x2 complex matrix. Houses U_alpha, eta_alpha, u_alpha, Theta_alpha
/// and the Pauli matrices; everything downstream is closed-form on these.
struct Matrix2 {
    Complex a11, a12, a21, a22;

    static Matrix2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
    static Matrix2 zero() { return {0.0, 0.0, 0.0, 0.0}; }

    Matrix2 operator+(const Matrix2& o) const {
        return {a11 + o.a11, a12 + o.a12, a21 + o.a21, a22 + o.a22};
    }
    Matrix2 operator-(const Matrix2& o) const {
        return {a11 - o.a11, a12 - o.a12, a21 - o.a21, a22 - o.a22};
    }
    Matrix2 operator*(const Matrix2& o) const {
        return {a11 * o.a11 + a12 * o.a21, a11 * o.a12 + a12 * o.a22,
                a21 * o.a11 + a22 * o.a21, a21 * o.a12 + a22 * o.a22};
    }
    friend Matrix2 operator*(Complex s, const Matrix2& m) {
        return {s * m.a11, s * m.a12, s * m.a21, s * m.a22};
    }

    Matrix2 adjoint() const {
        return {std::conj(a11), std::conj(a21), std::conj(a12), std::conj(a22)};
    }
    Complex trace() const { return a11 + a22; }
    Complex det() const { return a11 * a22 - a12 * a21; }

    /// Induced infinity norm (max absolute row sum).
    double norm_inf() const {
        return std::max(std::abs(a11) + std::abs(a12),
                        std::abs(a21) + std::abs(a22));
    }
    double max_abs() const {
        return std::max(std::max(std::abs(a11), std::abs(a12)),
                        std::max(std::abs(a21), std::abs(a22)));
    }
    bool is_finite() const {
        auto ok = [](Complex c) {
            return std::isfinite(c.real()) && std::isfinite(c.imag());
        };
        return ok(a11) && ok(a12) && ok(a21) && ok(a22);
    }
};

/// Two-level state amplitudes in the sigma_3 eigenbasis.
struct StateVector {
    Complex c_up, c_down;
};

inline double norm_squared(const StateVector& s) {
    return std::norm(s.c_up) + std::norm(s.c_down);
}

inline StateVector apply(const Matrix2& m, const StateVector& s) {
    return {m.a11 * s.c_up + m.a12 * s.c_down, m.a21 * s.c_up + m.a22 * s.c_down};
}

/// Standard Pauli matrix sigma_k, k in {1,2,3}.
Matrix2 pauli(int k);

/// hbar (w1 sigma_1 + w2 sigma_2 + w3 sigma_3); trace is exactly zero.
Matrix2 hamiltonian(const OmegaVector& omega, const HbarAlpha& hbar = HbarAlpha{});

/// Principal square root of w1^2 + w2^2 + w3^2. Delta = 0 is allowed;
/// downstream code handles the removable singularity.
Complex delta(const OmegaVector& omega);

/// Eigenvalues (min, max) of a Hermitian 2x2 matrix, closed form.
std::pair<double, double> hermitian_eigenvalues(const Matrix2& m);

} // namespace fracdyn
