#include "fracdyn/two_level.hpp"

#include <cmath>

namespace fracdyn {

Matrix2 pauli(int k) {
    switch (k) {
        case 1: return {0.0, 1.0, 1.0, 0.0};
        case 2: return {0.0, Complex{0.0, -1.0}, Complex{0.0, 1.0}, 0.0};
        case 3: return {1.0, 0.0, 0.0, -1.0};
        default: throw DomainError("pauli: index must be 1, 2 or 3");
    }
}

Matrix2 hamiltonian(const OmegaVector& omega, const HbarAlpha& hbar) {
    if (!omega.is_finite())
        throw DomainError("hamiltonian: omega must be finite");
    const double h = hbar.value;
    const Complex i{0.0, 1.0};
    return {h * omega.w3, h * (omega.w1 - i * omega.w2),
            h * (omega.w1 + i * omega.w2), -h * omega.w3};
}

Complex delta(const OmegaVector& omega) {
    if (!omega.is_finite())
        throw DomainError("delta: omega must be finite");
    return std::sqrt(omega.w1 * omega.w1 + omega.w2 * omega.w2 +
                     omega.w3 * omega.w3);
}

std::pair<double, double> hermitian_eigenvalues(const Matrix2& m) {
    const double a = m.a11.real();
    const double d = m.a22.real();
    const double mean = 0.5 * (a + d);
    const double rad = std::hypot(0.5 * (a - d), std::abs(m.a12));
    return {mean - rad, mean + rad};
}

} // namespace fracdyn
