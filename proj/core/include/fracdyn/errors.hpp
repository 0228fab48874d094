#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fracdyn {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// An argument is outside an operation's documented domain.
class DomainError : public Error {
public:
    using Error::Error;
};

/// The requested tolerance cannot be certified at working precision.
/// Callers may retry with a larger tolerance.
class NonConvergence : public Error {
public:
    using Error::Error;
};

/// A single-step phase increment of ln det reached pi: the time grid is
/// too coarse for continuous unwrapping and must be refined by the caller.
class PhaseJumpError : public Error {
public:
    PhaseJumpError(std::size_t grid_index, double t, double increment)
        : Error("phase increment " + std::to_string(increment) +
                " rad at grid index " + std::to_string(grid_index) +
                " (t=" + std::to_string(t) + ") reached pi; refine the grid"),
          grid_index(grid_index), t(t), increment(increment) {}

    std::size_t grid_index;
    double t;
    double increment;
};

/// A quantity that must be strictly positive (Lambda, metric eigenvalues)
/// came out non-positive. Never expected analytically; signals breakdown.
class PositivityViolation : public Error {
public:
    using Error::Error;
};

/// Two algebraically equivalent routes disagreed beyond tolerance.
class InternalInconsistency : public Error {
public:
    using Error::Error;
};

/// Malformed scenario/configuration input.
class ConfigError : public Error {
public:
    using Error::Error;
};

/// A model outside the supported reduction was requested.
class UnsupportedModel : public Error {
public:
    using Error::Error;
};

/// A zero state vector was passed where an expectation value is required.
class DegenerateState : public Error {
public:
    using Error::Error;
};

} // namespace fracdyn
