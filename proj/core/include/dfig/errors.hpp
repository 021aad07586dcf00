#pragma once

#include <stdexcept>
#include <string>

namespace dfig {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A physical or controller parameter violates its invariants.
class InvalidParameterError : public Error {
public:
    using Error::Error;
};

/// The steady-state solver could not find an equilibrium (weak grid /
/// excessive power demand). Carries the residual norm of the last iterate.
class NoEquilibriumError : public Error {
public:
    NoEquilibriumError(const std::string& what, double residual)
        : Error(what), residual_norm(residual) {}
    double residual_norm;
};

/// Transfer-function evaluation hit a denominator zero.
class PoleError : public Error {
public:
    PoleError(const std::string& what, double omega)
        : Error(what), omega_rad_s(omega) {}
    double omega_rad_s;
};

/// Inversion of the zero transfer function.
class DivisionByZeroError : public Error {
public:
    using Error::Error;
};

/// 2x2 matrix inversion on a (numerically) singular matrix.
class SingularMatrixError : public Error {
public:
    using Error::Error;
};

/// An operation received an admittance model in the wrong frame.
class FrameMismatchError : public Error {
public:
    using Error::Error;
};

/// Operating point unusable for linearization (e.g. V_sd0 <= 0).
class InvalidOperatingPointError : public Error {
public:
    using Error::Error;
};

/// A Nyquist locus passes too close to the critical point to count
/// encirclements reliably.
class MarginalCaseError : public Error {
public:
    MarginalCaseError(const std::string& what, double distance)
        : Error(what), distance_to_critical(distance) {}
    double distance_to_critical;
};

/// Equivalent-SISO reduction degenerate at one frequency (Z22 + Zg22 ~ 0).
class DegenerateReductionError : public Error {
public:
    DegenerateReductionError(const std::string& what, double f_hz)
        : Error(what), frequency_hz(f_hz) {}
    double frequency_hz;
};

/// The two-injection system of a frequency-scan point is ill conditioned.
class ScanConditioningError : public Error {
public:
    ScanConditioningError(const std::string& what, double f_hz, double cond)
        : Error(what), frequency_hz(f_hz), condition(cond) {}
    double frequency_hz;
    double condition;
};

/// FFT analysis window too short for the requested resolution.
class ResolutionError : public Error {
public:
    using Error::Error;
};

/// Malformed or inconsistent run configuration. Carries the offending key
/// and, for text configs, the 1-based line number (0 if not applicable).
class ConfigError : public Error {
public:
    ConfigError(const std::string& what, std::string key_in = {}, int line_in = 0)
        : Error(what), key(std::move(key_in)), line(line_in) {}
    std::string key;
    int line;
};

/// Any other numerical failure (non-convergence, overflow, ...).
class NumericalError : public Error {
public:
    using Error::Error;
};

} // namespace dfig
