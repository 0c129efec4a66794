#pragma once

#include <stdexcept>
#include <string>

namespace emknot {

/// Base class for all library failures.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Closed-form evaluation hit a vanishing denominator.
struct SingularPoint : Error {
    using Error::Error;
};

/// Adaptive quadrature exhausted its refinement budget.
struct QuadratureNotConverged : Error {
    using Error::Error;
};

/// Two grids expected to match differ in resolution or extent.
struct GridMismatch : Error {
    using Error::Error;
};

/// A spectral field violates k.F(k) = 0 beyond tolerance.
struct NotTransversal : Error {
    using Error::Error;
};

/// Synthesis of a supposedly real field left a large imaginary residue.
struct RealityViolated : Error {
    using Error::Error;
};

/// An operation requiring |k| > 0 received the zero wavevector.
struct ZeroWavevector : Error {
    using Error::Error;
};

/// Field magnitude underflowed while tracing a field line.
struct StagnationPoint : Error {
    using Error::Error;
};

/// Linking requested on a curve that never closed.
struct OpenCurve : Error {
    using Error::Error;
};

/// Curves pass too close for a reliable linking estimate.
struct CurvesTooClose : Error {
    using Error::Error;
};

/// Bad configuration, CLI flags or input file (exit code 2 territory).
struct ConfigError : Error {
    using Error::Error;
};

}  // namespace emknot
