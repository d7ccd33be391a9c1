#pragma once

#include <stdexcept>
#include <string>

namespace dtqw {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Walk specification problems.
struct SpecError : Error {
    using Error::Error;
};
struct EmptyPeriodError : SpecError {
    EmptyPeriodError() : SpecError("walk period m must be >= 1") {}
};
struct LengthMismatchError : SpecError {
    using SpecError::SpecError;
};
struct NonFiniteAngleError : SpecError {
    using SpecError::SpecError;
};
struct WrongPeriodError : SpecError {
    using SpecError::SpecError;
};
struct UnsupportedPeriodError : SpecError {
    using SpecError::SpecError;
};

// Spectral computations.
struct BandEdgeDegeneracyError : Error {
    using Error::Error;
};
struct OutOfBandError : Error {
    using Error::Error;
};
struct UnresolvedRootError : Error {
    using Error::Error;
};

// Dynamics / spectroscopy.
struct InsufficientHistoryError : Error {
    using Error::Error;
};
struct NoDipFoundError : Error {
    using Error::Error;
};
struct ZeroCouplingError : Error {
    ZeroCouplingError() : Error("coupling strength chi must be nonzero") {}
};

// Configuration and I/O.
struct ConfigError : Error {
    using Error::Error;
};
struct ParseError : ConfigError {
    using ConfigError::ConfigError;
};
struct UnknownKeyError : ConfigError {
    using ConfigError::ConfigError;
};
struct MissingRequiredError : ConfigError {
    using ConfigError::ConfigError;
};
struct IoError : Error {
    using Error::Error;
};

} // namespace dtqw
