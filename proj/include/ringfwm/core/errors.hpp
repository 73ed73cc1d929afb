#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ringfwm {

/// Base class for domain errors raised by this library. Plain precondition
/// violations use std::invalid_argument directly.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InconsistentQError : Error { using Error::Error; };
struct LosslessDegenerateError : Error { using Error::Error; };
struct SpanTooNarrowError : Error { using Error::Error; };
struct AmbiguousPeakError : Error { using Error::Error; };
struct ModeMismatchError : Error { using Error::Error; };
struct DegenerateSourceError : Error { using Error::Error; };
struct EnergyMismatchError : Error { using Error::Error; };
struct CoherenceError : Error { using Error::Error; };
struct NoResonanceError : Error { using Error::Error; };
struct NoMinimumError : Error { using Error::Error; };
struct IoError : Error { using Error::Error; };

struct ParseError : Error {
    ParseError(const std::string& what, std::size_t line)
        : Error(what + " (line " + std::to_string(line) + ")"), line(line) {}
    std::size_t line;
};

struct ConfigError : Error {
    ConfigError(std::string field_name, const std::string& what)
        : Error("config field '" + field_name + "': " + what),
          field(std::move(field_name)) {}
    std::string field;
};

}  // namespace ringfwm
