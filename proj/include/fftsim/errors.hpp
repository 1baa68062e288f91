#pragma once

#include <stdexcept>
#include <string>

namespace fftsim {

// Error categories used across the simulator. Every message is prefixed
// with the subsystem that raised it so CLI diagnostics name the culprit.
class SimError : public std::runtime_error {
public:
    explicit SimError(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid static configuration: bad word widths, non-power-of-two sizes,
// mismatched fixed-point formats.
class ConfigError : public SimError {
public:
    using SimError::SimError;
};

// Malformed or out-of-contract input data (files, frames, vectors).
class InputError : public SimError {
public:
    using SimError::SimError;
};

// A sequencing violation inside the simulated machine: stepping with no
// frame loaded, writing a full RAM bank, reading an incomplete one.
class ProtocolError : public SimError {
public:
    using SimError::SimError;
};

// Filesystem-level failure.
class IoError : public SimError {
public:
    using SimError::SimError;
};

} // namespace fftsim
