#pragma once

#include <stdexcept>
#include <string>

namespace attoclock {

// Peak field exceeds the atomic field strength: the barrier is fully
// suppressed and no tunneling geometry exists (BSI regime).
class BarrierSuppressedError : public std::domain_error {
public:
    BarrierSuppressedError(double f, double f_a)
        : std::domain_error("barrier-suppression regime: field " + std::to_string(f) +
                            " au exceeds atomic field strength " + std::to_string(f_a) + " au"),
          field(f),
          atomic_field(f_a) {}

    double field;
    double atomic_field;
};

// Requested tunneling contribution exceeds the barrier height, i.e. the
// delay is past its adiabatic saturation value.
class SaturationExceededError : public std::domain_error {
public:
    SaturationExceededError(double delta_eps, double delta_z)
        : std::domain_error("energy offset " + std::to_string(delta_eps) +
                            " au exceeds barrier height " + std::to_string(delta_z) + " au"),
          delta_eps(delta_eps),
          delta_z(delta_z) {}

    double delta_eps;
    double delta_z;
};

// Malformed dataset file; line is 1-based, 0 when the file itself is bad.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string message, long line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message
                                      : std::move(message)),
          line(line) {}

    long line;
};

// Dataset row violates a value constraint (negative error bar, non-positive field).
class ValidationError : public std::runtime_error {
public:
    ValidationError(std::string message, long line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message
                                      : std::move(message)),
          line(line) {}

    long line;
};

// No measurement survived the comparison preconditions.
class EmptyComparisonError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace attoclock
