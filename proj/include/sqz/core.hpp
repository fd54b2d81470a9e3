#pragma once

#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace sqz {

using cx = std::complex<double>;
inline constexpr cx im{0.0, 1.0};
inline constexpr double two_pi = 2.0 * std::numbers::pi;

// Errors carry the failing quantity in the message; the CLI maps them to exit codes.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IntegrationError : std::runtime_error {
    IntegrationError(const std::string& what, std::size_t step)
        : std::runtime_error(what + " (step " + std::to_string(step) + ")"), step_index(step) {}
    std::size_t step_index;
};

struct LookupError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace sqz
