#pragma once

#include <stdexcept>
#include <string>

namespace hv {

struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// Root finding did not settle at the requested precision.
struct PrecisionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DegeneracyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConditioningError : std::runtime_error {
    int numerical_rank;
    ConditioningError(const std::string& what, int rank)
        : std::runtime_error(what), numerical_rank(rank) {}
};

// Failures of the termwise d-bar calculus.
struct CalculusError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct LogObstruction : CalculusError {
    using CalculusError::CalculusError;
};
struct DivergenceError : CalculusError {
    using CalculusError::CalculusError;
};

}  // namespace hv
