#pragma once

#include <stdexcept>
#include <string>

namespace dqre {

// Base class for all errors raised by the estimator stack.
struct EstimatorError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid user input or configuration (bad parameters, unknown keys).
struct ConfigError : EstimatorError {
    using EstimatorError::EstimatorError;
};

// No configuration satisfies the requested constraints.
struct InfeasibleError : EstimatorError {
    using EstimatorError::EstimatorError;
};

// A distillation level operates outside its useful regime
// (rejection >= 1, negative probabilities, or no error reduction).
struct RegimeError : EstimatorError {
    using EstimatorError::EstimatorError;
};

// An iterative solve failed to settle within its cap.
struct ConvergenceError : EstimatorError {
    using EstimatorError::EstimatorError;
};

} // namespace dqre
