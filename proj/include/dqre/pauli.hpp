#pragma once

#include "dqre/errors.hpp"

namespace dqre {

// Per-Bell-pair error components by Pauli basis.
struct PauliErrorRates {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    double total() const { return x + y + z; }

    void validate() const {
        if (x < 0.0 || y < 0.0 || z < 0.0)
            throw ConfigError("Pauli error components must be non-negative");
        if (total() > 1.0)
            throw ConfigError("Pauli error components must sum to at most 1");
    }

    // Depolarizing split of a scalar error rate.
    static PauliErrorRates depolarizing(double total) {
        return {total / 3.0, total / 3.0, total / 3.0};
    }
};

} // namespace dqre
