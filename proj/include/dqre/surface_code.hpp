#pragma once

#include "dqre/errors.hpp"

namespace dqre {

// Physical-layer model: uniform operation time and per-operation error rate.
struct PhysicalQubitModel {
    double t_op = 50e-9; // seconds per physical operation layer
    double p = 1e-4;     // error probability per physical operation

    void validate() const {
        if (t_op <= 0.0)
            throw ConfigError("t_op must be positive");
        if (p < 0.0 || p >= 1.0)
            throw ConfigError("physical error rate must be in [0,1)");
    }
};

struct CodeParams {
    int distance = 9;               // odd, >= 1
    double rounds_factor = 10.0;    // physical op-layers per syndrome round

    void validate() const {
        if (distance < 1 || distance % 2 == 0)
            throw ConfigError("code distance must be odd and >= 1");
        if (rounds_factor <= 0.0)
            throw ConfigError("rounds-per-cycle factor must be positive");
    }
};

namespace surface_code {

inline constexpr int kMaxDistance = 99;

// Logical error rate per tile per cycle: 0.03 * (p/0.01)^((d+1)/2).
double logical_error_rate(int d, double p);

// Smallest odd d with logical_error_rate(d, p) <= target.
// Throws InfeasibleError when no d <= d_max suffices.
int min_distance(double p, double target, int d_max = kMaxDistance);

// Cycle time tau(d) = c * d * t_op.
double cycle_time(int d, const PhysicalQubitModel& hw, double c);

// Cycle length in physical op-layers: c * d. At d = 1 the protocol is
// executed directly on physical qubits, one op-layer per cycle.
double cycle_steps(int d, double c);

// 2d^2 - 1: d^2 data qubits plus d^2 - 1 measurement ancillas.
long physical_qubits_per_tile(int d);

// Error rate governing Clifford operations at a given code distance.
// d = 1 means physical execution, so the physical rate applies.
double clifford_error_at(int d, double p);

} // namespace surface_code
} // namespace dqre
