#include "dqre/surface_code.hpp"

#include <cmath>

namespace dqre::surface_code {

double logical_error_rate(int d, double p) {
    if (d < 1 || d % 2 == 0)
        throw ConfigError("logical_error_rate: distance must be odd and >= 1");
    if (p < 0.0)
        throw ConfigError("logical_error_rate: p must be non-negative");
    const int exponent = (d + 1) / 2;
    return 0.03 * std::pow(p / 0.01, static_cast<double>(exponent));
}

int min_distance(double p, double target, int d_max) {
    if (target <= 0.0)
        throw ConfigError("min_distance: target must be positive");
    if (p < 0.0)
        throw ConfigError("min_distance: p must be non-negative");
    for (int d = 1; d <= d_max; d += 2) {
        if (logical_error_rate(d, p) <= target)
            return d;
    }
    // Above threshold the rate never decreases with d, so this also
    // catches p >= 1% whenever the target is below 0.03.
    throw InfeasibleError("min_distance: no distance <= " + std::to_string(d_max) +
                          " reaches the target logical error rate");
}

double cycle_time(int d, const PhysicalQubitModel& hw, double c) {
    if (d < 1)
        throw ConfigError("cycle_time: distance must be >= 1");
    return c * static_cast<double>(d) * hw.t_op;
}

double cycle_steps(int d, double c) {
    if (d < 1)
        throw ConfigError("cycle_steps: distance must be >= 1");
    if (d == 1)
        return 1.0;
    return c * static_cast<double>(d);
}

long physical_qubits_per_tile(int d) {
    if (d < 1)
        throw ConfigError("physical_qubits_per_tile: distance must be >= 1");
    return 2L * d * d - 1L;
}

double clifford_error_at(int d, double p) {
    if (d == 1)
        return p;
    return logical_error_rate(d, p);
}

} // namespace dqre::surface_code
