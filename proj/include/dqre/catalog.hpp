#pragma once

#include "dqre/estimator.hpp"

#include <vector>

namespace dqre {

struct Preset {
    std::string name;
    HardwareModel hardware;
};

namespace catalog {

// Benchmark application set with published (Q_D, T-count) pairs.
const std::vector<ApplicationProfile>& builtin_applications();
ApplicationProfile application(const std::string& name);

// fast (50ns) / slow (100us) x optimistic (p=1e-4) / pessimistic (p=1e-3)
// x raw Bell error {5%, 1%, 0.1%}. Two-part names ("fast-optimistic")
// resolve to the 1% Bell variant.
const std::vector<Preset>& builtin_hardware();
HardwareModel preset(const std::string& name);

// Sweep defaults.
inline constexpr double kEtaSweepMin = 300.0;   // Hz
inline constexpr double kEtaSweepMax = 200e6;   // Hz
const std::vector<long>& default_node_sizes();  // 3000 .. 100000

} // namespace catalog
} // namespace dqre
