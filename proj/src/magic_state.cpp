#include "dqre/magic_state.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

namespace dqre {

std::string to_string(MsdfKind kind) {
    switch (kind) {
    case MsdfKind::FifteenToOne: return "15-to-1";
    case MsdfKind::TwentyToFour: return "20-to-4";
    }
    throw ConfigError("unknown MSDF kind");
}

MsdfKind msdf_kind_from_string(const std::string& name) {
    if (name == "15-to-1") return MsdfKind::FifteenToOne;
    if (name == "20-to-4") return MsdfKind::TwentyToFour;
    throw ConfigError("unknown MSDF unit: " + name);
}

MsdfUnit make_msdf_unit(MsdfKind kind, const MsdfParams& params) {
    MsdfUnit u;
    u.kind = kind;
    u.floor_coeff = params.floor_coeff;
    if (kind == MsdfKind::FifteenToOne) {
        u.inputs = 15;
        u.outputs = 1;
        u.tiles = std::max(1, static_cast<int>(std::lround(params.fifteen_tiles * params.tile_scale)));
        u.duration_cycles = params.fifteen_cycles;
        u.out_coeff = 35.0;
        u.out_power = 3.0;
        u.reject_coeff = 15.0;
        u.floor_reject_coeff = 15.0;
    } else {
        u.inputs = 20;
        u.outputs = 4;
        u.tiles = std::max(1, static_cast<int>(std::lround(params.twenty_tiles * params.tile_scale)));
        u.duration_cycles = params.twenty_cycles;
        u.out_coeff = 22.0;
        u.out_power = 2.0;
        u.reject_coeff = 20.0;
        u.floor_reject_coeff = 20.0;
    }
    return u;
}

std::string MsdfFactory::chain_key() const {
    std::ostringstream os;
    for (size_t i = 0; i < levels.size(); ++i) {
        if (i)
            os << "|";
        os << to_string(levels[i].kind) << ":" << levels[i].distance;
    }
    return os.str();
}

MsdfFactory compose_msdf(const std::vector<MsdfLevel>& chain, const PhysicalQubitModel& hw,
                         double c, const MsdfParams& params) {
    hw.validate();
    if (chain.empty())
        throw ConfigError("compose_msdf: chain must be non-empty");

    MsdfFactory f;
    f.levels = chain;

    struct LevelEval {
        MsdfUnit unit;
        double duration;
        double accept;
    };
    std::vector<LevelEval> evals;

    double p_in = params.injection_factor * hw.p;
    double inputs = 1.0;
    for (size_t i = 0; i < chain.size(); ++i) {
        const MsdfLevel& level = chain[i];
        if (level.distance < 1 || level.distance % 2 == 0)
            throw ConfigError("MSDF level distance must be odd and >= 1");
        const MsdfUnit unit = make_msdf_unit(level.kind, params);
        const double p_c = surface_code::clifford_error_at(level.distance, hw.p);

        const double rejection = unit.reject_coeff * p_in + unit.floor_reject_coeff * p_c;
        if (rejection >= 1.0)
            throw RegimeError("compose_msdf: level " + std::to_string(i) + " always rejects");
        const double accept = 1.0 - rejection;
        const double out = unit.out_coeff * std::pow(p_in, unit.out_power) + unit.floor_coeff * p_c;
        if (p_in > 0.0 && out >= p_in)
            throw RegimeError("compose_msdf: level " + std::to_string(i) + " (" +
                              to_string(level.kind) + ", d=" + std::to_string(level.distance) +
                              ") does not reduce the error rate");

        const double duration = params.cycle_scale * unit.duration_cycles *
                                surface_code::cycle_steps(level.distance, c);
        evals.push_back({unit, duration, accept});
        inputs *= unit.inputs / (unit.outputs * accept);
        f.latency_steps += duration;
        p_in = out;
    }

    // Size copies back to front so every level's steady-state throughput
    // covers the consumption of the level above it.
    const size_t n = chain.size();
    std::vector<long> copies(n, 1);
    for (size_t i = n - 1; i-- > 0;) {
        const double demand = copies[i + 1] * evals[i + 1].unit.inputs / evals[i + 1].duration;
        const double supply =
            evals[i].unit.outputs * evals[i].accept / evals[i].duration;
        copies[i] = std::max<long>(1, static_cast<long>(std::ceil(demand / supply - 1e-9)));
    }

    for (size_t i = 0; i < n; ++i) {
        f.levels[i].copies = static_cast<int>(copies[i]);
        f.physical_qubits += copies[i] * evals[i].unit.tiles *
                             surface_code::physical_qubits_per_tile(chain[i].distance);
    }
    f.period_steps = evals.back().duration;
    f.outputs_per_batch = evals.back().unit.outputs;
    f.inputs_per_output = inputs;
    f.output_error = p_in;
    return f;
}

std::vector<MsdfFactory> msdf_catalog(const PhysicalQubitModel& hw, double c,
                                      double target_error, const MsdfParams& params) {
    if (target_error <= 0.0)
        throw ConfigError("msdf_catalog: target error must be positive");

    std::vector<MsdfFactory> kept;
    std::vector<MsdfLevel> chain;
    const std::array<MsdfKind, 2> kinds = {MsdfKind::FifteenToOne, MsdfKind::TwentyToFour};

    const auto extend = [&](const auto& self, int min_distance) -> void {
        if (static_cast<int>(chain.size()) >= params.max_levels)
            return;
        for (MsdfKind kind : kinds) {
            for (int d = min_distance; d <= params.max_distance; d += 2) {
                chain.push_back({kind, d, 1});
                bool viable = true;
                MsdfFactory f;
                try {
                    f = compose_msdf(chain, hw, c, params);
                } catch (const RegimeError&) {
                    viable = false;
                }
                if (viable) {
                    if (f.output_error <= target_error)
                        kept.push_back(f);
                    self(self, d);
                }
                chain.pop_back();
            }
        }
    };
    extend(extend, 3);

    if (kept.empty())
        throw InfeasibleError("msdf_catalog: no factory chain reaches the target error");

    std::sort(kept.begin(), kept.end(), [](const MsdfFactory& a, const MsdfFactory& b) {
        return a.chain_key() < b.chain_key();
    });

    const auto dominates = [](const MsdfFactory& a, const MsdfFactory& b) {
        return a.physical_qubits <= b.physical_qubits &&
               a.period_steps / a.outputs_per_batch <= b.period_steps / b.outputs_per_batch &&
               a.output_error <= b.output_error;
    };
    std::vector<MsdfFactory> pruned;
    for (size_t i = 0; i < kept.size(); ++i) {
        bool dominated = false;
        for (size_t j = 0; j < kept.size() && !dominated; ++j) {
            if (i == j)
                continue;
            if (dominates(kept[j], kept[i]))
                dominated = !dominates(kept[i], kept[j]) || j < i;
        }
        if (!dominated)
            pruned.push_back(kept[i]);
    }
    return pruned;
}

double tstate_period_steps(const MsdfFactory& f, int n_factories) {
    if (n_factories < 1)
        throw ConfigError("tstate_period_steps: factory count must be >= 1");
    return f.period_steps / (static_cast<double>(n_factories) * f.outputs_per_batch);
}

} // namespace dqre
