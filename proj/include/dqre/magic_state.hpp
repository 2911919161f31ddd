#pragma once

#include "dqre/surface_code.hpp"

#include <string>
#include <vector>

namespace dqre {

enum class MsdfKind {
    FifteenToOne,
    TwentyToFour,
};

std::string to_string(MsdfKind kind);
MsdfKind msdf_kind_from_string(const std::string& name);

// Scalar error model of a magic-state distillation unit:
//   output error  = out_coeff * p_in^out_power + floor_coeff * p_clifford
//   rejection     = reject_coeff * p_in + floor_reject_coeff * p_clifford
struct MsdfUnit {
    MsdfKind kind;
    int inputs;
    int outputs;
    int tiles;
    int duration_cycles;
    double out_coeff;
    double out_power;
    double reject_coeff;
    double floor_coeff;
    double floor_reject_coeff;
};

// Calibration knobs for the magic-state stack.
struct MsdfParams {
    double injection_factor = 10.0; // raw T-state error = factor * p
    double tile_scale = 10.75;       // scales unit tile counts (routing/ancilla overhead)
    double cycle_scale = 1.0;       // scales unit durations (scheduling overhead)
    int fifteen_tiles = 11;
    int fifteen_cycles = 11;
    int twenty_tiles = 14;
    int twenty_cycles = 17;
    double floor_coeff = 1.0;
    int max_levels = 3;
    int max_distance = 17;
};

MsdfUnit make_msdf_unit(MsdfKind kind, const MsdfParams& params);

struct MsdfLevel {
    MsdfKind kind;
    int distance;
    int copies = 1;
};

// A chained magic-state factory. Unlike the Bell-pair factories, levels run
// as a pipeline with enough copies at each level to feed the next, so the
// footprint sums over levels and the output period is set by the top level.
struct MsdfFactory {
    std::vector<MsdfLevel> levels;
    long physical_qubits = 0;       // Q_M
    double period_steps = 0.0;      // T_M: steps per output batch at steady state
    double latency_steps = 0.0;     // end-to-end pipeline fill time
    double inputs_per_output = 1.0; // I_M, rejection-adjusted raw demand
    int outputs_per_batch = 1;      // O_M
    double output_error = 0.0;      // eps_M per state

    std::string chain_key() const;
};

MsdfFactory compose_msdf(const std::vector<MsdfLevel>& chain, const PhysicalQubitModel& hw,
                         double c, const MsdfParams& params = {});

// Pareto set over (Q_M, T_M per output) of chained factories with output
// error at or below the target.
std::vector<MsdfFactory> msdf_catalog(const PhysicalQubitModel& hw, double c,
                                      double target_error, const MsdfParams& params = {});

// Physical time steps per distilled T state with n parallel factories.
double tstate_period_steps(const MsdfFactory& f, int n_factories);

} // namespace dqre
