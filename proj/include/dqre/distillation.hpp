#pragma once

#include "dqre/pauli.hpp"
#include "dqre/polynomial.hpp"
#include "dqre/surface_code.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dqre {

enum class UnitKind {
    FiveQubitPerfect,
    RepetitionX,
    RepetitionY,
    RepetitionZ,
};

std::string to_string(UnitKind kind);
UnitKind unit_kind_from_string(const std::string& name);

// Error model of one distillation unit: rejection probability and the
// three output error components, each a polynomial in (Px, Py, Pz, p).
struct UnitErrorModel {
    Polynomial rejection;
    Polynomial out_x;
    Polynomial out_y;
    Polynomial out_z;
};

struct DistillationUnit {
    UnitKind kind;
    int inputs;          // Bell pairs consumed per run
    int outputs;         // Bell pairs produced per accepted run
    int tiles;           // logical tiles occupied (per side)
    int duration_cycles; // multiples of tau(d)
    UnitErrorModel model;

    void validate() const {
        if (inputs <= outputs || outputs < 1)
            throw ConfigError("distillation unit must have inputs > outputs >= 1");
        if (tiles < outputs || duration_cycles < 1)
            throw ConfigError("distillation unit tiles/duration out of range");
    }
};

// The published unit parameters: repetition units use 2 tiles for 2 cycles,
// the five-qubit unit uses 15 tiles for 3 cycles.
const DistillationUnit& builtin_unit(UnitKind kind);

struct UnitOutcome {
    double accept_prob;
    PauliErrorRates out;
};

// Evaluates a unit's error model at the given input rates and Clifford
// error rate. Output components are renormalized by the acceptance
// probability unless renormalize is false.
UnitOutcome evaluate_unit(const DistillationUnit& unit, const PauliErrorRates& in,
                          double p, bool renormalize = true);

// Independent oracle: rebuilds a unit's error model by enumerating Pauli
// errors on the input Bell pairs up to the given order and propagating
// them through the bilateral stabilizer-check protocol. Clifford fault
// terms (single-fault model) are produced for the repetition units only.
UnitErrorModel enumerate_unit_model(UnitKind kind, int order);

// Exhaustive outcome probabilities for a unit at the given input rates,
// obtained by enumerating every input error configuration with its exact
// probability (identity factors included). Used by conservation checks.
struct ExactOutcome {
    double rejected;
    double clean;
    double err_x;
    double err_y;
    double err_z;

    double total() const { return rejected + clean + err_x + err_y + err_z; }
};
ExactOutcome exact_unit_outcome(UnitKind kind, const PauliErrorRates& in);

struct FactoryLevel {
    UnitKind kind;
    int distance; // odd; 1 = physically executed, no surface code
    int copies = 1;
};

// A chain of distillation units. Levels run on one reused hardware region
// sized for the largest level, with the first (raw-facing) level kept
// resident; one output is produced per end-to-end pass.
struct MultiLevelFactory {
    std::vector<FactoryLevel> levels;
    long physical_qubits = 0;      // Q_E
    double latency_steps = 0.0;    // T_E: expected steps per output, rejection-adjusted
    double structural_steps = 0.0; // sum of level durations, no rejection adjustment
    double inputs_per_output = 1.0; // I_E, rejection-adjusted raw demand
    int outputs_per_batch = 1;      // O_E
    PauliErrorRates output_error;   // eps_E components
    double output_error_total = 0.0;

    bool passthrough() const { return levels.empty(); }
    std::string chain_key() const; // canonical identity for stable ordering
};

struct ComposeOptions {
    bool renormalize = true;
};

// Threads error rates level by level, with each level's Clifford error set
// by its code distance, and aggregates footprint, latency and input demand.
MultiLevelFactory compose_multilevel(const std::vector<FactoryLevel>& chain,
                                     const PauliErrorRates& raw, const PhysicalQubitModel& hw,
                                     double c, const ComposeOptions& opts = {});

struct FactoryCatalog {
    std::vector<MultiLevelFactory> entries;
};

struct SearchOptions {
    int max_levels = 5;
    int max_distance = 17;
    ComposeOptions compose;
};

// Enumerates unit chains with non-decreasing distances, keeps those whose
// output error meets the target and prunes to the Pareto set over
// (qubits, latency, inputs) with the output error as a quality dimension.
FactoryCatalog search_factories(const PauliErrorRates& raw, const PhysicalQubitModel& hw,
                                double c, double target_error,
                                const SearchOptions& opts = {});

} // namespace dqre
