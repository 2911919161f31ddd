#pragma once

#include "dqre/surface_code.hpp"

namespace dqre {

enum class InstructionKind {
    Init,
    Pauli,
    Hadamard,
    Phase,
    Measure,
    Move,
    Mqpm,
    TStatePrep,
    BellStatePrep,
};

struct Instruction {
    InstructionKind kind;
    int cycle_cost;       // multiples of tau(d)
    double physical_extra; // seconds beyond the cycle cost
};

// Fast-block layout: Q_D data tiles plus Q_D + ceil(sqrt(8 Q_D)) ancilla
// tiles and one magic-state interface tile.
struct LayoutPlan {
    long data_qubits;
    long total_tiles; // Q_L = 2 Q_D + ceil(sqrt(8 Q_D)) + 1
};

// Per-gadget demand on an N-node system: one T state, one Bell state per
// link crossed, one local multi-qubit Pauli measurement per node.
struct GadgetResourceVector {
    int t_states;
    int bell_states;
    int mqpm_per_node;
    int mqpm_cycles;
};

namespace isa {

LayoutPlan layout(long data_qubits);
GadgetResourceVector gadget_resources(int n_nodes);

// Instruction timing table; t_init and t_meas both equal t_op.
Instruction instruction(InstructionKind kind, const PhysicalQubitModel& hw);
double instruction_time(InstructionKind kind, int d, const PhysicalQubitModel& hw, double c);

} // namespace isa
} // namespace dqre
