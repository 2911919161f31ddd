#include "dqre/isa_model.hpp"

#include <cmath>

namespace dqre::isa {

LayoutPlan layout(long data_qubits) {
    if (data_qubits < 1)
        throw ConfigError("layout: data qubit count must be >= 1");
    const long ancilla =
        static_cast<long>(std::ceil(std::sqrt(8.0 * static_cast<double>(data_qubits)) - 1e-9));
    return {data_qubits, 2 * data_qubits + ancilla + 1};
}

GadgetResourceVector gadget_resources(int n_nodes) {
    if (n_nodes < 1)
        throw ConfigError("gadget_resources: node count must be >= 1");
    return {1, n_nodes - 1, 1, 1};
}

Instruction instruction(InstructionKind kind, const PhysicalQubitModel& hw) {
    switch (kind) {
    case InstructionKind::Init: return {kind, 0, hw.t_op};
    case InstructionKind::Pauli: return {kind, 0, 0.0};    // tracked in software
    case InstructionKind::Hadamard: return {kind, 3, 0.0};
    case InstructionKind::Phase: return {kind, 2, 0.0};
    case InstructionKind::Measure: return {kind, 0, hw.t_op};
    case InstructionKind::Move: return {kind, 1, 0.0};     // ancilla-mediated, same class as MQPM
    case InstructionKind::Mqpm: return {kind, 1, 0.0};
    case InstructionKind::TStatePrep:
    case InstructionKind::BellStatePrep:
        // Determined by the attached factory; accounted for by the estimator.
        return {kind, 0, 0.0};
    }
    throw ConfigError("unknown instruction kind");
}

double instruction_time(InstructionKind kind, int d, const PhysicalQubitModel& hw, double c) {
    const Instruction inst = instruction(kind, hw);
    return inst.cycle_cost * surface_code::cycle_time(d, hw, c) + inst.physical_extra;
}

} // namespace dqre::isa
