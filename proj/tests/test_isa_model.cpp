#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dqre/isa_model.hpp"

#include <cmath>

using namespace dqre;

TEST_CASE("fast-block layout") {
    CHECK(isa::layout(100).total_tiles == 230);
    CHECK(isa::layout(2).total_tiles == 9);
    CHECK(isa::layout(12581).total_tiles == 25481);
}

TEST_CASE("layout growth bounds") {
    long prev = 0;
    for (long q : {1L, 2L, 10L, 100L, 1000L, 12581L}) {
        const auto plan = isa::layout(q);
        CHECK(plan.total_tiles > prev);
        CHECK(plan.total_tiles < 2 * q + std::sqrt(8.0 * q) + 2.0);
        prev = plan.total_tiles;
    }
}

TEST_CASE("gadget resource vector") {
    const auto mono = isa::gadget_resources(1);
    CHECK(mono.t_states == 1);
    CHECK(mono.bell_states == 0);
    CHECK(mono.mqpm_per_node == 1);

    CHECK(isa::gadget_resources(3).bell_states == 2);
    CHECK(isa::gadget_resources(10).bell_states == 9);
    for (int n = 1; n <= 8; ++n)
        CHECK(isa::gadget_resources(n + 1).bell_states - isa::gadget_resources(n).bell_states ==
              1);
}

TEST_CASE("instruction timing table") {
    PhysicalQubitModel hw;
    hw.t_op = 50e-9;
    CHECK(isa::instruction_time(InstructionKind::Mqpm, 9, hw, 6.0) == doctest::Approx(2.7e-6));
    CHECK(isa::instruction_time(InstructionKind::Pauli, 9, hw, 6.0) == doctest::Approx(0.0));
    PhysicalQubitModel slow;
    slow.t_op = 1e-6;
    CHECK(isa::instruction_time(InstructionKind::Hadamard, 3, slow, 6.0) ==
          doctest::Approx(54e-6));

    CHECK(isa::instruction(InstructionKind::Hadamard, hw).cycle_cost == 3);
    CHECK(isa::instruction(InstructionKind::Phase, hw).cycle_cost == 2);
    CHECK(isa::instruction(InstructionKind::Mqpm, hw).cycle_cost == 1);
    CHECK(isa::instruction(InstructionKind::Move, hw).cycle_cost == 1);
    // Init and Measure cost one physical op beyond zero cycles.
    CHECK(isa::instruction(InstructionKind::Init, hw).cycle_cost == 0);
    CHECK(isa::instruction(InstructionKind::Init, hw).physical_extra == doctest::Approx(hw.t_op));
    CHECK(isa::instruction(InstructionKind::Measure, hw).physical_extra ==
          doctest::Approx(hw.t_op));
}

TEST_CASE("pauli gates cost nothing at any distance") {
    PhysicalQubitModel hw;
    for (int d = 1; d <= 17; d += 2)
        CHECK(isa::instruction_time(InstructionKind::Pauli, d, hw, 10.0) == doctest::Approx(0.0));
}
