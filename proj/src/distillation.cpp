#include "dqre/distillation.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <map>
#include <sstream>

namespace dqre {

std::string to_string(UnitKind kind) {
    switch (kind) {
    case UnitKind::FiveQubitPerfect: return "5Q";
    case UnitKind::RepetitionX: return "2Q(X)";
    case UnitKind::RepetitionY: return "2Q(Y)";
    case UnitKind::RepetitionZ: return "2Q(Z)";
    }
    throw ConfigError("unknown unit kind");
}

UnitKind unit_kind_from_string(const std::string& name) {
    if (name == "5Q") return UnitKind::FiveQubitPerfect;
    if (name == "2Q(X)") return UnitKind::RepetitionX;
    if (name == "2Q(Y)") return UnitKind::RepetitionY;
    if (name == "2Q(Z)") return UnitKind::RepetitionZ;
    throw ConfigError("unknown distillation unit: " + name);
}

namespace {

// Error models as published, including the Clifford fault coefficients.
UnitErrorModel published_model(UnitKind kind) {
    UnitErrorModel m;
    switch (kind) {
    case UnitKind::FiveQubitPerfect:
        m.rejection = {{5, 1, 0, 0, 0}, {5, 0, 1, 0, 0}, {5, 0, 0, 1, 0}, {6.5, 0, 0, 0, 1}};
        m.out_x = {{5, 1, 0, 2, 0}, {5, 1, 2, 0, 0}, {3.1, 0, 0, 0, 1}};
        m.out_y = {{5, 0, 1, 2, 0}, {5, 2, 1, 0, 0}, {1.7, 0, 0, 0, 1}};
        m.out_z = {{5, 0, 2, 1, 0}, {5, 2, 0, 1, 0}, {1.7, 0, 0, 0, 1}};
        break;
    case UnitKind::RepetitionX:
        m.rejection = {{2, 0, 0, 1, 0}, {2, 0, 1, 0, 0}, {2, 1, 0, 1, 0}, {2, 1, 1, 0, 0},
                       {2.4, 0, 0, 0, 1}};
        m.out_x = {{2, 1, 0, 0, 0}, {0.8, 0, 0, 0, 1}};
        m.out_y = {{2, 0, 1, 1, 0}, {0.8, 0, 0, 0, 1}};
        m.out_z = {{1, 0, 2, 0, 0}, {1, 0, 0, 2, 0}, {0.8, 0, 0, 0, 1}};
        break;
    case UnitKind::RepetitionY:
        m.rejection = {{2, 0, 0, 1, 0}, {2, 1, 0, 0, 0}, {2, 1, 1, 0, 0}, {2, 0, 1, 1, 0},
                       {2.4, 0, 0, 0, 1}};
        m.out_x = {{2, 1, 0, 1, 0}, {0.8, 0, 0, 0, 1}};
        m.out_y = {{2, 0, 1, 0, 0}, {0.8, 0, 0, 0, 1}};
        m.out_z = {{1, 2, 0, 0, 0}, {1, 0, 0, 2, 0}, {0.8, 0, 0, 0, 1}};
        break;
    case UnitKind::RepetitionZ:
        m.rejection = {{2, 1, 0, 0, 0}, {2, 0, 1, 0, 0}, {2, 1, 0, 1, 0}, {2, 0, 1, 1, 0},
                       {2.4, 0, 0, 0, 1}};
        m.out_x = {{1, 0, 2, 0, 0}, {1, 2, 0, 0, 0}, {0.8, 0, 0, 0, 1}};
        m.out_y = {{2, 1, 1, 0, 0}, {0.8, 0, 0, 0, 1}};
        m.out_z = {{2, 0, 0, 1, 0}, {0.8, 0, 0, 0, 1}};
        break;
    }
    return m;
}

DistillationUnit make_unit(UnitKind kind) {
    DistillationUnit u;
    u.kind = kind;
    if (kind == UnitKind::FiveQubitPerfect) {
        u.inputs = 5;
        u.outputs = 1;
        u.tiles = 15;
        u.duration_cycles = 3;
    } else {
        u.inputs = 2;
        u.outputs = 1;
        u.tiles = 2;
        u.duration_cycles = 2;
    }
    u.model = published_model(kind);
    u.validate();
    return u;
}

} // namespace

const DistillationUnit& builtin_unit(UnitKind kind) {
    static const DistillationUnit five = make_unit(UnitKind::FiveQubitPerfect);
    static const DistillationUnit rx = make_unit(UnitKind::RepetitionX);
    static const DistillationUnit ry = make_unit(UnitKind::RepetitionY);
    static const DistillationUnit rz = make_unit(UnitKind::RepetitionZ);
    switch (kind) {
    case UnitKind::FiveQubitPerfect: return five;
    case UnitKind::RepetitionX: return rx;
    case UnitKind::RepetitionY: return ry;
    case UnitKind::RepetitionZ: return rz;
    }
    throw ConfigError("unknown unit kind");
}

UnitOutcome evaluate_unit(const DistillationUnit& unit, const PauliErrorRates& in, double p,
                          bool renormalize) {
    in.validate();
    if (p < 0.0 || p >= 0.1)
        throw ConfigError("evaluate_unit: Clifford error rate must be in [0, 0.1)");

    const double rejection = unit.model.rejection.eval(in, p);
    PauliErrorRates out{unit.model.out_x.eval(in, p), unit.model.out_y.eval(in, p),
                        unit.model.out_z.eval(in, p)};
    if (rejection >= 1.0)
        throw RegimeError("evaluate_unit: rejection probability reaches 1 for " +
                          to_string(unit.kind));
    if (out.x < 0.0 || out.y < 0.0 || out.z < 0.0)
        throw RegimeError("evaluate_unit: negative output error component");

    const double accept = 1.0 - rejection;
    if (renormalize) {
        out.x /= accept;
        out.y /= accept;
        out.z /= accept;
    }
    return {accept, out};
}

// ---------------------------------------------------------------------------
// Enumeration oracle.
//
// A batch of n Bell pairs with a Pauli error E on one side is accepted by the
// bilateral stabilizer check iff E commutes with every stabilizer; the
// residual logical error class is read off from the commutation of E with the
// logical operators of the code.

namespace {

struct PauliMask {
    uint32_t x = 0;
    uint32_t z = 0;
};

inline bool anticommutes(const PauliMask& a, const PauliMask& b) {
    return (std::popcount(a.x & b.z) + std::popcount(a.z & b.x)) % 2 == 1;
}

struct CodeSpec {
    int n;
    std::vector<PauliMask> stabilizers;
    PauliMask logical_x;
    PauliMask logical_z;
};

// Repetition checks keep pair 0 and sacrifice pair 1; the five-qubit code
// uses the standard XZZXI generators with transversal logicals.
CodeSpec code_spec(UnitKind kind) {
    switch (kind) {
    case UnitKind::RepetitionZ:
        return {2, {{0b00, 0b11}}, {0b11, 0b00}, {0b00, 0b01}};
    case UnitKind::RepetitionX:
        return {2, {{0b11, 0b00}}, {0b01, 0b00}, {0b00, 0b11}};
    case UnitKind::RepetitionY:
        return {2, {{0b11, 0b11}}, {0b10, 0b01}, {0b11, 0b00}};
    case UnitKind::FiveQubitPerfect: {
        CodeSpec spec;
        spec.n = 5;
        // XZZXI and its cyclic shifts.
        const std::array<std::array<char, 5>, 4> rows = {{{'X', 'Z', 'Z', 'X', 'I'},
                                                          {'I', 'X', 'Z', 'Z', 'X'},
                                                          {'X', 'I', 'X', 'Z', 'Z'},
                                                          {'Z', 'X', 'I', 'X', 'Z'}}};
        for (const auto& row : rows) {
            PauliMask m;
            for (int q = 0; q < 5; ++q) {
                if (row[q] == 'X' || row[q] == 'Y') m.x |= 1u << q;
                if (row[q] == 'Z' || row[q] == 'Y') m.z |= 1u << q;
            }
            spec.stabilizers.push_back(m);
        }
        spec.logical_x = {0b11111, 0};
        spec.logical_z = {0, 0b11111};
        return spec;
    }
    }
    throw ConfigError("unknown unit kind");
}

enum class Outcome { Rejected, Clean, ErrX, ErrY, ErrZ };

Outcome classify(const CodeSpec& code, const PauliMask& err) {
    for (const auto& s : code.stabilizers) {
        if (anticommutes(err, s))
            return Outcome::Rejected;
    }
    const bool flips_z = anticommutes(err, code.logical_z);
    const bool flips_x = anticommutes(err, code.logical_x);
    if (flips_z && flips_x) return Outcome::ErrY;
    if (flips_z) return Outcome::ErrX;
    if (flips_x) return Outcome::ErrZ;
    return Outcome::Clean;
}

// Single-fault Clifford error terms for the repetition protocol: one
// bilateral entangling gate, then a bilateral measurement of the
// sacrificial pair. Faults are injected with equal X/Y/Z weight.
void add_repetition_fault_terms(UnitKind kind, UnitErrorModel& m) {
    // A post-gate fault on the kept qubit of either side lands on the
    // output directly.
    m.out_x.add_term(2.0 / 3.0, 0, 0, 0, 1);
    m.out_y.add_term(2.0 / 3.0, 0, 0, 0, 1);
    m.out_z.add_term(2.0 / 3.0, 0, 0, 0, 1);
    // A fault on a sacrificial qubit flips the check outcome for two of the
    // three Pauli kinds; a flipped readout rejects outright.
    m.rejection.add_term(4.0 / 3.0, 0, 0, 0, 1);
    m.rejection.add_term(2.0, 0, 0, 0, 1);
    (void)kind; // the location count is basis-independent
}

} // namespace

UnitErrorModel enumerate_unit_model(UnitKind kind, int order) {
    if (order < 1 || order > 3)
        throw ConfigError("enumerate_unit_model: order must be 1, 2 or 3");
    const CodeSpec code = code_spec(kind);

    UnitErrorModel model;
    // Enumerate all error configurations with at most `order` non-identity
    // pairs; each configuration contributes one monomial.
    const std::array<char, 3> paulis = {'X', 'Y', 'Z'};
    std::vector<int> support;

    const auto visit = [&](const std::vector<int>& qubits, const std::vector<char>& kinds) {
        PauliMask err;
        int ex = 0, ey = 0, ez = 0;
        for (size_t i = 0; i < qubits.size(); ++i) {
            const uint32_t bit = 1u << qubits[i];
            switch (kinds[i]) {
            case 'X': err.x |= bit; ++ex; break;
            case 'Y': err.x |= bit; err.z |= bit; ++ey; break;
            case 'Z': err.z |= bit; ++ez; break;
            }
        }
        switch (classify(code, err)) {
        case Outcome::Rejected: model.rejection.add_term(1.0, ex, ey, ez); break;
        case Outcome::ErrX: model.out_x.add_term(1.0, ex, ey, ez); break;
        case Outcome::ErrY: model.out_y.add_term(1.0, ex, ey, ez); break;
        case Outcome::ErrZ: model.out_z.add_term(1.0, ex, ey, ez); break;
        case Outcome::Clean: break;
        }
    };

    // Choose error weight, support and Pauli kinds.
    for (int w = 1; w <= std::min(order, code.n); ++w) {
        std::vector<int> comb(w);
        for (int i = 0; i < w; ++i) comb[i] = i;
        while (true) {
            std::vector<char> kinds(w, 'X');
            // Odometer over Pauli kinds on the chosen support.
            std::vector<int> idx(w, 0);
            while (true) {
                for (int i = 0; i < w; ++i) kinds[i] = paulis[idx[i]];
                visit(comb, kinds);
                int pos = w - 1;
                while (pos >= 0 && idx[pos] == 2) idx[pos--] = 0;
                if (pos < 0) break;
                ++idx[pos];
            }
            // Next combination.
            int pos = w - 1;
            while (pos >= 0 && comb[pos] == code.n - w + pos) --pos;
            if (pos < 0) break;
            ++comb[pos];
            for (int i = pos + 1; i < w; ++i) comb[i] = comb[i - 1] + 1;
        }
    }

    if (kind != UnitKind::FiveQubitPerfect)
        add_repetition_fault_terms(kind, model);
    return model;
}

ExactOutcome exact_unit_outcome(UnitKind kind, const PauliErrorRates& in) {
    in.validate();
    const CodeSpec code = code_spec(kind);
    const double p_id = 1.0 - in.total();

    ExactOutcome acc{0, 0, 0, 0, 0};
    const long configs = 1L << (2 * code.n); // 4^n error assignments
    for (long cfg = 0; cfg < configs; ++cfg) {
        PauliMask err;
        double prob = 1.0;
        for (int q = 0; q < code.n; ++q) {
            const int e = static_cast<int>((cfg >> (2 * q)) & 3);
            const uint32_t bit = 1u << q;
            switch (e) {
            case 0: prob *= p_id; break;
            case 1: err.x |= bit; prob *= in.x; break;
            case 2: err.x |= bit; err.z |= bit; prob *= in.y; break;
            case 3: err.z |= bit; prob *= in.z; break;
            }
        }
        if (prob == 0.0)
            continue;
        switch (classify(code, err)) {
        case Outcome::Rejected: acc.rejected += prob; break;
        case Outcome::Clean: acc.clean += prob; break;
        case Outcome::ErrX: acc.err_x += prob; break;
        case Outcome::ErrY: acc.err_y += prob; break;
        case Outcome::ErrZ: acc.err_z += prob; break;
        }
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Multi-level composition.

std::string MultiLevelFactory::chain_key() const {
    if (levels.empty())
        return "passthrough";
    std::ostringstream os;
    for (size_t i = 0; i < levels.size(); ++i) {
        if (i)
            os << "|";
        os << to_string(levels[i].kind) << ":" << levels[i].distance;
    }
    return os.str();
}

namespace {

// Running aggregate while threading error rates through a chain; shared by
// compose_multilevel and the chain search so the search can extend chains
// incrementally instead of recomposing from scratch.
struct ComposeState {
    double expected_steps = 0.0;
    double inputs = 1.0;
    double structural_steps = 0.0;
    long max_footprint = 0;
    long first_footprint = 0;
    size_t depth = 0;
    PauliErrorRates rates;
};

ComposeState apply_level(const ComposeState& prev, const FactoryLevel& level,
                         const PhysicalQubitModel& hw, double c, const ComposeOptions& opts) {
    if (level.distance < 1 || level.distance % 2 == 0)
        throw ConfigError("factory level distance must be odd and >= 1");
    const DistillationUnit& unit = builtin_unit(level.kind);
    const double p_level = surface_code::clifford_error_at(level.distance, hw.p);

    const UnitOutcome res = evaluate_unit(unit, prev.rates, p_level, opts.renormalize);
    if (res.accept_prob <= 0.0)
        throw RegimeError("compose_multilevel: level " + std::to_string(prev.depth) +
                          " accepts with probability <= 0");
    if (prev.rates.total() > 0.0 && res.out.total() >= prev.rates.total())
        throw RegimeError("compose_multilevel: level " + std::to_string(prev.depth) + " (" +
                          to_string(level.kind) + ", d=" + std::to_string(level.distance) +
                          ") does not reduce the error rate");

    const double duration = unit.duration_cycles * surface_code::cycle_steps(level.distance, c);
    const long footprint = unit.tiles * surface_code::physical_qubits_per_tile(level.distance);

    ComposeState next = prev;
    next.expected_steps = (duration + unit.inputs * prev.expected_steps) / res.accept_prob;
    next.inputs = prev.inputs * unit.inputs / res.accept_prob;
    next.structural_steps = prev.structural_steps + duration;
    next.max_footprint = std::max(prev.max_footprint, footprint);
    if (prev.depth == 0)
        next.first_footprint = footprint;
    next.depth = prev.depth + 1;
    next.rates = res.out;
    return next;
}

MultiLevelFactory materialize(const std::vector<FactoryLevel>& chain, const ComposeState& s) {
    MultiLevelFactory f;
    f.levels = chain;
    f.physical_qubits = s.max_footprint + (chain.size() > 1 ? s.first_footprint : 0);
    f.latency_steps = s.expected_steps;
    f.structural_steps = s.structural_steps;
    f.inputs_per_output = s.inputs;
    f.outputs_per_batch = 1;
    f.output_error = s.rates;
    f.output_error_total = s.rates.total();
    return f;
}

} // namespace

MultiLevelFactory compose_multilevel(const std::vector<FactoryLevel>& chain,
                                     const PauliErrorRates& raw, const PhysicalQubitModel& hw,
                                     double c, const ComposeOptions& opts) {
    raw.validate();
    hw.validate();

    ComposeState state;
    state.rates = raw;
    for (const FactoryLevel& level : chain)
        state = apply_level(state, level, hw, c, opts);
    return materialize(chain, state);
}

// ---------------------------------------------------------------------------
// Chain search.

namespace {

constexpr std::array<UnitKind, 4> kAllKinds = {UnitKind::RepetitionX, UnitKind::RepetitionY,
                                               UnitKind::RepetitionZ,
                                               UnitKind::FiveQubitPerfect};

bool dominates(const MultiLevelFactory& a, const MultiLevelFactory& b) {
    // a dominates b when it is at least as good in footprint, latency and
    // input demand with equal-or-better output error.
    return a.physical_qubits <= b.physical_qubits && a.latency_steps <= b.latency_steps &&
           a.inputs_per_output <= b.inputs_per_output &&
           a.output_error_total <= b.output_error_total;
}

} // namespace

FactoryCatalog search_factories(const PauliErrorRates& raw, const PhysicalQubitModel& hw,
                                double c, double target_error, const SearchOptions& opts) {
    raw.validate();
    hw.validate();
    if (target_error <= 0.0)
        throw ConfigError("search_factories: target error must be positive");
    if (opts.max_levels < 1)
        throw ConfigError("search_factories: max_levels must be >= 1");

    // Chains whose output error is this far below the target cannot matter:
    // extra fidelity only helps feasibility at larger node counts, and the
    // useful range is orders of magnitude short of this margin.
    const double floor_error = target_error * 1e-9;

    // Candidates bucketed by output-error decade; within a bucket, strictly
    // dominated entries are dropped as they arrive to keep memory bounded.
    // Ties survive until the exact Pareto pass below, which also prunes
    // across buckets, so the final set is order-independent.
    std::map<int, std::vector<MultiLevelFactory>> buckets;
    const auto offer = [&](MultiLevelFactory f) {
        const int bucket = static_cast<int>(
            std::floor(std::log10(std::max(f.output_error_total, 1e-300))));
        auto& vec = buckets[bucket];
        for (const auto& e : vec) {
            if (dominates(e, f) && !dominates(f, e))
                return;
        }
        std::erase_if(vec, [&](const MultiLevelFactory& e) {
            return dominates(f, e) && !dominates(e, f);
        });
        vec.push_back(std::move(f));
    };

    if (raw.total() <= target_error)
        offer(compose_multilevel({}, raw, hw, c, opts.compose));

    std::vector<FactoryLevel> chain;
    ComposeState root;
    root.rates = raw;
    const auto extend = [&](const auto& self, const ComposeState& state,
                            int min_distance) -> void {
        if (static_cast<int>(chain.size()) >= opts.max_levels)
            return;
        for (UnitKind kind : kAllKinds) {
            for (int d = min_distance; d <= opts.max_distance; d += 2) {
                chain.push_back({kind, d, 1});
                bool viable = true;
                ComposeState next;
                try {
                    next = apply_level(state, {kind, d, 1}, hw, c, opts.compose);
                } catch (const RegimeError&) {
                    viable = false;
                }
                if (viable) {
                    const double err = next.rates.total();
                    if (err <= target_error)
                        offer(materialize(chain, next));
                    if (err > floor_error)
                        self(self, next, d);
                }
                chain.pop_back();
            }
        }
    };
    extend(extend, root, 1);

    std::vector<MultiLevelFactory> kept;
    for (auto& [bucket, vec] : buckets)
        for (auto& f : vec)
            kept.push_back(std::move(f));

    if (kept.empty())
        throw InfeasibleError("search_factories: no chain within " +
                              std::to_string(opts.max_levels) +
                              " levels reaches the target error");

    // Deterministic order before pruning so ties resolve by chain identity.
    std::sort(kept.begin(), kept.end(), [](const MultiLevelFactory& a, const MultiLevelFactory& b) {
        return a.chain_key() < b.chain_key();
    });

    FactoryCatalog catalog;
    for (size_t i = 0; i < kept.size(); ++i) {
        bool dominated = false;
        for (size_t j = 0; j < kept.size() && !dominated; ++j) {
            if (i == j)
                continue;
            if (dominates(kept[j], kept[i])) {
                // Break mutual-domination ties toward the earlier key.
                dominated = !dominates(kept[i], kept[j]) || j < i;
            }
        }
        if (!dominated)
            catalog.entries.push_back(kept[i]);
    }
    return catalog;
}

} // namespace dqre
