#include "dqre/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>
#include <sstream>

namespace dqre {

std::string to_string(EtaMode mode) {
    return mode == EtaMode::Strict ? "strict" : "refined";
}

ErrorBudget split_budget(double eps_total, const std::array<double, 3>& weights) {
    if (eps_total <= 0.0 || eps_total >= 1.0)
        throw ConfigError("split_budget: total budget must be in (0,1)");
    double sum = 0.0;
    for (double w : weights) {
        if (w < 0.0)
            throw ConfigError("split_budget: weights must be non-negative");
        sum += w;
    }
    if (sum <= 0.0)
        throw ConfigError("split_budget: weights must not all be zero");
    return {eps_total, eps_total * weights[0] / sum, eps_total * weights[1] / sum,
            eps_total * weights[2] / sum};
}

double gadget_period(int d, const HardwareModel& hw, const MsdfFactory& msdf, int n_msdf,
                     const MultiLevelFactory* edf, int n_edf, int n_nodes, EtaMode mode,
                     EdfThroughput throughput, double edf_period_scale, bool distance_demand) {
    if (n_msdf < 1)
        throw ConfigError("gadget_period: MSDF count must be >= 1");
    const double t_op = hw.qubit.t_op;
    double period = surface_code::cycle_time(d, hw.qubit, hw.cycle_factor);
    period = std::max(period, tstate_period_steps(msdf, n_msdf) * t_op);
    if (edf != nullptr && n_nodes > 1) {
        if (n_edf < 1)
            throw ConfigError("gadget_period: EDF count must be >= 1 on a network link");
        // A remote gadget merges patches through the Bell interface and then
        // measures out: two logical timesteps instead of one.
        period = std::max(period, 2.0 * surface_code::cycle_time(d, hw.qubit, hw.cycle_factor));
        const double demand = distance_demand ? static_cast<double>(d) : 1.0;
        const double edf_steps = demand * edf_period_scale *
                                 (throughput == EdfThroughput::Structural
                                      ? edf->structural_steps
                                      : edf->latency_steps);
        period = std::max(period, edf_steps * t_op /
                                      (static_cast<double>(n_edf) * edf->outputs_per_batch));
        // Raw generation: with per-distance demand the link generator must
        // produce the raw inputs behind d distilled pairs per gadget;
        // otherwise the printed per-factory form is used.
        const double supply = mode == EtaMode::Strict
                                  ? (distance_demand ? demand * edf->inputs_per_output /
                                                           (edf->outputs_per_batch * hw.eta)
                                                     : n_edf * edf->inputs_per_output / hw.eta)
                                  : demand * (n_nodes - 1) * edf->inputs_per_output /
                                        (edf->outputs_per_batch * hw.eta);
        period = std::max(period, supply);
    }
    return period;
}

int required_distance(double eps_logical, long tiles, double t_count, const HardwareModel& hw,
                      const std::function<double(int)>& gadget_period_of_d, int iteration_cap) {
    if (eps_logical <= 0.0 || tiles < 1 || t_count < 1.0)
        throw ConfigError("required_distance: invalid inputs");
    const double base_target = eps_logical / (static_cast<double>(tiles) * t_count);
    int d = surface_code::min_distance(hw.qubit.p, base_target);
    int prev = 0;
    for (int iter = 0; iter < iteration_cap; ++iter) {
        const double tau = surface_code::cycle_time(d, hw.qubit, hw.cycle_factor);
        const double ratio = std::max(1.0, gadget_period_of_d(d) / tau);
        const int next = surface_code::min_distance(hw.qubit.p, base_target / ratio);
        if (next == d)
            return d;
        // A period pinned by a factory term makes the map non-monotone in d;
        // a two-cycle settles on the conservative (larger) distance.
        if (next == prev)
            return std::max(d, next);
        prev = d;
        d = next;
    }
    throw ConvergenceError("required_distance: no fixed point within iteration cap");
}

int node_count(long tiles, int d, long msdf_qubits_total, long edf_qubits_per_link_side,
               long node_size) {
    // Each link endpoint sets aside a networking region sized for its EDFs
    // but never below a fixed share of the node, so the interface keeps
    // spare distillation capacity regardless of the configured factory
    // count. On top of that, two logical tiles per endpoint stay free: one
    // holding the distilled Bell half, one as the ancilla region for remote
    // lattice surgery (two endpoints per node on a line).
    const bool linked = edf_qubits_per_link_side > 0;
    const long region = linked ? std::max(edf_qubits_per_link_side,
                                          static_cast<long>(kNetworkReserveShare * node_size))
                               : 0;
    const long local = node_size - 2 * region -
                       (linked ? 4 * surface_code::physical_qubits_per_tile(d) : 0);
    if (local <= 0)
        throw InfeasibleError("node_count: entanglement distillation overflows the node");
    const double demand = static_cast<double>(surface_code::physical_qubits_per_tile(d)) * tiles +
                          static_cast<double>(msdf_qubits_total);
    return static_cast<int>(std::ceil(demand / static_cast<double>(local) - 1e-12));
}

namespace {

struct ConfigInput {
    const MultiLevelFactory* edf; // nullptr when no network link is used
    const MsdfFactory* msdf;
    int n_edf;
    int n_msdf;
};

EstimateResult evaluate_config(const ApplicationProfile& app, const HardwareModel& hw,
                               const ConfigInput& in, const ErrorBudget& budget,
                               const EstimateOptions& opts) {
    const LayoutPlan plan = isa::layout(app.data_qubits);

    if (app.t_count * in.msdf->output_error > budget.magic)
        throw InfeasibleError("magic state error exceeds its budget share");

    const long msdf_total = in.msdf->physical_qubits * static_cast<long>(in.n_msdf);
    const long edf_side =
        in.edf != nullptr ? in.edf->physical_qubits * static_cast<long>(in.n_edf) : 0;

    int nodes = opts.monolithic || in.edf == nullptr ? 1 : 2;
    int distance = 0;
    std::set<int> visited;
    for (int iter = 0;; ++iter) {
        if (iter >= opts.node_iteration_cap)
            throw ConvergenceError("estimate: node count iteration did not converge");
        if (nodes > 1) {
            if (in.edf == nullptr)
                throw InfeasibleError("application does not fit in one node and no "
                                      "entanglement distillation is configured");
            if (app.t_count * (nodes - 1) * in.edf->output_error_total > budget.bell)
                throw InfeasibleError("Bell state error exceeds its budget share at " +
                                      std::to_string(nodes) + " nodes");
        }
        const MultiLevelFactory* active_edf = nodes > 1 ? in.edf : nullptr;
        const auto period_of = [&](int d) {
            return gadget_period(d, hw, *in.msdf, in.n_msdf, active_edf, in.n_edf, nodes,
                                 opts.eta_mode, opts.edf_throughput, opts.edf_period_scale,
                                 opts.edf_distance_demand);
        };
        distance = required_distance(budget.logical, plan.total_tiles, app.t_count, hw,
                                     period_of, opts.distance_iteration_cap);
        if (opts.monolithic)
            break;
        const int next =
            node_count(plan.total_tiles, distance, msdf_total, edf_side, hw.node_size);
        if (next == nodes)
            break;
        if (visited.contains(next))
            throw ConvergenceError("estimate: node count oscillates without converging");
        visited.insert(nodes);
        nodes = next;
    }

    const MultiLevelFactory* active_edf = nodes > 1 ? in.edf : nullptr;
    const double t_gadget =
        gadget_period(distance, hw, *in.msdf, in.n_msdf, active_edf, in.n_edf, nodes,
                      opts.eta_mode, opts.edf_throughput, opts.edf_period_scale,
                      opts.edf_distance_demand);

    EstimateResult r;
    r.application = app.name;
    r.nodes = nodes;
    r.distance = distance;
    r.t_gadget_s = t_gadget;
    r.runtime_s = t_gadget * app.t_count;
    r.eta_mode = opts.eta_mode;
    r.monolithic = opts.monolithic;
    r.msdf_chain = in.msdf->chain_key();
    r.n_msdf = in.n_msdf;
    r.msdf_qubits_per_factory = in.msdf->physical_qubits;
    if (active_edf != nullptr) {
        r.edf_chain = active_edf->chain_key();
        r.n_edf = in.n_edf;
        r.edf_qubits_per_factory = active_edf->physical_qubits;
    }

    const long data_qubits = surface_code::physical_qubits_per_tile(distance) * plan.total_tiles;
    const long region =
        std::max(edf_side, static_cast<long>(kNetworkReserveShare * hw.node_size));
    const long edf_qubits = active_edf != nullptr ? nodes * 2 * region : 0;
    const long used = data_qubits + msdf_total + edf_qubits;
    r.active_physical_qubits =
        data_qubits + msdf_total + (active_edf != nullptr ? nodes * 2 * edf_side : 0);
    if (opts.monolithic) {
        r.total_physical_qubits = used;
    } else {
        r.total_physical_qubits = static_cast<long>(nodes) * hw.node_size;
        if (used > r.total_physical_qubits)
            throw InfeasibleError("configuration does not fit in the provisioned nodes");
    }
    r.frac_edf = static_cast<double>(edf_qubits) / used;
    r.frac_msdf = static_cast<double>(msdf_total) / used;
    r.frac_data = static_cast<double>(data_qubits) / used;
    r.frac_idle = 1.0 - static_cast<double>(used) / r.total_physical_qubits;
    r.msdf_frac_nonnet = static_cast<double>(msdf_total) / (msdf_total + data_qubits);
    r.spacetime_volume = static_cast<double>(r.total_physical_qubits) * r.runtime_s;
    return r;
}

// Strict Pareto reduction over a key vector (all components minimized).
template <typename T, typename KeyFn>
std::vector<const T*> pareto_filter(const std::vector<T>& items, KeyFn key) {
    std::vector<const T*> kept;
    for (const auto& a : items) {
        bool dominated = false;
        const auto ka = key(a);
        for (const auto& b : items) {
            const auto kb = key(b);
            bool all_le = true, any_lt = false;
            for (size_t i = 0; i < ka.size(); ++i) {
                if (kb[i] > ka[i])
                    all_le = false;
                if (kb[i] < ka[i])
                    any_lt = true;
            }
            if (all_le && any_lt) {
                dominated = true;
                break;
            }
        }
        if (!dominated)
            kept.push_back(&a);
    }
    return kept;
}

std::vector<int> count_grid(int max_count, int dense_cap) {
    std::vector<int> grid;
    if (max_count < 1)
        return grid;
    for (int n = 1; n <= std::min(max_count, dense_cap); ++n)
        grid.push_back(n);
    int n = grid.back();
    while (n < max_count) {
        n = std::max(n + 1, static_cast<int>(std::ceil(n * 1.5)));
        grid.push_back(std::min(n, max_count));
    }
    return grid;
}

// Order for picking the representative among equal spacetime volumes.
bool better_representative(const EstimateResult& a, const EstimateResult& b) {
    if (a.spacetime_volume != b.spacetime_volume)
        return a.spacetime_volume < b.spacetime_volume;
    if (a.nodes != b.nodes)
        return a.nodes < b.nodes;
    if (a.runtime_s != b.runtime_s)
        return a.runtime_s < b.runtime_s;
    if (a.active_physical_qubits != b.active_physical_qubits)
        return a.active_physical_qubits < b.active_physical_qubits;
    const auto key = [](const EstimateResult& r) {
        return std::tie(r.edf_chain, r.msdf_chain, r.n_edf, r.n_msdf);
    };
    return key(a) < key(b);
}

} // namespace

EstimateResult estimate(const ApplicationProfile& app, const HardwareModel& hw,
                        const EstimateConfig& config, const EstimateOptions& opts) {
    app.validate();
    hw.validate(!opts.monolithic);
    const ErrorBudget budget = split_budget(app.eps_total, opts.budget_weights);
    ConfigInput in{config.edf.has_value() ? &*config.edf : nullptr, &config.msdf, config.n_edf,
                   config.n_msdf};
    return evaluate_config(app, hw, in, budget, opts);
}

double overhead(const EstimateResult& dist, const EstimateResult& mono) {
    if (mono.spacetime_volume <= 0.0)
        throw ConfigError("overhead: monolithic volume must be positive");
    // Compare actively occupied volume: provisioned totals are quantized to
    // whole nodes (and padded by the networking reserve), which would put
    // packing artifacts into the overhead curve.
    const double active_dist = static_cast<double>(dist.active_physical_qubits) * dist.runtime_s;
    const double active_mono = static_cast<double>(mono.active_physical_qubits) * mono.runtime_s;
    return active_dist / active_mono;
}

const std::vector<MsdfFactory>& Estimator::msdf_catalog_for(const ApplicationProfile& app,
                                                            const HardwareModel& hw) {
    const ErrorBudget budget = split_budget(app.eps_total, opts_.budget_weights);
    const double target = budget.magic / app.t_count;
    std::ostringstream key;
    key.precision(17);
    key << hw.qubit.p << "|" << hw.cycle_factor << "|" << target << "|"
        << opts_.msdf.injection_factor << "|" << opts_.msdf.tile_scale << "|"
        << opts_.msdf.floor_coeff << "|" << opts_.msdf.max_levels << "|"
        << opts_.msdf.max_distance;
    auto it = msdf_cache_.find(key.str());
    if (it == msdf_cache_.end())
        it = msdf_cache_.emplace(key.str(), msdf_catalog(hw.qubit, hw.cycle_factor, target,
                                                         opts_.msdf)).first;
    return it->second;
}

const FactoryCatalog& Estimator::edf_catalog_for(const ApplicationProfile& app,
                                                 const HardwareModel& hw) {
    const ErrorBudget budget = split_budget(app.eps_total, opts_.budget_weights);
    // Loosest per-state target (two nodes); per-configuration feasibility
    // re-checks against the actual node count.
    const double target = budget.bell / app.t_count;
    std::ostringstream key;
    key.precision(17);
    key << hw.qubit.p << "|" << hw.cycle_factor << "|" << hw.bell_error_total << "|" << target
        << "|" << opts_.edf_search.max_levels << "|" << opts_.edf_search.max_distance;
    auto it = edf_cache_.find(key.str());
    if (it == edf_cache_.end())
        it = edf_cache_
                 .emplace(key.str(), search_factories(hw.bell_error(), hw.qubit,
                                                      hw.cycle_factor, target, opts_.edf_search))
                 .first;
    return it->second;
}

SearchResult Estimator::search(const ApplicationProfile& app, const HardwareModel& hw) {
    app.validate();
    hw.validate(!opts_.monolithic);
    const ErrorBudget budget = split_budget(app.eps_total, opts_.budget_weights);
    const LayoutPlan plan = isa::layout(app.data_qubits);

    const auto& msdfs = msdf_catalog_for(app, hw);
    const FactoryCatalog* edfs = opts_.monolithic ? nullptr : &edf_catalog_for(app, hw);

    // Saturation reference: the distance the budget requires when the
    // computation is cycle-bound. Factory counts beyond the point where the
    // factory term drops below tau(d0) cannot shorten the gadget period.
    const int d0 =
        surface_code::min_distance(hw.qubit.p, budget.logical / (plan.total_tiles * app.t_count));
    const double tau0_steps = surface_code::cycle_steps(d0, hw.cycle_factor);

    // Feasibility already caps the useful output error: entries below the
    // target only help by permitting more nodes (EDFs) or not at all
    // (MSDFs), so the sweep runs over a per-capability Pareto reduction of
    // each catalog instead of the full quality-annotated set.
    std::vector<const MsdfFactory*> msdf_sel;
    {
        std::vector<MsdfFactory> feasible;
        std::vector<const MsdfFactory*> sources;
        for (const auto& m : msdfs) {
            if (app.t_count * m.output_error <= budget.magic) {
                feasible.push_back(m);
                sources.push_back(&m);
            }
        }
        for (const auto* kept : pareto_filter(feasible, [](const MsdfFactory& m) {
                 return std::array<double, 2>{static_cast<double>(m.physical_qubits),
                                              m.period_steps / m.outputs_per_batch};
             }))
            msdf_sel.push_back(sources[static_cast<size_t>(kept - feasible.data())]);
    }

    std::vector<const MultiLevelFactory*> edf_sel;
    int n_nodes_ub = 1;
    if (!opts_.monolithic) {
        const int d_cap = std::min(d0 + 8, 99);
        const double demand_hi =
            static_cast<double>(surface_code::physical_qubits_per_tile(d_cap)) *
            plan.total_tiles;
        n_nodes_ub = std::max(
            2, 1 + static_cast<int>(std::ceil(demand_hi / (hw.node_size / 2.0))));
        // Group entries by the node count their output error supports
        // (capped at the upper bound); within a group extra fidelity is
        // worthless, so keep the (Q, T/O, I/O) Pareto set only.
        std::map<int, std::vector<const MultiLevelFactory*>> groups;
        for (const auto& e : edfs->entries) {
            if (e.passthrough()) {
                edf_sel.push_back(&e);
                continue;
            }
            const double per_state = budget.bell / app.t_count;
            if (e.output_error_total > per_state)
                continue; // cannot even support two nodes
            int n_feas = n_nodes_ub;
            if (e.output_error_total > 0.0)
                n_feas = std::min<double>(
                    n_nodes_ub, 1.0 + std::floor(per_state / e.output_error_total));
            groups[n_feas].push_back(&e);
        }
        for (const auto& [n_feas, members] : groups) {
            std::vector<MultiLevelFactory> copy;
            for (const auto* e : members)
                copy.push_back(*e);
            for (const auto* kept : pareto_filter(copy, [](const MultiLevelFactory& f) {
                     return std::array<double, 3>{
                         static_cast<double>(f.physical_qubits),
                         f.latency_steps / f.outputs_per_batch,
                         f.inputs_per_output / f.outputs_per_batch};
                 }))
                edf_sel.push_back(members[static_cast<size_t>(kept - copy.data())]);
        }
    }

    std::vector<EstimateResult> results;
    const auto consider = [&](const ConfigInput& in) {
        try {
            results.push_back(evaluate_config(app, hw, in, budget, opts_));
        } catch (const EstimatorError&) {
            // Infeasible or non-converging grid point; skip.
        }
    };

    for (const auto* msdf : msdf_sel) {
        const int msdf_sat = std::max(
            1, static_cast<int>(std::ceil(tstate_period_steps(*msdf, 1) / tau0_steps)));
        const std::vector<int> msdf_grid = count_grid(msdf_sat, opts_.grid_cap);

        for (int n_msdf : msdf_grid) {
            if (opts_.monolithic) {
                consider({nullptr, msdf, 0, n_msdf});
                continue;
            }
            // Single-node fallback: the whole application inside one node.
            consider({nullptr, msdf, 0, n_msdf});
            for (const auto* edf : edf_sel) {
                if (edf->passthrough()) {
                    consider({edf, msdf, 1, n_msdf});
                    continue;
                }
                const long fit =
                    (hw.node_size - 1) / (2 * std::max<long>(1, edf->physical_qubits));
                if (fit < 1)
                    continue;
                const double edf_steps =
                    (opts_.edf_distance_demand ? d0 : 1.0) * opts_.edf_period_scale *
                    (opts_.edf_throughput == EdfThroughput::Structural
                         ? edf->structural_steps
                         : edf->latency_steps);
                const int edf_sat = std::max(
                    1, static_cast<int>(std::ceil(edf_steps /
                                                  (edf->outputs_per_batch * tau0_steps))));
                const int max_edf = static_cast<int>(std::min<long>(fit, edf_sat));
                for (int n_edf : count_grid(max_edf, opts_.grid_cap))
                    consider({edf, msdf, n_edf, n_msdf});
            }
        }
    }

    if (results.empty())
        throw InfeasibleError("search: no feasible configuration for " + app.name);

    // Pareto frontier over (total qubits, runtime).
    std::sort(results.begin(), results.end(), better_representative);
    SearchResult out;
    out.representative = results.front();
    // Volume branches a few percent apart are model noise; within the band,
    // prefer the faster configuration.
    const double vol_cap =
        results.front().spacetime_volume * opts_.representative_volume_band;
    for (const auto& r : results) {
        if (r.spacetime_volume > vol_cap)
            continue;
        if (r.runtime_s < out.representative.runtime_s ||
            (r.runtime_s == out.representative.runtime_s &&
             better_representative(r, out.representative)))
            out.representative = r;
    }
    for (const auto& r : results) {
        bool dominated = false;
        for (const auto& o : results) {
            if (o.total_physical_qubits <= r.total_physical_qubits && o.runtime_s <= r.runtime_s &&
                (o.total_physical_qubits < r.total_physical_qubits || o.runtime_s < r.runtime_s)) {
                dominated = true;
                break;
            }
        }
        if (!dominated)
            out.frontier.push_back(r);
    }
    // Stable presentation order; drop duplicate (qubits, runtime) points.
    std::sort(out.frontier.begin(), out.frontier.end(),
              [](const EstimateResult& a, const EstimateResult& b) {
                  if (a.total_physical_qubits != b.total_physical_qubits)
                      return a.total_physical_qubits < b.total_physical_qubits;
                  return a.runtime_s < b.runtime_s;
              });
    out.frontier.erase(std::unique(out.frontier.begin(), out.frontier.end(),
                                   [](const EstimateResult& a, const EstimateResult& b) {
                                       return a.total_physical_qubits ==
                                                  b.total_physical_qubits &&
                                              a.runtime_s == b.runtime_s;
                                   }),
                       out.frontier.end());
    return out;
}

} // namespace dqre
