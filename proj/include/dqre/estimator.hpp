#pragma once

#include "dqre/distillation.hpp"
#include "dqre/isa_model.hpp"
#include "dqre/magic_state.hpp"

#include <array>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace dqre {

// Default rounds-per-cycle factor, calibrated once against the published
// reference workloads and shared by every module.
inline constexpr double kDefaultCycleFactor = 10.0;

// Minimum share of a node set aside per link endpoint as the networking
// region (a connection splits its distillation load across both ends).
inline constexpr double kNetworkReserveShare = 0.075;

struct HardwareModel {
    std::string name = "custom";
    PhysicalQubitModel qubit;
    double bell_error_total = 0.05; // raw Bell pair error rate per link
    double eta = 10e6;              // raw Bell pairs per second per link
    long node_size = 45000;         // physical qubits per node
    double cycle_factor = kDefaultCycleFactor;

    PauliErrorRates bell_error() const { return PauliErrorRates::depolarizing(bell_error_total); }

    void validate(bool distributed) const {
        qubit.validate();
        if (bell_error_total < 0.0 || bell_error_total > 1.0)
            throw ConfigError("raw Bell error rate must be in [0,1]");
        if (distributed && eta <= 0.0)
            throw ConfigError("entanglement generation rate must be positive");
        if (distributed && node_size < 1)
            throw ConfigError("node size must be positive");
        if (cycle_factor <= 0.0)
            throw ConfigError("cycle factor must be positive");
    }
};

struct ErrorBudget {
    double total;
    double logical; // eps_L
    double magic;   // eps_M
    double bell;    // eps_E
};

ErrorBudget split_budget(double eps_total, const std::array<double, 3>& weights = {1, 1, 1});

struct ApplicationProfile {
    std::string name;
    long data_qubits; // Q_D
    double t_count;   // T gates after Clifford optimization
    double eps_total = 0.01;

    void validate() const {
        if (data_qubits < 1)
            throw ConfigError("application must have at least one data qubit");
        if (t_count < 1.0)
            throw ConfigError("application must have at least one T gate");
        if (eps_total <= 0.0 || eps_total >= 1.0)
            throw ConfigError("error budget must be in (0,1)");
    }
};

// How the raw-Bell-pair supply term of the gadget period is computed.
// Strict divides the per-link EDF input demand by the generation rate;
// Refined charges only the Bell pairs a gadget actually consumes.
enum class EtaMode { Strict, Refined };

std::string to_string(EtaMode mode);

// Basis for the EDF supply term T_E/(N_E*O_E): the rejection-adjusted
// end-to-end expected latency, or the structural pipeline depth (levels
// re-run on rejection in parallel copies, so throughput is set by the
// pass-through time).
enum class EdfThroughput { ExpectedLatency, Structural };

struct EstimateOptions {
    bool monolithic = false;
    EtaMode eta_mode = EtaMode::Strict;
    EdfThroughput edf_throughput = EdfThroughput::ExpectedLatency;
    double edf_period_scale = 0.58; // derates EDF supply (interface scheduling overlap)
    // A remote gadget merges patches across a link by lattice surgery, which
    // consumes one Bell pair per boundary row: d pairs per gadget per link.
    bool edf_distance_demand = false;
    std::array<double, 3> budget_weights = {1, 1, 3};
    MsdfParams msdf;
    SearchOptions edf_search;
    double representative_volume_band = 1.55; // near-minimum volumes tie toward speed
    int grid_cap = 16;         // dense factory-count grid up to here, geometric after
    int node_iteration_cap = 10;
    int distance_iteration_cap = 20;
};

struct EstimateConfig {
    std::optional<MultiLevelFactory> edf;
    MsdfFactory msdf;
    int n_edf = 0; // per link
    int n_msdf = 1;
    int distance = 0;
    int nodes = 1;
};

struct EstimateResult {
    std::string application;
    int nodes = 1;
    long total_physical_qubits = 0;
    long active_physical_qubits = 0; // data + MSDF + configured EDFs
    double runtime_s = 0.0;
    int distance = 0;
    double t_gadget_s = 0.0;
    double frac_edf = 0.0;  // of provisioned qubits
    double frac_msdf = 0.0;
    double frac_data = 0.0;
    double frac_idle = 0.0;
    double msdf_frac_nonnet = 0.0; // MSDF share of non-networking qubits
    double spacetime_volume = 0.0; // qubit-seconds
    EtaMode eta_mode = EtaMode::Strict;
    bool monolithic = false;
    // Config echo for reproducibility.
    std::string edf_chain;
    std::string msdf_chain;
    int n_edf = 0;
    int n_msdf = 1;
    long edf_qubits_per_factory = 0;
    long msdf_qubits_per_factory = 0;
};

struct SearchResult {
    std::vector<EstimateResult> frontier; // Pareto over (qubits, runtime)
    EstimateResult representative;        // minimum spacetime volume
};

// Gadget execution period: the slowest of the surface-code cycle, magic
// state supply, distilled Bell supply, and raw Bell supply.
double gadget_period(int d, const HardwareModel& hw, const MsdfFactory& msdf, int n_msdf,
                     const MultiLevelFactory* edf, int n_edf, int n_nodes, EtaMode mode,
                     EdfThroughput throughput = EdfThroughput::Structural,
                     double edf_period_scale = 1.0, bool distance_demand = false);

// Smallest odd distance meeting the logical error budget, solved as a
// fixed point because the bound depends on the gadget period.
int required_distance(double eps_logical, long tiles, double t_count, const HardwareModel& hw,
                      const std::function<double(int)>& gadget_period_of_d,
                      int iteration_cap = 20);

// Nodes needed to host compute and MSDF tiles once networking qubits are
// set aside. Throws InfeasibleError when the EDFs alone overflow a node.
int node_count(long tiles, int d, long msdf_qubits_total, long edf_qubits_per_link_side,
               long node_size);

EstimateResult estimate(const ApplicationProfile& app, const HardwareModel& hw,
                        const EstimateConfig& config, const EstimateOptions& opts = {});

double overhead(const EstimateResult& dist, const EstimateResult& mono);

// Full configuration sweep with factory catalogs cached across calls, so
// parameter sweeps that only move eta or the node size stay cheap.
class Estimator {
public:
    explicit Estimator(EstimateOptions opts = {}) : opts_(std::move(opts)) {}

    const EstimateOptions& options() const { return opts_; }
    EstimateOptions& options() { return opts_; }

    SearchResult search(const ApplicationProfile& app, const HardwareModel& hw);

    // Catalogs for the given application budget (exposed for the CLI).
    const std::vector<MsdfFactory>& msdf_catalog_for(const ApplicationProfile& app,
                                                     const HardwareModel& hw);
    const FactoryCatalog& edf_catalog_for(const ApplicationProfile& app,
                                          const HardwareModel& hw);

private:
    EstimateOptions opts_;
    std::map<std::string, std::vector<MsdfFactory>> msdf_cache_;
    std::map<std::string, FactoryCatalog> edf_cache_;
};

} // namespace dqre
