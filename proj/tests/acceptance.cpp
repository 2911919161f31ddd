// Acceptance gate: one line per criterion, nonzero exit when any fails.

#include "dqre/catalog.hpp"
#include "dqre/estimator.hpp"
#include "dqre/json_io.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

using namespace dqre;

namespace {

bool g_all_ok = true;

void report(int n, bool ok, const std::string& what) {
    std::printf("criterion %d: %s  %s\n", n, ok ? "PASS" : "FAIL", what.c_str());
    g_all_ok &= ok;
}

bool within_factor(double got, double expected, double factor) {
    return got <= expected * factor && got >= expected / factor;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// --- criterion 1: oracle reproduces the published input-error terms --------

bool criterion1() {
    const auto start = std::chrono::steady_clock::now();
    bool ok = true;
    for (UnitKind kind : {UnitKind::FiveQubitPerfect, UnitKind::RepetitionX,
                          UnitKind::RepetitionY, UnitKind::RepetitionZ}) {
        const UnitErrorModel oracle = enumerate_unit_model(kind, 2);
        const UnitErrorModel& table = builtin_unit(kind).model;
        // Every printed input-error term of order <= 2 must appear in the
        // oracle with its exact coefficient (the 5Q rejection row is printed
        // truncated at first order, so subset is the faithful reading).
        ok &= terms_subset(table.rejection.input_terms(2), oracle.rejection.input_terms(2));
        ok &= terms_subset(table.out_x.input_terms(2), oracle.out_x.input_terms(2));
        ok &= terms_subset(table.out_y.input_terms(2), oracle.out_y.input_terms(2));
        ok &= terms_subset(table.out_z.input_terms(2), oracle.out_z.input_terms(2));
        if (kind != UnitKind::FiveQubitPerfect) {
            ok &= terms_equal(oracle.rejection.input_terms(2), table.rejection.input_terms(2));
            ok &= terms_equal(oracle.out_x.input_terms(2), table.out_x.input_terms(2));
            ok &= terms_equal(oracle.out_y.input_terms(2), table.out_y.input_terms(2));
            ok &= terms_equal(oracle.out_z.input_terms(2), table.out_z.input_terms(2));
        }
    }
    return ok && seconds_since(start) < 1.0;
}

// --- criterion 2: the published four-level worked chain --------------------

bool criterion2() {
    const auto start = std::chrono::steady_clock::now();
    PhysicalQubitModel hw; // 1e-4
    const auto f = compose_multilevel({{UnitKind::RepetitionZ, 1, 1},
                                       {UnitKind::FiveQubitPerfect, 3, 1},
                                       {UnitKind::RepetitionZ, 7, 1},
                                       {UnitKind::RepetitionX, 9, 1}},
                                      PauliErrorRates::depolarizing(0.05), hw,
                                      kDefaultCycleFactor, {false});
    const bool ok = within_factor(static_cast<double>(f.physical_qubits), 324.0, 1.10) &&
                    within_factor(f.latency_steps, 873.0, 1.15) &&
                    within_factor(f.inputs_per_output, 55.0, 1.15) &&
                    within_factor(f.output_error_total, 4.5e-10, 3.0);
    return ok && seconds_since(start) < 1.0;
}

// --- criterion 3: physical two-step repetition distillation -----------------

bool criterion3() {
    PhysicalQubitModel hw;
    const auto f = compose_multilevel({{UnitKind::RepetitionZ, 1, 1},
                                       {UnitKind::RepetitionX, 1, 1}},
                                      PauliErrorRates::depolarizing(0.05), hw,
                                      kDefaultCycleFactor);
    return f.physical_qubits == 4 && f.structural_steps == 4.0 &&
           f.output_error_total <= 0.013;
}

// --- criteria 4, 5, 7: Table 4 reproduction with shipped defaults -----------

struct RefCase {
    const char* name;
    double mono_qubits, mono_runtime;
    double dist_qubits, dist_runtime;
    bool small;
};

constexpr double kDay = 86400.0;
constexpr double kYear = 365.25 * kDay;

const std::vector<RefCase>& reference_cases() {
    static const std::vector<RefCase> cases = {
        {"Ising", 0.0913e6, 7.92, 0.0881e6, 12.5, true},
        {"Fermi-Hubbard", 0.260e6, 51.5 * 60, 0.395e6, 1.59 * 3600, true},
        {"Heisenberg", 0.235e6, 1.34 * kDay, 0.314e6, 2.39 * kDay, true},
        {"RSA-2048", 8.67e6, 16.3 * 3600, 20.9e6, 1.25 * kDay, false},
        {"ZnS", 0.450e6, 3.22 * kDay, 0.941e6, 6.40 * kDay, false},
        {"Benzene", 0.750e6, 16.9 * kDay, 1.69e6, 29.8 * kDay, false},
        {"Ruthenium", 1.71e6, 15.9 * kDay, 2.31e6, 1.88 * kYear / 12, false},
        {"Nitrogenase", 2.28e6, 1.56 * kYear, 3.53e6, 5.50 * kYear, false},
    };
    return cases;
}

struct DistObservation {
    std::string name;
    double frac_edf;
    double msdf_frac_nonnet;
};

bool criteria_4_5_7() {
    const auto start = std::chrono::steady_clock::now();
    const HardwareModel hw = catalog::preset("fast-optimistic-bell1pct");

    bool mono_ok = true;
    EstimateOptions mono_opts;
    mono_opts.monolithic = true;
    Estimator mono_est(mono_opts);
    for (const auto& c : reference_cases()) {
        const auto rep = mono_est.search(catalog::application(c.name), hw).representative;
        mono_ok &= within_factor(rep.total_physical_qubits, c.mono_qubits, 2.0);
        mono_ok &= within_factor(rep.runtime_s, c.mono_runtime, 2.0);
    }

    bool dist_ok = true;
    std::vector<DistObservation> obs;
    Estimator dist_est;
    for (const auto& c : reference_cases()) {
        const double band = c.small ? 2.0 : 3.0;
        const auto rep = dist_est.search(catalog::application(c.name), hw).representative;
        dist_ok &= within_factor(rep.total_physical_qubits, c.dist_qubits, band);
        dist_ok &= within_factor(rep.runtime_s, c.dist_runtime, band);
        obs.push_back({c.name, rep.frac_edf, rep.msdf_frac_nonnet});
    }
    const bool fast_enough = seconds_since(start) < 120.0;

    report(4, mono_ok && fast_enough,
           "monolithic Table-4 reproduction within 2x, shipped defaults");
    report(5, dist_ok && fast_enough,
           "distributed Table-4 reproduction within 2x (small) / 3x (large), strict mode");

    std::vector<double> fracs;
    for (const auto& o : obs)
        fracs.push_back(o.frac_edf);
    std::sort(fracs.begin(), fracs.end());
    const double median = (fracs[3] + fracs[4]) / 2.0;
    bool c7 = fracs.front() >= 0.15 && fracs.back() <= 0.64 && median >= 0.25 && median <= 0.35;
    bool qpe_high = false, factoring_low = false;
    for (const auto& o : obs) {
        if (o.name == "ZnS" || o.name == "Benzene" || o.name == "Ruthenium" ||
            o.name == "Nitrogenase")
            qpe_high |= o.msdf_frac_nonnet >= 0.30;
        if (o.name == "RSA-2048")
            factoring_low = o.msdf_frac_nonnet <= 0.02;
    }
    return c7 && qpe_high && factoring_low;
}

// --- criterion 6: sweep shape properties ------------------------------------

double best_overhead(const SearchResult& sr, const EstimateResult& mono) {
    double best = overhead(sr.representative, mono);
    for (const auto& f : sr.frontier)
        best = std::min(best, overhead(f, mono));
    return best;
}

void criterion6() {
    const ApplicationProfile app = catalog::application("Ising");
    const HardwareModel base = catalog::preset("slow-optimistic-bell1pct");

    EstimateOptions mono_opts;
    mono_opts.monolithic = true;
    const EstimateResult mono = Estimator(mono_opts).search(app, base).representative;

    Estimator est;
    // (a) overhead vs node size: non-increasing with diminishing returns.
    std::vector<double> over;
    for (long size : catalog::default_node_sizes()) {
        HardwareModel hw = base;
        hw.node_size = size;
        over.push_back(best_overhead(est.search(app, hw), mono));
    }
    bool a_ok = true;
    for (size_t i = 1; i < over.size(); ++i)
        a_ok &= over[i] <= over[i - 1] + 1e-12;
    // default_node_sizes is {3000, ..., 60000, 100000}.
    const double early_drop = over.front() - over[over.size() - 2];
    const double late_drop = over[over.size() - 2] - over.back();
    a_ok &= late_drop < 0.25 * early_drop;

    // (b) runtime vs eta: non-increasing with a flat saturation tail;
    // (c) overhead below 3x by 10 kHz on slow qubits.
    bool b_ok = true;
    double prev = 1e300;
    double rt_tail_lo = 0.0, rt_tail_hi = 0.0, overhead_10khz = 0.0;
    for (double eta : {300.0, 1e3, 3e3, 1e4, 3e4, 1e5, 3e5, 1e6, 2e6, 1e7, 1e8, 2e8}) {
        HardwareModel hw = base;
        hw.eta = eta;
        const SearchResult sr = est.search(app, hw);
        const double rt = sr.representative.runtime_s;
        b_ok &= rt <= prev + 1e-9;
        prev = rt;
        if (eta == 2e6)
            rt_tail_lo = rt;
        if (eta == 2e8)
            rt_tail_hi = rt;
        if (eta == 1e4)
            overhead_10khz = best_overhead(sr, mono);
    }
    b_ok &= std::abs(rt_tail_lo - rt_tail_hi) / rt_tail_hi < 0.01;

    report(6, a_ok && b_ok && overhead_10khz < 3.0,
           "node-size overhead non-increasing with diminishing returns; eta runtime "
           "saturates; slow-qubit overhead < 3x at 10 kHz");
}

// --- criterion 8: early-Ising spot check ------------------------------------

void criterion8() {
    HardwareModel hw = catalog::preset("slow-optimistic-bell5pct");
    hw.node_size = 25000;
    hw.eta = 10e3;
    const SearchResult sr = Estimator().search(catalog::application("Ising"), hw);
    bool ok = false;
    for (const auto& f : sr.frontier) {
        if (f.nodes == 5 && within_factor(f.total_physical_qubits, 125e3, 1.20) &&
            f.runtime_s >= 0.5 * 7 * 3600.0 && f.runtime_s <= 1.5 * 7 * 3600.0)
            ok = true;
    }
    report(8, ok, "slow Ising, 25k-qubit nodes at 10 kHz: 5-node frontier point near "
                  "125k qubits / 7 hr");
}

// --- criterion 9: determinism ------------------------------------------------

void criterion9() {
    const ApplicationProfile app = catalog::application("Ising");
    const HardwareModel hw = catalog::preset("fast-optimistic-bell1pct");
    const std::string a = json_io::to_json(Estimator().search(app, hw)).dump();
    const std::string b = json_io::to_json(Estimator().search(app, hw)).dump();
    EstimateOptions mono_opts;
    mono_opts.monolithic = true;
    const std::string c = json_io::to_json(Estimator(mono_opts).search(app, hw)).dump();
    const std::string d = json_io::to_json(Estimator(mono_opts).search(app, hw)).dump();
    report(9, a == b && c == d, "repeated runs serialize byte-identically");
}

} // namespace

int main() {
    report(1, criterion1(), "enumeration oracle matches the published unit error models");
    report(2, criterion2(), "four-level worked chain: 324 qubits, 873 steps, 55 inputs, 4.5e-10");
    report(3, criterion3(), "two physical repetition steps: 5% -> <=1.3% on 4 qubits in 4 layers");
    const bool c7 = criteria_4_5_7();
    criterion6();
    report(7, c7,
           "EDF fractions in [0.15,0.64] with median in [0.25,0.35]; MSDF share spans "
           "factoring to QPE");
    criterion8();
    criterion9();
    return g_all_ok ? 0 : 1;
}
