#include "dqre/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>

namespace dqre::json_io {

std::string format_number(double v) {
    if (v == std::floor(v) && std::abs(v) < 1e15) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.0f", v);
        return buf;
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

json to_json(const EstimateResult& r) {
    return json{{"application", r.application},
                {"nodes", r.nodes},
                {"qubits_total", r.total_physical_qubits},
                {"runtime_s", format_number(r.runtime_s)},
                {"distance", r.distance},
                {"t_gadget_s", format_number(r.t_gadget_s)},
                {"frac_edf", format_number(r.frac_edf)},
                {"frac_msdf", format_number(r.frac_msdf)},
                {"frac_data", format_number(r.frac_data)},
                {"frac_idle", format_number(r.frac_idle)},
                {"msdf_frac_nonnet", format_number(r.msdf_frac_nonnet)},
                {"volume", format_number(r.spacetime_volume)},
                {"eta_mode", to_string(r.eta_mode)},
                {"monolithic", r.monolithic},
                {"edf_chain", r.edf_chain},
                {"msdf_chain", r.msdf_chain},
                {"n_edf", r.n_edf},
                {"n_msdf", r.n_msdf},
                {"edf_qubits_per_factory", r.edf_qubits_per_factory},
                {"msdf_qubits_per_factory", r.msdf_qubits_per_factory}};
}

json to_json(const SearchResult& s) {
    json frontier = json::array();
    for (const auto& r : s.frontier)
        frontier.push_back(to_json(r));
    return json{{"representative", to_json(s.representative)}, {"frontier", frontier}};
}

json to_json(const MultiLevelFactory& f) {
    json levels = json::array();
    for (const auto& lvl : f.levels)
        levels.push_back(json{{"kind", to_string(lvl.kind)},
                              {"distance", lvl.distance},
                              {"copies", lvl.copies}});
    return json{{"type", "edf"},
                {"chain", f.chain_key()},
                {"levels", levels},
                {"qubits", f.physical_qubits},
                {"latency_steps", format_number(f.latency_steps)},
                {"inputs_per_output", format_number(f.inputs_per_output)},
                {"outputs_per_batch", f.outputs_per_batch},
                {"output_error", format_number(f.output_error_total)}};
}

json to_json(const MsdfFactory& f) {
    json levels = json::array();
    for (const auto& lvl : f.levels)
        levels.push_back(json{{"kind", to_string(lvl.kind)},
                              {"distance", lvl.distance},
                              {"copies", lvl.copies}});
    return json{{"type", "msdf"},
                {"chain", f.chain_key()},
                {"levels", levels},
                {"qubits", f.physical_qubits},
                {"period_steps", format_number(f.period_steps)},
                {"inputs_per_output", format_number(f.inputs_per_output)},
                {"outputs_per_batch", f.outputs_per_batch},
                {"output_error", format_number(f.output_error)}};
}

json catalog_to_json(const FactoryCatalog& cat) {
    json arr = json::array();
    for (const auto& f : cat.entries)
        arr.push_back(to_json(f));
    return arr;
}

json catalog_to_json(const std::vector<MsdfFactory>& cat) {
    json arr = json::array();
    for (const auto& f : cat)
        arr.push_back(to_json(f));
    return arr;
}

namespace {

void require_keys(const json& j, const std::set<std::string>& allowed, const std::string& where) {
    if (!j.is_object())
        throw ConfigError(where + " must be a JSON object");
    for (const auto& [key, value] : j.items()) {
        if (!allowed.contains(key))
            throw ConfigError("unknown key \"" + key + "\" in " + where);
    }
}

} // namespace

ApplicationProfile application_from_json(const json& j) {
    require_keys(j, {"name", "data_qubits", "t_count", "eps_total"}, "application");
    ApplicationProfile app;
    app.name = j.value("name", std::string("custom"));
    if (!j.contains("data_qubits") || !j.contains("t_count"))
        throw ConfigError("application requires data_qubits and t_count");
    app.data_qubits = j.at("data_qubits").get<long>();
    app.t_count = j.at("t_count").get<double>();
    app.eps_total = j.value("eps_total", 0.01);
    app.validate();
    return app;
}

HardwareModel hardware_from_json(const json& j, const HardwareModel& base) {
    require_keys(j,
                 {"name", "t_op", "p", "bell_error", "eta", "node_size", "cycle_factor"},
                 "hardware");
    HardwareModel hw = base;
    if (j.contains("name"))
        hw.name = j.at("name").get<std::string>();
    if (j.contains("t_op"))
        hw.qubit.t_op = j.at("t_op").get<double>();
    if (j.contains("p"))
        hw.qubit.p = j.at("p").get<double>();
    if (j.contains("bell_error"))
        hw.bell_error_total = j.at("bell_error").get<double>();
    if (j.contains("eta"))
        hw.eta = j.at("eta").get<double>();
    if (j.contains("node_size"))
        hw.node_size = j.at("node_size").get<long>();
    if (j.contains("cycle_factor"))
        hw.cycle_factor = j.at("cycle_factor").get<double>();
    return hw;
}

FileConfig load_config_file(const std::string& path, const HardwareModel& base) {
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open config file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ConfigError("config file parse error: " + std::string(e.what()));
    }
    require_keys(j, {"application", "hardware"}, "config file");
    FileConfig cfg;
    if (j.contains("application"))
        cfg.application = application_from_json(j.at("application"));
    if (j.contains("hardware"))
        cfg.hardware = hardware_from_json(j.at("hardware"), base);
    return cfg;
}

} // namespace dqre::json_io
