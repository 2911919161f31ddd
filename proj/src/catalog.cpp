#include "dqre/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

namespace dqre::catalog {

namespace {

std::string normalize(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    std::replace(s.begin(), s.end(), '_', '-');
    std::replace(s.begin(), s.end(), ' ', '-');
    return s;
}

} // namespace

const std::vector<ApplicationProfile>& builtin_applications() {
    static const std::vector<ApplicationProfile> apps = {
        {"Ising", 100, 9.54e5},
        {"Fermi-Hubbard", 241, 7.93e8},
        {"Heisenberg", 123, 2.55e10},
        {"ZnS", 351, 6.12e10},
        {"Benzene", 504, 2.86e11},
        {"Ruthenium", 1318, 2.70e11},
        {"Nitrogenase", 1424, 8.63e12},
        {"RSA-2048", 12581, 1.50e10},
    };
    return apps;
}

ApplicationProfile application(const std::string& name) {
    const std::string key = normalize(name);
    for (const auto& app : builtin_applications()) {
        if (normalize(app.name) == key)
            return app;
    }
    if (key == "rsa")
        return application("RSA-2048");
    throw ConfigError("unknown application: " + name);
}

const std::vector<Preset>& builtin_hardware() {
    static const std::vector<Preset> presets = [] {
        std::vector<Preset> out;
        const std::pair<std::string, double> speeds[] = {{"fast", 50e-9}, {"slow", 100e-6}};
        const std::pair<std::string, double> noise[] = {{"optimistic", 1e-4},
                                                        {"pessimistic", 1e-3}};
        const std::pair<std::string, double> bell[] = {{"bell5pct", 0.05},
                                                       {"bell1pct", 0.01},
                                                       {"bell0.1pct", 0.001}};
        for (const auto& [sname, t_op] : speeds) {
            for (const auto& [nname, p] : noise) {
                for (const auto& [bname, raw] : bell) {
                    Preset pre;
                    pre.name = sname + "-" + nname + "-" + bname;
                    pre.hardware.name = pre.name;
                    pre.hardware.qubit = {t_op, p};
                    pre.hardware.bell_error_total = raw;
                    out.push_back(std::move(pre));
                }
            }
        }
        return out;
    }();
    return presets;
}

HardwareModel preset(const std::string& name) {
    std::string key = normalize(name);
    // Two-part names default to the 1% Bell variant.
    if (std::count(key.begin(), key.end(), '-') == 1)
        key += "-bell1pct";
    for (const auto& pre : builtin_hardware()) {
        if (pre.name == key)
            return pre.hardware;
    }
    throw ConfigError("unknown hardware preset: " + name);
}

const std::vector<long>& default_node_sizes() {
    static const std::vector<long> sizes = {3000, 5000, 15000, 25000, 45000, 60000, 100000};
    return sizes;
}

} // namespace dqre::catalog
