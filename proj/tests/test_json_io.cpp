#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dqre/json_io.hpp"

#include <cstdio>
#include <fstream>

using namespace dqre;
using json_io::json;

namespace {

struct TempFile {
    std::string path;
    TempFile(const std::string& name, const std::string& contents) : path(name) {
        std::ofstream(path) << contents;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

} // namespace

TEST_CASE("number formatting is canonical") {
    CHECK(json_io::format_number(0.0) == "0");
    CHECK(json_io::format_number(125000.0) == "125000");
    CHECK(json_io::format_number(0.5) == "0.5");
    // Identical doubles always format identically (determinism anchor).
    CHECK(json_io::format_number(1.0 / 3.0) == json_io::format_number(1.0 / 3.0));
}

TEST_CASE("estimate result round trip fields") {
    EstimateResult r;
    r.application = "Ising";
    r.nodes = 3;
    r.total_physical_qubits = 135000;
    r.runtime_s = 12.5;
    r.distance = 9;
    r.edf_chain = "2Q(X):1|2Q(Y):1";
    const json j = json_io::to_json(r);
    CHECK(j.at("application") == "Ising");
    CHECK(j.at("nodes") == 3);
    CHECK(j.at("qubits_total") == 135000);
    CHECK(j.at("runtime_s") == "12.5");
    CHECK(j.at("edf_chain") == "2Q(X):1|2Q(Y):1");
    CHECK(j.at("eta_mode") == "strict");
}

TEST_CASE("application config parsing") {
    const json good = {{"name", "toy"}, {"data_qubits", 7}, {"t_count", 1e6}};
    const ApplicationProfile app = json_io::application_from_json(good);
    CHECK(app.name == "toy");
    CHECK(app.data_qubits == 7);
    CHECK(app.eps_total == doctest::Approx(0.01));

    CHECK_THROWS_AS(json_io::application_from_json(json{{"data_qubits", 7}}), ConfigError);
    CHECK_THROWS_AS(json_io::application_from_json(
                        json{{"data_qubits", 7}, {"t_count", 1e6}, {"colour", "red"}}),
                    ConfigError);
}

TEST_CASE("hardware config overlays the base") {
    HardwareModel base;
    base.eta = 123.0;
    const HardwareModel hw =
        json_io::hardware_from_json(json{{"node_size", 25000}, {"p", 1e-3}}, base);
    CHECK(hw.node_size == 25000);
    CHECK(hw.qubit.p == doctest::Approx(1e-3));
    CHECK(hw.eta == doctest::Approx(123.0)); // untouched fields inherit

    CHECK_THROWS_AS(json_io::hardware_from_json(json{{"flux", 1.21}}, base), ConfigError);
}

TEST_CASE("config files") {
    const TempFile file("dqre_test_good.json", R"({
        "application": {"name": "toy", "data_qubits": 7, "t_count": 1000000.0},
        "hardware": {"eta": 10000.0, "node_size": 25000}
    })");
    const auto cfg = json_io::load_config_file(file.path);
    REQUIRE(cfg.application.has_value());
    REQUIRE(cfg.hardware.has_value());
    CHECK(cfg.application->data_qubits == 7);
    CHECK(cfg.hardware->eta == doctest::Approx(10000.0));

    const TempFile junk("dqre_test_junk.json", "{not json");
    CHECK_THROWS_AS(json_io::load_config_file(junk.path), ConfigError);
    CHECK_THROWS_AS(json_io::load_config_file("no_such_file.json"), ConfigError);

    const TempFile unknown("dqre_test_unknown.json", R"({"simulator": {}})");
    CHECK_THROWS_AS(json_io::load_config_file(unknown.path), ConfigError);
}
