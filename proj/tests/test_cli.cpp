#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#ifndef DQRE_BIN
#error "DQRE_BIN must point at the CLI binary"
#endif

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string(DQRE_BIN) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        out.append(buf.data(), n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ','))
        cells.push_back(cell);
    return cells;
}

} // namespace

TEST_CASE("estimate emits a result document") {
    const RunResult r = run("estimate --app ising --monolithic");
    REQUIRE(r.exit_code == 0);
    const auto doc = nlohmann::json::parse(r.output);
    CHECK(doc.contains("representative"));
    CHECK(doc.contains("frontier"));
    CHECK(doc.at("representative").at("monolithic") == true);
}

TEST_CASE("identical runs are byte-identical") {
    const std::string cmds[] = {
        "estimate --app ising --monolithic",
        "estimate --app ising --preset fast-optimistic-bell1pct",
        "sweep-node-size --app ising --preset fast-optimistic-bell1pct --sizes 45000 -f csv",
        "list-factories --app ising --preset fast-optimistic-bell1pct --monolithic",
    };
    for (const auto& cmd : cmds) {
        CAPTURE(cmd);
        const RunResult a = run(cmd);
        const RunResult b = run(cmd);
        REQUIRE(a.exit_code == 0);
        CHECK(a.output == b.output);
    }
}

TEST_CASE("csv and json sweeps carry the same cells") {
    const std::string base =
        "sweep-node-size --app ising --preset fast-optimistic-bell1pct --sizes 45000";
    const RunResult csv = run(base + " -f csv");
    const RunResult js = run(base + " -f json");
    REQUIRE(csv.exit_code == 0);
    REQUIRE(js.exit_code == 0);

    std::stringstream lines(csv.output);
    std::string header, row;
    REQUIRE(std::getline(lines, header));
    REQUIRE(std::getline(lines, row));
    const auto keys = split_csv_line(header);
    const auto cells = split_csv_line(row);
    REQUIRE(keys.size() == cells.size());

    const auto doc = nlohmann::json::parse(js.output);
    REQUIRE(doc.is_array());
    REQUIRE(doc.size() == 1);
    for (size_t i = 0; i < keys.size(); ++i) {
        CAPTURE(keys[i]);
        CHECK(doc[0].at(keys[i]).template get<std::string>() == cells[i]);
    }
}

TEST_CASE("csv header is the documented one") {
    const RunResult r =
        run("sweep-node-size --app ising --preset fast-optimistic-bell1pct --sizes 45000 -f csv");
    REQUIRE(r.exit_code == 0);
    CHECK(r.output.rfind("axis,nodes,qubits_total,runtime_s,distance,t_gadget_s,"
                         "frac_edf,frac_msdf,frac_data,volume,overhead,feasible\n",
                         0) == 0);
}

TEST_CASE("exit codes distinguish failure modes") {
    CHECK(run("estimate --app ising --node-size 100").exit_code == 2);
    CHECK(run("estimate --app no-such-app").exit_code == 1);
    CHECK(run("estimate --format yaml").exit_code == 1);
    CHECK(run("no-such-command").exit_code == 1);
}

TEST_CASE("single-point sweep equals the estimate representative") {
    const RunResult sweep = run(
        "sweep-node-size --app ising --preset fast-optimistic-bell1pct --sizes 45000 -f csv");
    const RunResult est =
        run("estimate --app ising --preset fast-optimistic-bell1pct -f csv");
    REQUIRE(sweep.exit_code == 0);
    REQUIRE(est.exit_code == 0);

    std::stringstream sl(sweep.output), el(est.output);
    std::string line, sweep_row, est_row;
    std::getline(sl, line);
    std::getline(sl, sweep_row);
    std::getline(el, line);
    std::getline(el, est_row);
    // Same cells except the axis label.
    CHECK(sweep_row.substr(sweep_row.find(',')) == est_row.substr(est_row.find(',')));
}

TEST_CASE("list-factories emits both catalogs") {
    const RunResult r = run("list-factories --app ising --preset fast-optimistic-bell1pct");
    REQUIRE(r.exit_code == 0);
    const auto doc = nlohmann::json::parse(r.output);
    CHECK(doc.contains("msdf"));
    CHECK(doc.contains("edf"));
    CHECK_FALSE(doc.at("edf").empty());
    CHECK(doc.at("edf")[0].at("type") == "edf");
}
