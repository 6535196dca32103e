#include "doctest.h"

#include "commands.hpp"

#include "duffing/errors.hpp"
#include "duffing/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace duffing;
using namespace duffing::cli;

namespace {

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string config_error(const std::string& text) {
    try {
        parse_config(text);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ConfigError);
        return e.what();
    }
    return "";
}

std::filesystem::path scratch(const std::string& name) {
    auto p = std::filesystem::temp_directory_path() / ("duffing_io_test_" + name);
    std::filesystem::remove_all(p);
    return p;
}

}

TEST_CASE("number formatting") {
    CHECK(io::format_double(0.1) == "0.1");
    CHECK(io::format_double(1.0 / 3.0) == "0.333333333333");
    CHECK(io::format_double(-0.0) == "0");
    CHECK(io::format_double(1e-20) == "1e-20");
    CHECK(io::format_double(123456789012345.0) == "1.23456789012e+14");
    CHECK(io::format_optional(std::nullopt).empty());
}

TEST_CASE("sha256 and header") {
    CHECK(io::sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    CHECK(io::header_line("ff") == "# duffing-qsim v0.1.0 config-hash=ff");
}

TEST_CASE("csv writer") {
    io::CsvWriter w("# h", {"a", "b"});
    w.row({"1", "x,y"});
    CHECK(w.text() == "# h\na,b\n1,\"x,y\"\n");
    CHECK_THROWS(w.row({"1"}));
}

TEST_CASE("config: scaled block") {
    const auto c = parse_config(R"({"scaled": {"lambda": 0.027, "beta": 0.12, "eta": 0.03}, "grids": {"T": [0, 2.0]}})");
    CHECK(c.lambda == 0.027);
    CHECK(c.beta == 0.12);
    CHECK(c.eta == 0.03);
    CHECK(c.nbar == 0.0);
    CHECK(c.T_grid.size() == 2);
    CHECK(c.N() == 112);
    CHECK(c.hash.size() == 64);
    // key order and whitespace do not change the hash
    const auto d = parse_config("{\"grids\": {\"T\": [0, 2.0]},\n \"scaled\": {\"eta\": 0.03, \"beta\": 0.12, \"lambda\": 0.027}}");
    CHECK(c.hash == d.hash);
}

TEST_CASE("config: lab block maps through the scaling") {
    const auto c = parse_config(R"({"lab": {"m": 1, "Omega": 1, "gamma": 4.5e-5, "F0": 5.27e-3, "nu": 0.9975, "eta": 0.03, "T_over_Omega": 2.0}})");
    CHECK(c.from_lab);
    CHECK(c.lambda == doctest::Approx(0.027));
    CHECK(c.beta == doctest::Approx(0.12).epsilon(2e-3));
    CHECK(c.nbar == doctest::Approx(1.541494).epsilon(1e-6));
    CHECK(c.T == 2.0);
}

TEST_CASE("config errors carry line numbers") {
    CHECK(config_error("{\n  \"scaled\": {\n    \"lambda\": 0.027,\n    \"beta\": 0.12,\n    \"etta\": 0.03\n  }\n}")
              .find("line 5") != std::string::npos);
    CHECK(config_error("{\n  \"scaled\": {\"lambda\": 0.027, \"beta\": 0.12},\n  \"gridz\": {}\n}").find("line 3") !=
          std::string::npos);
    CHECK(config_error("{\n  \"scaled\": {\"lambda\": 0.027,\n  \"beta\": 0.12,,}\n}").find("line 3") != std::string::npos);
    CHECK(config_error(R"({"scaled": {"lambda": 0.027, "beta": 0.12}, "lab": {}})").find("exactly one") != std::string::npos);
    CHECK(config_error(R"({"output": {}})").find("exactly one") != std::string::npos);
    CHECK(!config_error(R"({"scaled": {"lambda": -1, "beta": 0.12}})").empty());
    CHECK(!config_error(R"({"scaled": {"lambda": "x", "beta": 0.12}})").empty());
    CHECK(!config_error(R"({"scaled": {"lambda": 0.1, "beta": 0.12}, "grids": {"eta": []}})").empty());
    CHECK(!config_error(R"({"scaled": {"lambda": 0.1, "beta": 0.12}, "grids": {"eta": {"start": 0, "stop": 1}}})").empty());
    CHECK(!config_error(R"({"scaled": {"lambda": 0.1, "beta": 0.12}, "method": "magic"})").empty());
    CHECK(!config_error(R"({"scaled": {"lambda": 0.1, "beta": 0.12}, "tolerances": {"steady_state": 0}})").empty());
    CHECK(!config_error(R"({"lab": {"m": 1, "Omega": 1, "gamma": 0, "F0": 1, "nu": 0.9}})").empty());
}

TEST_CASE("config grids") {
    const auto c = parse_config(R"({"scaled": {"lambda": 0.1, "beta": 0.12},
        "grids": {"eta": {"start": 0.005, "stop": 0.15, "step": 0.005},
                  "phase_space": {"Q": {"start": -1.6, "stop": 1.6, "num": 101}, "P": [0.0]}}})");
    CHECK(c.eta_grid.size() == 30);
    CHECK(c.eta_grid.back() == doctest::Approx(0.15));
    REQUIRE(c.phase_space);
    CHECK(c.phase_space->Q.size() == 101);
    CHECK(c.phase_space->Q.front() == -1.6);
    CHECK(c.phase_space->Q.back() == doctest::Approx(1.6));
}

TEST_CASE("overrides change the hash") {
    auto c = parse_config(R"({"scaled": {"lambda": 0.1, "beta": 0.12}})");
    const auto h0 = c.hash;
    Overrides o;
    o.jobs = 4;
    o.out_dir = "/tmp/elsewhere";
    apply_overrides(c, o);
    CHECK(c.hash == h0);
    o.truncation = 50;
    apply_overrides(c, o);
    CHECK(c.hash != h0);
    CHECK(c.N() == 50);
    Overrides bad;
    bad.format = "xml";
    CHECK_THROWS_AS(apply_overrides(c, bad), Error);
}

TEST_CASE("landscape command output") {
    auto c = parse_config(R"({"scaled": {"lambda": 0.027, "beta": 0.0341},
        "grids": {"phase_space": {"Q": {"start": -1.6, "stop": 1.6, "num": 101}, "P": {"start": -1.6, "stop": 1.6, "num": 101}}}})");
    c.out_dir = scratch("landscape");
    REQUIRE(cmd_landscape(c) == kOk);
    const auto text = slurp(c.out_dir / "landscape.csv");
    std::istringstream in(text);
    std::string line;
    std::getline(in, line);
    CHECK(line == "# duffing-qsim v0.1.0 config-hash=" + c.hash);
    std::getline(in, line);
    CHECK(line == "label,Q,P,g");
    int grid = 0, extremum = 0;
    while (std::getline(in, line)) {
        grid += line.rfind("grid,", 0) == 0;
        extremum += line.rfind("extremum:", 0) == 0;
    }
    CHECK(grid == 10201);
    CHECK(extremum == 3);

    // beta = 0: the extrema block still appears
    auto z = parse_config(R"({"scaled": {"lambda": 0.027, "beta": 0}, "grids": {"phase_space": {"Q": [0], "P": [0]}}})");
    z.out_dir = scratch("landscape0");
    CHECK(cmd_landscape(z) == kOk);

    auto no_grid = parse_config(R"({"scaled": {"lambda": 0.027, "beta": 0.0341}})");
    no_grid.out_dir = scratch("landscape_none");
    CHECK(cmd_landscape(no_grid) == kConfigError);
}

TEST_CASE("fixed-points command output is deterministic") {
    auto c = parse_config(R"({"scaled": {"lambda": 0.027, "beta": 0.12},
        "grids": {"eta": {"start": 0.005, "stop": 0.6, "step": 0.005}}})");
    c.out_dir = scratch("fixed_a");
    REQUIRE(cmd_fixed_points(c) == kOk);
    const auto a = slurp(c.out_dir / "fixed_points.csv");
    c.out_dir = scratch("fixed_b");
    REQUIRE(cmd_fixed_points(c) == kOk);
    CHECK(a == slurp(c.out_dir / "fixed_points.csv"));
    CHECK(a.find("\neta,branch,Q,P,r,stable\n") != std::string::npos);
    CHECK(a.find(",absent\n") != std::string::npos);
    CHECK(a.find('\r') == std::string::npos);
}

TEST_CASE("json format carries the same header") {
    auto c = parse_config(R"({"scaled": {"lambda": 0.027, "beta": 0.12}, "grids": {"eta": [0.03]}, "output": {"format": "json"}})");
    c.out_dir = scratch("fixed_json");
    REQUIRE(cmd_fixed_points(c) == kOk);
    const auto text = slurp(c.out_dir / "fixed_points.json");
    CHECK(text.rfind("# duffing-qsim v0.1.0 config-hash=", 0) == 0);
    const auto body = nlohmann::json::parse(text.substr(text.find('\n') + 1));
    CHECK(body.at("rows").size() == 3);
    CHECK(body.at("rows")[0].at("branch") == "low");
}
