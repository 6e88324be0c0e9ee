// Copyright 2026 The switchtherm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "switchtherm/expcli.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"

namespace {

using namespace switchtherm;
namespace fs = std::filesystem;

fs::path scratch_dir() {
    const fs::path dir = fs::temp_directory_path() / "switchtherm_expcli_test";
    fs::create_directories(dir);
    return dir;
}

fs::path write_text(const std::string& name, const std::string& text) {
    const fs::path path = scratch_dir() / name;
    std::ofstream out(path, std::ios::binary);
    out << text;
    return path;
}

std::vector<std::string> read_lines(const fs::path& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

}  // namespace

TEST_SUITE_BEGIN("expcli");

TEST_CASE("run_scenario reproduces pinned reference rows") {
    ScenarioParams params = default_scenario();
    ResultRow row = run_scenario(params, true);
    CHECK(row.i_in_bits == 1.0);
    CHECK(std::abs(row.i_achieved_bits - 0.311278124459133) < 1e-12);
    CHECK(std::abs(row.i_bound_bits - 0.688721875540867) < 1e-12);
    CHECK(std::abs(row.i_ac_bits - 0.311278124459133) < 1e-12);
    CHECK(row.bound_satisfied);
    CHECK(row.fcoh_nats == doctest::Approx(std::log(2.0)));

    params.q = 0.5;
    row = run_scenario(params, true);
    CHECK(std::abs(row.i_achieved_bits - 0.048794940695398) < 1e-12);
    CHECK(row.i_bound_bits == 0.25);
    CHECK(std::abs(row.i_ac_bits) < 1e-12);
    CHECK(row.bound_satisfied);

    params = default_scenario();
    params.s = 0.5;
    row = run_scenario(params, true);
    CHECK(std::abs(row.i_achieved_bits - 0.390192609390607) < 1e-12);
    CHECK(std::abs(row.i_bound_bits - 0.609196086851588) < 1e-12);
    CHECK(std::abs(row.i_ac_bits - 0.015803913148413) < 1e-12);

    params = default_scenario();
    params.s = 0.75;
    params.q = 0.75;
    params.control = ControlState::mixed(0.5);
    row = run_scenario(params, true);
    CHECK(std::abs(row.i_achieved_bits - 0.037214627131475) < 1e-12);
    CHECK(std::abs(row.i_bound_bits - 0.274454178089149) < 1e-12);
}

TEST_CASE("switched-off control passes nothing at full strength") {
    ScenarioParams params = default_scenario();
    params.control = ControlState::mixed(0.0);
    const ResultRow row = run_scenario(params, true);
    CHECK(std::abs(row.i_achieved_bits) < 1e-12);
    CHECK(std::abs(row.i_bound_bits) < 1e-12);
    CHECK(row.bound_satisfied);
    CHECK(row.fcoh_nats == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("pure controls are scored against the coherence-matched bound") {
    ScenarioParams pure = default_scenario();
    pure.control = ControlState::pure(0.5);
    const ResultRow pure_row = run_scenario(pure, true);
    const ResultRow mixed_row = run_scenario(default_scenario());
    // alpha = 1/2 gives 2 sqrt(alpha(1-alpha)) = 1: same bound as lambda = 1.
    CHECK(pure_row.i_bound_bits == doctest::Approx(mixed_row.i_bound_bits).epsilon(1e-13));
    CHECK(pure_row.control_value == 0.5);
    CHECK(pure_row.bound_satisfied);

    ScenarioParams definite = default_scenario();
    definite.control = ControlState::pure(1.0);
    const ResultRow definite_row = run_scenario(definite, true);
    CHECK(std::abs(definite_row.i_bound_bits) < 1e-12);
    CHECK(std::abs(definite_row.i_achieved_bits) < 1e-12);
}

TEST_CASE("fcoh_nats dominates the quadratic floor") {
    for (int k = 0; k <= 20; ++k) {
        ScenarioParams params = default_scenario();
        const double lambda = static_cast<double>(k) / 20.0;
        params.control = ControlState::mixed(lambda);
        const ResultRow row = run_scenario(params);
        CHECK(row.fcoh_nats >= fcoh_floor(lambda, 1.0) - 1e-10);
    }
}

TEST_CASE("matched_lambda_for_alpha pins endpoints and interpolates inside") {
    const ScenarioParams fixed = default_scenario();
    CHECK(matched_lambda_for_alpha(0.0, fixed) == 0.0);
    CHECK(matched_lambda_for_alpha(1.0, fixed) == 0.0);
    CHECK(matched_lambda_for_alpha(0.5, fixed) == 1.0);

    const double lambda = matched_lambda_for_alpha(0.25, fixed);
    CHECK(lambda > 0.0);
    CHECK(lambda < 1.0);
    // The match is exact at s = 1 by construction.
    ScenarioParams pure = fixed;
    pure.control = ControlState::pure(0.25);
    ScenarioParams mixed = fixed;
    mixed.control = ControlState::mixed(lambda);
    CHECK(std::abs(run_scenario(pure).i_achieved_bits -
                   run_scenario(mixed).i_achieved_bits) < 1e-9);
}

TEST_CASE("parse_value_list accepts scalars, lists and ranges") {
    CHECK(parse_value_list("0.5") == std::vector<double>{0.5});
    CHECK(parse_value_list("0,0.25,1") == std::vector<double>{0.0, 0.25, 1.0});

    const std::vector<double> quarter = parse_value_list("0:1:0.25");
    REQUIRE(quarter.size() == 5);
    CHECK(quarter.front() == 0.0);
    CHECK(quarter.back() == 1.0);  // exact endpoint, no drift
    CHECK(quarter[2] == 0.5);

    const std::vector<double> fine = parse_value_list("0:1:0.02");
    REQUIRE(fine.size() == 51);
    CHECK(fine.back() == 1.0);

    CHECK_THROWS(parse_value_list("0:1:0.3"));  // step does not divide the span
    CHECK_THROWS(parse_value_list(""));
    CHECK_THROWS(parse_value_list("abc"));
}

TEST_CASE("parse_config_file reads keys and reports bad lines") {
    const fs::path good = write_text("good.conf",
                                     "# comment\n"
                                     "\n"
                                     "s = 0.5\n"
                                     "lambda = 1\n"
                                     "axis = 0,0,1\n");
    const auto config = parse_config_file(good.string());
    CHECK(config.at("s") == "0.5");
    CHECK(config.at("lambda") == "1");
    CHECK(config.at("axis") == "0,0,1");

    const fs::path bad = write_text("bad.conf", "s = 0.5\nnonsense line\n");
    try {
        parse_config_file(bad.string());
        FAIL("expected a parse error");
    } catch (const std::exception& e) {
        CHECK(std::string(e.what()).find("2") != std::string::npos);
    }
    CHECK_THROWS(parse_config_file((scratch_dir() / "missing.conf").string()));
}

TEST_CASE("scenario_from_config builds and validates parameter sets") {
    const fs::path path = write_text("scenario.conf",
                                     "s = 0.6\n"
                                     "lambda = 0.8\n"
                                     "q = 0.9\n"
                                     "p = 0.3\n"
                                     "axis = 0,0,2\n"
                                     "rho_a0 = 0.5,0, 0.5,0, 0.5,0, 0.5,0\n"
                                     "rho_a1 = 1,0, 0,0, 0,0, 0,0\n");
    const ScenarioParams params = scenario_from_config(parse_config_file(path.string()));
    CHECK(params.s == 0.6);
    CHECK(params.control.kind == ControlState::Kind::mixed_lambda);
    CHECK(params.control.value == 0.8);
    CHECK(params.q == 0.9);
    CHECK(params.p == 0.3);
    CHECK(params.axis[2] == doctest::Approx(1.0));  // normalized
    CHECK(std::abs(params.rho_a0(0, 1) - Complex(0.5, 0)) < 1e-15);
    CHECK(std::abs(params.rho_a1(0, 0) - Complex(1, 0)) < 1e-15);

    const fs::path pure = write_text("pure.conf", "alpha = 0.3\n");
    CHECK(scenario_from_config(parse_config_file(pure.string())).control.kind ==
          ControlState::Kind::pure_alpha);

    const fs::path clash = write_text("clash.conf", "lambda = 1\nalpha = 0.5\n");
    CHECK_THROWS(scenario_from_config(parse_config_file(clash.string())));

    const fs::path bad_rho = write_text("bad_rho.conf", "rho_a0 = 1,0, 0,0\n");
    CHECK_THROWS(scenario_from_config(parse_config_file(bad_rho.string())));
}

TEST_CASE("grid_from_config expands value lists") {
    const fs::path path = write_text("grid.conf",
                                     "s = 0:1:0.5\n"
                                     "lambda = 0,1\n"
                                     "q = 0.5\n"
                                     "p = 0.5\n");
    const SweepGrid grid = grid_from_config(parse_config_file(path.string()));
    CHECK(grid.s_values.size() == 3);
    CHECK(grid.control_values.size() == 2);
    CHECK(grid.q_values.size() == 1);
    CHECK(grid.p_values.size() == 1);
    CHECK(grid.control_kind == ControlState::Kind::mixed_lambda);
}

TEST_CASE("csv output format is stable") {
    CHECK(csv_header() ==
          "s,lambda,q,p,i_in_bits,i_achieved_bits,i_bound_bits,i_ac_bits,"
          "fcoh_nats,bound_satisfied");
    ResultRow row;
    row.s = 0.5;
    row.control_value = 1.0;
    row.q = 0.75;
    row.p = 0.25;
    row.i_in_bits = 1.0;
    row.i_achieved_bits = 0.123456789012345;
    row.i_bound_bits = 0.25;
    row.i_ac_bits = 0.0;
    row.fcoh_nats = 0.5;
    row.bound_satisfied = true;
    CHECK(format_csv_row(row) ==
          "0.5,1,0.75,0.25,1,0.123456789012,0.25,0,0.5,true");
}

TEST_CASE("run_sweep writes the grid in row-major order for any job count") {
    SweepGrid grid;
    grid.s_values = {0.5, 1.0};
    grid.control_values = {0.0, 1.0};
    grid.q_values = {1.0};
    grid.p_values = {0.5};
    grid.fixed = default_scenario();

    const fs::path serial = scratch_dir() / "sweep_serial.csv";
    const fs::path parallel = scratch_dir() / "sweep_parallel.csv";
    run_sweep(grid, serial.string(), 1);
    run_sweep(grid, parallel.string(), 3);

    const std::vector<std::string> lines = read_lines(serial);
    REQUIRE(lines.size() == 5);
    CHECK(lines[0] == csv_header());
    CHECK(read_lines(parallel) == lines);

    // Row 1 is (s=0.5, lambda=0): matches a direct scenario evaluation.
    ScenarioParams params = default_scenario();
    params.s = 0.5;
    params.control = ControlState::mixed(0.0);
    CHECK(lines[1] == format_csv_row(run_scenario(params)));
    // Last row is (s=1, lambda=1).
    CHECK(lines[4] == format_csv_row(run_scenario(default_scenario())));
}

TEST_CASE("write_figure emits the three documented data sets") {
    const fs::path dir = scratch_dir() / "figures";
    write_figure("fig2", dir.string());
    const std::vector<std::string> fig2 = read_lines(dir / "fig2.csv");
    CHECK(fig2.size() == 1 + 51 * 4);
    CHECK(fig2[0] == "s,lambda,q,i_bound_bits,i_achieved_bits");

    write_figure("figA1", dir.string());
    const std::vector<std::string> figa1 = read_lines(dir / "figA1.csv");
    CHECK(figa1.size() == 1 + 51);
    CHECK(figa1[0] == "s,i_achieved_bits,i_bound_bits");
    // The mismatched channel pair must overshoot the bound somewhere.
    bool violated = false;
    for (std::size_t i = 1; i < figa1.size(); ++i) {
        std::stringstream ss(figa1[i]);
        std::string s_tok, ach_tok, bound_tok;
        std::getline(ss, s_tok, ',');
        std::getline(ss, ach_tok, ',');
        std::getline(ss, bound_tok, ',');
        if (std::stod(ach_tok) > std::stod(bound_tok) + 0.01) violated = true;
    }
    CHECK(violated);

    write_figure("figA2", dir.string());
    const std::vector<std::string> figa2 = read_lines(dir / "figA2.csv");
    CHECK(figa2.size() == 1 + 12 * 21);
    CHECK(figa2[0] == "s,alpha,lambda,i_pure_bits,i_mixed_bits");

    CHECK_THROWS(write_figure("fig9", dir.string()));
}

TEST_CASE("verify runs named residual checks") {
    std::stringstream out;
    const int ok = verify("matcore", std::nullopt, out);
    CHECK(ok == 0);
    CHECK(out.str().find("PASS") != std::string::npos);
    CHECK(out.str().find("FAIL") == std::string::npos);

    std::stringstream none;
    CHECK(verify("zzz-no-such-check", std::nullopt, none) == 1);

    // An absurdly tight tolerance forces failures without touching the library.
    std::stringstream tight;
    CHECK(verify("matcore-eigh", 1e-300, tight) == 1);
    CHECK(tight.str().find("FAIL") != std::string::npos);
}

TEST_SUITE_END();
