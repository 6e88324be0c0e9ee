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

#include <CLI11.hpp>

#include <iostream>
#include <optional>

int main(int argc, char** argv) {
    CLI::App app{"Thermalizing-collision quantum switch simulator"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_path;
    std::string fig_id;
    std::string only;
    int jobs = 0;
    double s_flag = 0.0;
    double lambda_flag = 0.0;
    double q_flag = 0.0;
    double p_flag = 0.0;
    double tol_flag = 0.0;

    CLI::App* run = app.add_subcommand("run", "Evaluate one scenario and print a CSV row");
    run->add_option("--config", config_path, "Scenario config file")->required();
    CLI::Option* opt_s = run->add_option("--s", s_flag, "Override thermalization strength");
    CLI::Option* opt_lambda =
        run->add_option("--lambda", lambda_flag, "Override mixed-control weight");
    CLI::Option* opt_q = run->add_option("--q", q_flag, "Override bath ground population");
    CLI::Option* opt_p = run->add_option("--p", p_flag, "Override pointer weight");

    CLI::App* sweep = app.add_subcommand("sweep", "Evaluate a parameter grid into a CSV file");
    sweep->add_option("--config", config_path, "Grid config file")->required();
    sweep->add_option("--out", out_path, "Output CSV path")->required();
    sweep->add_option("--jobs", jobs, "Worker thread count (default: hardware)");

    CLI::App* figure = app.add_subcommand("figure", "Emit the data behind a named figure");
    figure->add_option("fig_id", fig_id, "One of fig2, figA1, figA2")->required();
    figure->add_option("--out", out_path, "Output directory")->required();

    CLI::App* verify_cmd = app.add_subcommand("verify", "Run the numerical check suite");
    verify_cmd->add_option("--only", only, "Substring filter on check names");
    CLI::Option* opt_tol =
        verify_cmd->add_option("--tol", tol_flag, "Override every check tolerance");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) {
            switchtherm::ScenarioParams params =
                switchtherm::scenario_from_config(switchtherm::parse_config_file(config_path));
            if (opt_s->count() > 0) params.s = s_flag;
            if (opt_lambda->count() > 0)
                params.control = switchtherm::ControlState::mixed(lambda_flag);
            if (opt_q->count() > 0) params.q = q_flag;
            if (opt_p->count() > 0) params.p = p_flag;
            const switchtherm::ResultRow row = switchtherm::run_scenario(params);
            std::cout << switchtherm::csv_header() << '\n'
                      << switchtherm::format_csv_row(row) << '\n';
            return 0;
        }
        if (sweep->parsed()) {
            const switchtherm::SweepGrid grid =
                switchtherm::grid_from_config(switchtherm::parse_config_file(config_path));
            switchtherm::run_sweep(grid, out_path, jobs);
            return 0;
        }
        if (figure->parsed()) {
            switchtherm::write_figure(fig_id, out_path);
            return 0;
        }
        if (verify_cmd->parsed()) {
            std::optional<double> tol_override;
            if (opt_tol->count() > 0) tol_override = tol_flag;
            return switchtherm::verify(only, tol_override, std::cout);
        }
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << '\n';
        return 1;
    }
    return 1;
}
