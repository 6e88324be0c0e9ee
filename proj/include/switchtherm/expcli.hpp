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

#pragma once

#include "switchtherm/infobound.hpp"

#include <iosfwd>
#include <map>
#include <optional>
#include <string>

namespace switchtherm {

struct ResultRow {
    double s = 0.0;
    double control_value = 0.0;  // lambda for mixed controls, alpha for pure
    double q = 1.0;
    double p = 0.5;
    double i_in_bits = 0.0;
    double i_achieved_bits = 0.0;
    double i_bound_bits = 0.0;
    double i_ac_bits = 0.0;
    double fcoh_nats = 0.0;
    bool bound_satisfied = false;
};

struct SweepGrid {
    std::vector<double> s_values;
    std::vector<double> control_values;
    ControlState::Kind control_kind = ControlState::Kind::mixed_lambda;
    std::vector<double> q_values;
    std::vector<double> p_values;
    ScenarioParams fixed;  // rho_a0, rho_a1, axis
};

// Evaluates one scenario end to end. check_paths additionally demands that
// the Kraus, dilation and closed-form output states agree within 1e-11.
// Pure controls are scored against the bound at the coherence-matched
// lambda = 2 sqrt(alpha (1 - alpha)).
ResultRow run_scenario(const ScenarioParams& params, bool check_paths = false);

// Full Cartesian product in row-major order (s, control, q, p); rows are
// written in grid order regardless of the parallel schedule.
void run_sweep(const SweepGrid& grid, const std::string& out_path, int jobs = 0);

// Emits <fig_id>.csv into out_dir. fig2: bound and achieved MI over
// (s, lambda, q). figA1: bound violation of the partial-CNOT-switched
// configuration over s. figA2: pure-alpha vs endpoint-matched mixed-lambda
// MI over (s, alpha).
void write_figure(const std::string& fig_id, const std::string& out_dir);

// Mixed-control lambda whose s=1 output MI matches the pure-control MI at
// alpha; pinned exactly to 0 at alpha in {0,1} and 1 at alpha = 1/2.
double matched_lambda_for_alpha(double alpha, const ScenarioParams& fixed);

// Runs the named residual checks (all when `only` is empty, else substring
// filtered), printing one line per check. Returns 0 iff all selected pass.
int verify(const std::string& only, std::optional<double> tol_override, std::ostream& out);

// key = value lines; full-line # comments and blank lines are skipped.
std::map<std::string, std::string> parse_config_file(const std::string& path);
ScenarioParams scenario_from_config(const std::map<std::string, std::string>& config);
SweepGrid grid_from_config(const std::map<std::string, std::string>& config);

// "x" -> {x}; "a,b,c" -> {a,b,c}; "start:stop:step" -> inclusive range with
// exact endpoints.
std::vector<double> parse_value_list(const std::string& text);

std::string csv_header();
std::string format_csv_row(const ResultRow& row);

}  // namespace switchtherm
