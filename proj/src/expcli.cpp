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

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace switchtherm {

namespace {

constexpr double kPathTol = 1e-11;
constexpr double kBoundSlack = 1e-9;

std::string format_double(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return buf;
}

std::string trim(const std::string& text) {
    const auto begin = text.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    const auto end = text.find_last_not_of(" \t\r\n");
    return text.substr(begin, end - begin + 1);
}

double parse_scalar(const std::string& text, const std::string& key) {
    const std::vector<double> values = parse_value_list(text);
    if (values.size() != 1)
        throw std::invalid_argument("key '" + key + "' expects a single value");
    return values.front();
}

double parse_double(const std::string& text) {
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(text, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("not a number: '" + text + "'");
    }
    if (trim(text.substr(used)).size() != 0)
        throw std::invalid_argument("not a number: '" + text + "'");
    return value;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, sep)) out.push_back(item);
    if (!text.empty() && text.back() == sep) out.push_back("");
    return out;
}

ComplexMatrix parse_qubit_matrix(const std::string& text, const std::string& key) {
    const std::vector<std::string> parts = split(text, ',');
    if (parts.size() != 8)
        throw std::invalid_argument("key '" + key +
                                    "' expects 4 re,im pairs (8 numbers, row-major)");
    ComplexMatrix m(2, 2);
    for (int k = 0; k < 4; ++k)
        m(k / 2, k % 2) = Complex(parse_double(trim(parts[2 * k])),
                                  parse_double(trim(parts[2 * k + 1])));
    validate_density(m);
    return m;
}

std::array<double, 3> parse_axis(const std::string& text) {
    const std::vector<std::string> parts = split(text, ',');
    if (parts.size() != 3) throw std::invalid_argument("key 'axis' expects 3 numbers");
    std::array<double, 3> axis{};
    for (int k = 0; k < 3; ++k) axis[k] = parse_double(trim(parts[k]));
    const double norm =
        std::sqrt(axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2]);
    if (norm <= 0.0) throw std::invalid_argument("axis must be nonzero");
    for (double& component : axis) component /= norm;
    return axis;
}

void check_known_keys(const std::map<std::string, std::string>& config) {
    static const std::vector<std::string> known = {"s",    "lambda", "alpha",  "q",
                                                   "p",    "axis",   "rho_a0", "rho_a1"};
    for (const auto& [key, value] : config) {
        if (std::find(known.begin(), known.end(), key) == known.end())
            throw std::invalid_argument("unknown config key '" + key + "'");
    }
}

double effective_lambda(const ControlState& control) {
    if (control.kind == ControlState::Kind::mixed_lambda) return control.value;
    return 2.0 * std::sqrt(control.value * (1.0 - control.value));
}

}  // namespace

ResultRow run_scenario(const ScenarioParams& params, bool check_paths) {
    const DensityMatrix out = apply_switch(params);
    if (check_paths) {
        const double d_dilation = max_abs_diff(out.matrix, simulate_full(params).matrix);
        const double d_closed =
            max_abs_diff(out.matrix, closed_form_final_state(params).matrix);
        if (d_dilation > kPathTol || d_closed > kPathTol)
            throw std::runtime_error("simulation paths disagree: dilation " +
                                     format_double(d_dilation) + ", closed form " +
                                     format_double(d_closed));
    }
    ResultRow row;
    row.s = params.s;
    row.control_value = params.control.value;
    row.q = params.q;
    row.p = params.p;
    row.i_in_bits =
        mutual_information(input_am_state(params), {"A"}, {"M"}, EntropyBase::two);
    row.i_achieved_bits = mutual_information(out, {"A"}, {"C", "M"}, EntropyBase::two);
    row.i_ac_bits = mutual_information(out, {"A"}, {"C"}, EntropyBase::two);
    row.i_bound_bits =
        information_bound(params.s, effective_lambda(params.control), params.q, params.p,
                          params.rho_a0, params.rho_a1, EntropyBase::two)
            .bound_value;
    const Hamiltonian h_c = make_hamiltonian(-pauli_z(), "C");
    row.fcoh_nats = free_energy_of_coherence(params.control.matrix(), h_c, 1.0);
    row.bound_satisfied = row.i_achieved_bits <= row.i_bound_bits + kBoundSlack;
    return row;
}

void run_sweep(const SweepGrid& grid, const std::string& out_path, int jobs) {
    if (grid.s_values.empty() || grid.control_values.empty() || grid.q_values.empty() ||
        grid.p_values.empty())
        throw std::invalid_argument("sweep grid must have at least one value per axis");
    std::vector<ScenarioParams> points;
    points.reserve(grid.s_values.size() * grid.control_values.size() *
                   grid.q_values.size() * grid.p_values.size());
    for (double s : grid.s_values)
        for (double control : grid.control_values)
            for (double q : grid.q_values)
                for (double p : grid.p_values) {
                    ScenarioParams params = grid.fixed;
                    params.s = s;
                    params.q = q;
                    params.p = p;
                    params.control = grid.control_kind == ControlState::Kind::mixed_lambda
                                         ? ControlState::mixed(control)
                                         : ControlState::pure(control);
                    points.push_back(params);
                }
    std::vector<ResultRow> rows(points.size());
    int workers = jobs > 0 ? jobs
                           : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    workers = std::min<int>(workers, static_cast<int>(points.size()));
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    const auto worker = [&] {
        for (;;) {
            const std::size_t index = next.fetch_add(1);
            if (index >= points.size()) return;
            try {
                rows[index] = run_scenario(points[index]);
            } catch (...) {
                const std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                return;
            }
        }
    };
    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + out_path + "' for writing");
    out << csv_header() << '\n';
    for (const ResultRow& row : rows) out << format_csv_row(row) << '\n';
}

double matched_lambda_for_alpha(double alpha, const ScenarioParams& fixed) {
    if (!(alpha >= 0.0 && alpha <= 1.0))
        throw std::invalid_argument("amplitude weight must be in [0, 1]");
    if (alpha == 0.0 || alpha == 1.0) return 0.0;
    if (alpha == 0.5) return 1.0;
    const auto mi_at = [&fixed](const ControlState& control) {
        ScenarioParams params = fixed;
        params.s = 1.0;
        params.control = control;
        return mutual_information(apply_switch(params), {"A"}, {"C", "M"});
    };
    const double target = mi_at(ControlState::pure(alpha));
    double lo = 0.0;
    double hi = 1.0;
    for (int iter = 0; iter < 200 && hi - lo > 1e-13; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (mi_at(ControlState::mixed(mid)) < target)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

void write_figure(const std::string& fig_id, const std::string& out_dir) {
    namespace fs = std::filesystem;
    fs::create_directories(out_dir);
    const fs::path path = fs::path(out_dir) / (fig_id + ".csv");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    if (fig_id == "fig2") {
        out << "s,lambda,q,i_bound_bits,i_achieved_bits\n";
        for (int k = 0; k <= 50; ++k) {
            const double s = static_cast<double>(k) / 50.0;
            for (double lambda : {0.0, 1.0})
                for (double q : {0.5, 1.0}) {
                    ScenarioParams params = default_scenario();
                    params.s = s;
                    params.q = q;
                    params.control = ControlState::mixed(lambda);
                    const ResultRow row = run_scenario(params);
                    out << format_double(s) << ',' << format_double(lambda) << ','
                        << format_double(q) << ',' << format_double(row.i_bound_bits) << ','
                        << format_double(row.i_achieved_bits) << '\n';
                }
        }
    } else if (fig_id == "figA1") {
        out << "s,i_achieved_bits,i_bound_bits\n";
        const ScenarioParams base = default_scenario();
        const ComplexMatrix sigma_c = ControlState::mixed(1.0).matrix();
        ScenarioParams in_params = base;
        in_params.q = 0.5;
        const DensityMatrix rho_in = input_am_state(in_params);
        for (int k = 0; k <= 50; ++k) {
            const double s = static_cast<double>(k) / 50.0;
            const KrausChannel thermal = thermal_qubit_channel(s, 0.5);
            const KrausChannel flip = partial_cnot_channel(s);
            const DensityMatrix fin = apply_switch_channels(sigma_c, thermal, flip, rho_in);
            const double achieved =
                mutual_information(fin, {"A"}, {"C", "M"}, EntropyBase::two);
            const double bound = information_bound(s, 1.0, 0.5, base.p, base.rho_a0,
                                                   base.rho_a1, EntropyBase::two)
                                     .bound_value;
            out << format_double(s) << ',' << format_double(achieved) << ','
                << format_double(bound) << '\n';
        }
    } else if (fig_id == "figA2") {
        out << "s,alpha,lambda,i_pure_bits,i_mixed_bits\n";
        ScenarioParams fixed = default_scenario();
        fixed.q = 1.0;
        std::vector<double> alphas;
        for (int k = 0; k <= 10; ++k) alphas.push_back(static_cast<double>(k) / 20.0);
        alphas.push_back(1.0);
        for (double alpha : alphas) {
            const double lambda = matched_lambda_for_alpha(alpha, fixed);
            for (int k = 0; k <= 20; ++k) {
                const double s = static_cast<double>(k) / 20.0;
                ScenarioParams pure = fixed;
                pure.s = s;
                pure.control = ControlState::pure(alpha);
                ScenarioParams mixed = fixed;
                mixed.s = s;
                mixed.control = ControlState::mixed(lambda);
                const double i_pure = mutual_information(apply_switch(pure), {"A"},
                                                         {"C", "M"}, EntropyBase::two);
                const double i_mixed = mutual_information(apply_switch(mixed), {"A"},
                                                          {"C", "M"}, EntropyBase::two);
                out << format_double(s) << ',' << format_double(alpha) << ','
                    << format_double(lambda) << ',' << format_double(i_pure) << ','
                    << format_double(i_mixed) << '\n';
            }
        }
    } else {
        throw std::invalid_argument("unknown figure id '" + fig_id +
                                    "' (expected fig2, figA1 or figA2)");
    }
}

std::map<std::string, std::string> parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file '" + path + "'");
    std::map<std::string, std::string> config;
    std::string line;
    int line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped.front() == '#') continue;
        const auto eq = stripped.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(line_number) +
                                        " is not 'key = value': " + stripped);
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));
        if (key.empty() || value.empty())
            throw std::invalid_argument("config line " + std::to_string(line_number) +
                                        " has an empty key or value");
        config[key] = value;
    }
    return config;
}

ScenarioParams scenario_from_config(const std::map<std::string, std::string>& config) {
    check_known_keys(config);
    if (config.count("lambda") != 0 && config.count("alpha") != 0)
        throw std::invalid_argument("config sets both lambda and alpha");
    ScenarioParams params = default_scenario();
    if (const auto it = config.find("s"); it != config.end())
        params.s = parse_scalar(it->second, "s");
    if (const auto it = config.find("q"); it != config.end())
        params.q = parse_scalar(it->second, "q");
    if (const auto it = config.find("p"); it != config.end())
        params.p = parse_scalar(it->second, "p");
    if (const auto it = config.find("lambda"); it != config.end())
        params.control = ControlState::mixed(parse_scalar(it->second, "lambda"));
    if (const auto it = config.find("alpha"); it != config.end())
        params.control = ControlState::pure(parse_scalar(it->second, "alpha"));
    if (const auto it = config.find("axis"); it != config.end())
        params.axis = parse_axis(it->second);
    if (const auto it = config.find("rho_a0"); it != config.end())
        params.rho_a0 = parse_qubit_matrix(it->second, "rho_a0");
    if (const auto it = config.find("rho_a1"); it != config.end())
        params.rho_a1 = parse_qubit_matrix(it->second, "rho_a1");
    return params;
}

SweepGrid grid_from_config(const std::map<std::string, std::string>& config) {
    check_known_keys(config);
    if (config.count("lambda") != 0 && config.count("alpha") != 0)
        throw std::invalid_argument("config sets both lambda and alpha");
    SweepGrid grid;
    grid.fixed = default_scenario();
    grid.s_values = {grid.fixed.s};
    grid.control_values = {grid.fixed.control.value};
    grid.q_values = {grid.fixed.q};
    grid.p_values = {grid.fixed.p};
    if (const auto it = config.find("s"); it != config.end())
        grid.s_values = parse_value_list(it->second);
    if (const auto it = config.find("q"); it != config.end())
        grid.q_values = parse_value_list(it->second);
    if (const auto it = config.find("p"); it != config.end())
        grid.p_values = parse_value_list(it->second);
    if (const auto it = config.find("lambda"); it != config.end()) {
        grid.control_values = parse_value_list(it->second);
        grid.control_kind = ControlState::Kind::mixed_lambda;
    }
    if (const auto it = config.find("alpha"); it != config.end()) {
        grid.control_values = parse_value_list(it->second);
        grid.control_kind = ControlState::Kind::pure_alpha;
    }
    if (const auto it = config.find("axis"); it != config.end())
        grid.fixed.axis = parse_axis(it->second);
    if (const auto it = config.find("rho_a0"); it != config.end())
        grid.fixed.rho_a0 = parse_qubit_matrix(it->second, "rho_a0");
    if (const auto it = config.find("rho_a1"); it != config.end())
        grid.fixed.rho_a1 = parse_qubit_matrix(it->second, "rho_a1");
    return grid;
}

std::vector<double> parse_value_list(const std::string& text) {
    const std::string stripped = trim(text);
    if (stripped.empty()) throw std::invalid_argument("empty value");
    if (stripped.find(':') != std::string::npos) {
        const std::vector<std::string> parts = split(stripped, ':');
        if (parts.size() != 3)
            throw std::invalid_argument("range must be start:stop:step: '" + stripped + "'");
        const double start = parse_double(trim(parts[0]));
        const double stop = parse_double(trim(parts[1]));
        const double step = parse_double(trim(parts[2]));
        if (!(step > 0.0)) throw std::invalid_argument("range step must be positive");
        if (stop < start) throw std::invalid_argument("range stop must be >= start");
        if (stop == start) return {start};
        const long long n = std::llround((stop - start) / step);
        if (n < 1 || std::abs(static_cast<double>(n) * step - (stop - start)) > 1e-9)
            throw std::invalid_argument("range step does not divide the span: '" + stripped +
                                        "'");
        std::vector<double> values;
        values.reserve(static_cast<std::size_t>(n) + 1);
        for (long long k = 0; k <= n; ++k)
            values.push_back(start + (stop - start) * static_cast<double>(k) /
                                         static_cast<double>(n));
        return values;
    }
    if (stripped.find(',') != std::string::npos) {
        std::vector<double> values;
        for (const std::string& item : split(stripped, ','))
            values.push_back(parse_double(trim(item)));
        return values;
    }
    return {parse_double(stripped)};
}

std::string csv_header() {
    return "s,lambda,q,p,i_in_bits,i_achieved_bits,i_bound_bits,i_ac_bits,fcoh_nats,"
           "bound_satisfied";
}

std::string format_csv_row(const ResultRow& row) {
    std::string out;
    out += format_double(row.s);
    out += ',';
    out += format_double(row.control_value);
    out += ',';
    out += format_double(row.q);
    out += ',';
    out += format_double(row.p);
    out += ',';
    out += format_double(row.i_in_bits);
    out += ',';
    out += format_double(row.i_achieved_bits);
    out += ',';
    out += format_double(row.i_bound_bits);
    out += ',';
    out += format_double(row.i_ac_bits);
    out += ',';
    out += format_double(row.fcoh_nats);
    out += ',';
    out += row.bound_satisfied ? "true" : "false";
    return out;
}

}  // namespace switchtherm
