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
#include <cstdio>
#include <functional>
#include <ostream>

namespace switchtherm {

namespace {

const std::vector<double> kSGrid{0.0, 0.25, 0.5, 0.75, 1.0};
const std::vector<double> kQGrid{0.5, 0.75, 1.0};
const std::vector<double> kLambdaGrid{0.0, 0.5, 1.0};
const std::vector<double> kPGrid{0.25, 0.5};

struct Check {
    std::string name;
    double tol;
    std::function<double()> residual;
};

ScenarioParams grid_scenario(double s, double q, double lambda, double p) {
    ScenarioParams params = default_scenario();
    params.s = s;
    params.q = q;
    params.p = p;
    params.control = ControlState::mixed(lambda);
    return params;
}

template <typename Fn>
double max_over_grid(Fn&& fn) {
    double worst = 0.0;
    for (double s : kSGrid)
        for (double q : kQGrid)
            for (double lambda : kLambdaGrid)
                for (double p : kPGrid)
                    worst = std::max(worst, fn(grid_scenario(s, q, lambda, p)));
    return worst;
}

ComplexMatrix lower_triangle_test_matrix() {
    ComplexMatrix h(3, 3);
    h << Complex(1.0, 0.0), Complex(0.5, -0.25), Complex(0.0, 0.75),
        Complex(0.5, 0.25), Complex(-2.0, 0.0), Complex(0.1, 0.0),
        Complex(0.0, -0.75), Complex(0.1, 0.0), Complex(0.5, 0.0);
    return h;
}

double check_matcore_kron() {
    const ComplexMatrix a = pauli_x();
    const ComplexMatrix b = pauli_z();
    const ComplexMatrix ab = kron(a, b);
    double worst = 0.0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l)
                    worst = std::max(worst, std::abs(ab(2 * i + k, 2 * j + l) -
                                                     a(i, j) * b(k, l)));
    const ComplexMatrix left = kron(kron(a, b), identity(2));
    const ComplexMatrix right = kron(a, kron(b, identity(2)));
    return std::max(worst, max_abs_diff(left, right));
}

double check_matcore_partial_trace() {
    std::mt19937_64 rng(default_seed() + 1);
    double worst = 0.0;
    for (int trial = 0; trial < 10; ++trial) {
        const ComplexMatrix a = random_density(2, rng);
        const ComplexMatrix b = random_density(3, rng);
        const ComplexMatrix c = random_density(2, rng);
        const FactorLayout layout = make_layout({2, 3, 2}, {"X", "Y", "Z"});
        const ComplexMatrix joint = kron(a, kron(b, c));
        worst = std::max(worst, max_abs_diff(partial_trace(joint, layout, {"Y"}), b));
        worst = std::max(worst,
                         max_abs_diff(partial_trace(joint, layout, {"X", "Z"}), kron(a, c)));
        const Complex total = partial_trace(joint, layout, {"X"}).trace();
        worst = std::max(worst, std::abs(total - Complex(1.0, 0.0)));
    }
    return worst;
}

double check_matcore_eigh() {
    const ComplexMatrix h = lower_triangle_test_matrix();
    const EighResult es = eigh(h);
    const ComplexMatrix rebuilt =
        es.eigenvectors * es.eigenvalues.asDiagonal() * es.eigenvectors.adjoint();
    double worst = max_abs_diff(rebuilt, h);
    for (int k = 0; k + 1 < es.eigenvalues.size(); ++k)
        worst = std::max(worst, std::max(0.0, es.eigenvalues(k + 1) - es.eigenvalues(k)));
    worst = std::max(worst, max_abs_diff(es.eigenvectors * es.eigenvectors.adjoint(),
                                         identity(3)));
    return worst;
}

double check_states_thermal() {
    const Hamiltonian h = make_hamiltonian(-pauli_z(), "M");
    double worst = 0.0;
    for (double beta : {0.0, 0.5, 1.0, 3.0}) {
        const double q = q_from_beta(beta);
        ComplexMatrix expected = ComplexMatrix::Zero(2, 2);
        expected(0, 0) = q;
        expected(1, 1) = 1.0 - q;
        worst = std::max(worst, max_abs_diff(thermal_state(h, beta).matrix, expected));
        worst = std::max(worst, std::abs(beta_from_q(q) - beta));
    }
    const double inf = std::numeric_limits<double>::infinity();
    worst = std::max(worst, max_abs_diff(thermal_state(h, inf).matrix,
                                         projector(basis_ket(0))));
    return worst;
}

double check_states_entropy() {
    const ComplexMatrix half = 0.5 * identity(2);
    double worst = std::abs(von_neumann_entropy(half) - std::log(2.0));
    worst = std::max(worst,
                     std::abs(von_neumann_entropy(half, EntropyBase::two) - 1.0));
    worst = std::max(worst, std::abs(von_neumann_entropy(projector(basis_ket(0)))));
    // support violation must be flagged, not silently finite
    const RelativeEntropyResult rel =
        relative_entropy(half, projector(basis_ket(0)));
    if (!rel.support_violation || !std::isinf(rel.value)) worst = std::max(worst, 1.0);
    const RelativeEntropyResult same = relative_entropy(half, half);
    worst = std::max(worst, std::abs(same.value));
    return worst;
}

double check_states_dephase() {
    std::mt19937_64 rng(default_seed() + 2);
    const Hamiltonian h = make_hamiltonian(-pauli_z(), "M");
    double worst = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        const ComplexMatrix rho = random_density(2, rng);
        const ComplexMatrix diag = dephase(rho, h);
        worst = std::max(worst, std::abs(diag(0, 1)));
        worst = std::max(worst, std::abs(diag(1, 0)));
        worst = std::max(worst, std::abs((diag - rho).trace()));
        worst = std::max(worst, std::max(0.0, -free_energy_of_coherence(rho, h, 1.0)));
    }
    return worst;
}

double check_channels_cptp_gibbs() {
    std::mt19937_64 rng(default_seed() + 3);
    double worst = 0.0;
    for (double s : kSGrid)
        for (double q : kQGrid) {
            const KrausChannel ch = thermal_qubit_channel(s, q);
            const CptpReport cptp = is_cptp(ch);
            worst = std::max(worst, cptp.completeness_residual);
            worst = std::max(worst, std::max(0.0, -cptp.choi_min_eigenvalue));
            ComplexMatrix tau = ComplexMatrix::Zero(2, 2);
            tau(0, 0) = q;
            tau(1, 1) = 1.0 - q;
            const GibbsReport gibbs = is_gibbs_preserving(ch, tau, rng);
            worst = std::max(worst, gibbs.fixed_point_residual);
            worst = std::max(worst, gibbs.worst_monotonicity_violation);
        }
    return worst;
}

double check_channels_kraus_extract() {
    double worst = 0.0;
    // entrywise agreement away from degenerate or rank-deficient baths
    for (double s : {0.3, 0.63, 1.0})
        for (double q : {0.75, 0.9}) {
            const CollisionParams collision{std::asin(s), 0.0, {0.0, 0.0, 1.0}};
            ComplexMatrix tau = ComplexMatrix::Zero(2, 2);
            tau(0, 0) = q;
            tau(1, 1) = 1.0 - q;
            const KrausChannel extracted =
                kraus_from_dilation(collision_unitary(collision), tau);
            const KrausChannel printed = thermal_qubit_channel(s, q);
            const std::vector<ComplexMatrix> a = phase_normalize(extracted.kraus_ops);
            const std::vector<ComplexMatrix> b = phase_normalize(printed.kraus_ops);
            if (a.size() != b.size()) return 1.0;
            for (std::size_t k = 0; k < a.size(); ++k)
                worst = std::max(worst, max_abs_diff(a[k], b[k]));
        }
    // channel-level agreement everywhere, including q = 1/2 and q = 1
    for (double s : kSGrid)
        for (double q : kQGrid) {
            const CollisionParams collision{std::asin(s), 0.0, {0.0, 0.0, 1.0}};
            ComplexMatrix tau = ComplexMatrix::Zero(2, 2);
            tau(0, 0) = q;
            tau(1, 1) = 1.0 - q;
            const KrausChannel extracted =
                kraus_from_dilation(collision_unitary(collision), tau);
            worst = std::max(worst, max_abs_diff(choi_matrix(extracted),
                                                 choi_matrix(thermal_qubit_channel(s, q))));
        }
    return worst;
}

double check_channels_phase_invariance() {
    double worst = 0.0;
    for (double s : {0.0, 0.5, 0.9})
        for (double q : kQGrid) {
            ComplexMatrix tau = ComplexMatrix::Zero(2, 2);
            tau(0, 0) = q;
            tau(1, 1) = 1.0 - q;
            const CollisionParams base{std::asin(s), 0.0, {0.0, 0.0, 1.0}};
            const KrausChannel reference =
                kraus_from_dilation(collision_unitary(base), tau);
            for (double r : {0.0, 0.3, 0.7})
                for (double theta2 : {0.3, 1.1, 2.5}) {
                    ComplexMatrix rho = ComplexMatrix::Zero(2, 2);
                    rho(0, 0) = r;
                    rho(1, 1) = 1.0 - r;
                    const CollisionParams twisted{std::asin(s), theta2, {0.0, 0.0, 1.0}};
                    const KrausChannel ch =
                        kraus_from_dilation(collision_unitary(twisted), tau);
                    worst = std::max(worst, max_abs_diff(apply_channel(ch, rho),
                                                         apply_channel(reference, rho)));
                }
        }
    return worst;
}

double check_channels_second_law() {
    std::mt19937_64 rng(default_seed() + 4);
    double worst = 0.0;
    for (double s : kSGrid)
        for (double q : kQGrid) {
            const KrausChannel ch = thermal_qubit_channel(s, q);
            ComplexMatrix tau = ComplexMatrix::Zero(2, 2);
            tau(0, 0) = q;
            tau(1, 1) = 1.0 - q;
            const GibbsReport report = is_gibbs_preserving(ch, tau, rng, 1000);
            worst = std::max(worst, report.worst_monotonicity_violation);
        }
    return worst;
}

double check_channels_collision_energy() {
    std::mt19937_64 rng(default_seed() + 5);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
    const Hamiltonian h_m = make_hamiltonian(-pauli_z(), "M");
    const Hamiltonian h_e = make_hamiltonian(-pauli_z(), "E");
    double worst = 0.0;
    for (int draw = 0; draw < 100; ++draw) {
        const CollisionParams collision{angle(rng), angle(rng), {0.0, 0.0, 1.0}};
        const EnergyReport report =
            is_energy_conserving(collision_unitary(collision), h_m, h_e);
        worst = std::max(worst, report.residual);
    }
    return worst;
}

double check_switch_triple_path() {
    return max_over_grid([](const ScenarioParams& params) {
        const ComplexMatrix direct = apply_switch(params).matrix;
        const double d1 = max_abs_diff(direct, simulate_full(params).matrix);
        const double d2 = max_abs_diff(direct, closed_form_final_state(params).matrix);
        return std::max(d1, d2);
    });
}

double check_switch_bystander() {
    return max_over_grid([](const ScenarioParams& params) {
        const DensityMatrix fin = apply_switch(params);
        const ComplexMatrix rho_a = partial_trace(fin.matrix, fin.layout, {"A"});
        const ComplexMatrix expected =
            params.p * params.rho_a0 + (1.0 - params.p) * params.rho_a1;
        return max_abs_diff(rho_a, expected);
    });
}

double check_switch_control_marginal() {
    double worst = 0.0;
    for (double s : kSGrid)
        for (double q : kQGrid) {
            ScenarioParams params = grid_scenario(s, q, 0.0, 0.5);
            DensityMatrix fin = apply_switch(params);
            worst = std::max(worst, max_abs_diff(partial_trace(fin.matrix, fin.layout, {"C"}),
                                                 projector(basis_ket(0))));
            params.control = ControlState::pure(0.0);  // control |1><1|
            fin = apply_switch(params);
            worst = std::max(worst, max_abs_diff(partial_trace(fin.matrix, fin.layout, {"C"}),
                                                 projector(basis_ket(1))));
        }
    return worst;
}

double check_switch_dilation_energy() {
    std::mt19937_64 rng(default_seed() + 6);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
    const ComplexMatrix single = -pauli_z();
    const std::vector<int> dims{2, 2, 2, 2};
    ComplexMatrix total = ComplexMatrix::Zero(16, 16);
    for (int factor = 0; factor < 4; ++factor) total += embed(single, {factor}, dims);
    double worst = 0.0;
    for (int draw = 0; draw < 100; ++draw) {
        const CollisionParams collision{angle(rng), angle(rng), {0.0, 0.0, 1.0}};
        const ComplexMatrix u = collision_unitary(collision);
        const EnergyReport report = is_energy_conserving(dilation_unitary_L(u, u), total);
        worst = std::max(worst, report.residual);
    }
    return worst;
}

double check_switch_gibbs_invariance() {
    std::mt19937_64 rng(default_seed() + 7);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double worst = 0.0;
    for (double s : kSGrid)
        for (double q : kQGrid) {
            const KrausChannel ch = thermal_qubit_channel(s, q);
            ComplexMatrix tau = ComplexMatrix::Zero(2, 2);
            tau(0, 0) = q;
            tau(1, 1) = 1.0 - q;
            for (int draw = 0; draw < 20; ++draw) {
                ComplexMatrix sigma_c;
                switch (draw % 4) {
                    case 0:
                        sigma_c = ControlState::mixed(unit(rng)).matrix();
                        break;
                    case 1:
                        sigma_c = ControlState::pure(unit(rng)).matrix();
                        break;
                    case 2:
                        sigma_c = random_density(2, rng);
                        break;
                    default: {
                        // Haar-random pure control
                        const ComplexMatrix g = random_density(2, rng);
                        sigma_c = projector(eigh(g).eigenvectors.col(0));
                        break;
                    }
                }
                const GibbsInvarianceReport report =
                    verify_gibbs_invariance(ch, ch, tau, sigma_c);
                worst = std::max(worst, report.residual);
                if (!report.precondition_ok) worst = std::max(worst, 1.0);
            }
        }
    return worst;
}

double check_switch_pointer_spectrum() {
    const KrausChannel ch = thermal_qubit_channel(1.0, 0.5);
    const ComplexMatrix tau = 0.5 * identity(2);
    const DensityMatrix rho{tau, make_layout({2}, {"M"})};
    const DensityMatrix fin =
        apply_switch_channels(ControlState::mixed(1.0).matrix(), ch, ch, rho);
    const ComplexMatrix pointer = swap_and_trace(fin.matrix);
    const EighResult es = eigh(pointer);
    double worst = std::abs(es.eigenvalues(0) - 5.0 / 8.0);
    worst = std::max(worst, std::abs(es.eigenvalues(1) - 3.0 / 8.0));
    worst = std::max(worst, std::abs(trace_distance(pointer, tau) - 1.0 / 8.0));
    return worst;
}

double check_bound_dominance() {
    return max_over_grid([](const ScenarioParams& params) {
        const ResultRow row = run_scenario(params);
        return std::max(0.0, row.i_achieved_bits - row.i_bound_bits);
    });
}

double check_bound_special_cases() {
    double worst = 0.0;
    for (double s : kSGrid)
        for (double lambda : kLambdaGrid)
            for (double p : kPGrid) {
                const double s4 = s * s * s * s;
                const double c4 = (1.0 - s * s) * (1.0 - s * s);
                const ScenarioParams base = default_scenario();
                const BoundResult infinite =
                    information_bound(s, lambda, 0.5, p, base.rho_a0, base.rho_a1);
                worst = std::max(worst, std::abs(infinite.bound_value -
                                                 (c4 + lambda * s4 / 4.0) * infinite.i_in));
                const BoundResult zero =
                    information_bound(s, lambda, 1.0, p, base.rho_a0, base.rho_a1);
                const double weight = lambda * (1.0 - (1.0 - p) / 2.0 * s4);
                const double expected =
                    (c4 + lambda / 2.0 * s4) * zero.i_in + weight * zero.i_ad0;
                worst = std::max(worst, std::abs(zero.bound_value - expected));
                worst = std::max(worst, std::abs(zero.weight_d0 - weight));
            }
    return worst;
}

double check_bound_on_gap() {
    const ScenarioParams base = default_scenario();
    const BoundResult on = information_bound(1.0, 1.0, 0.5, 0.5, base.rho_a0, base.rho_a1);
    const BoundResult off = information_bound(1.0, 0.0, 0.5, 0.5, base.rho_a0, base.rho_a1);
    return std::abs((on.bound_value - off.bound_value) - on.i_in / 4.0);
}

double check_bound_tight_s0() {
    double worst = 0.0;
    for (double q : kQGrid)
        for (double lambda : kLambdaGrid)
            for (double p : kPGrid) {
                const ResultRow row = run_scenario(grid_scenario(0.0, q, lambda, p));
                worst = std::max(worst, std::abs(row.i_achieved_bits - row.i_bound_bits));
                worst = std::max(worst, std::abs(row.i_achieved_bits - row.i_in_bits));
            }
    return worst;
}

double check_info_chain_rule() {
    return max_over_grid([](const ScenarioParams& params) {
        const DensityMatrix fin = apply_switch(params);
        const double joint = mutual_information(fin, {"A"}, {"C", "M"});
        const double control = mutual_information(fin, {"A"}, {"C"});
        const double conditional =
            conditional_mutual_information(fin, {"A"}, {"M"}, {"C"});
        return std::abs(joint - control - conditional);
    });
}

double check_info_discard_monotone() {
    return max_over_grid([](const ScenarioParams& params) {
        const DensityMatrix fin = apply_switch(params);
        const double joint = mutual_information(fin, {"A"}, {"C", "M"});
        const double message = mutual_information(fin, {"A"}, {"M"});
        return std::max(0.0, message - joint);
    });
}

double check_info_product_mixture() {
    std::mt19937_64 rng(default_seed() + 8);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double worst = 0.0;
    for (int draw = 0; draw < 200; ++draw) {
        const DensityMatrix rho_in{random_density(4, rng), make_layout({2, 2}, {"A", "B"})};
        const ComplexMatrix sigma_b = random_density(2, rng);
        const auto [lhs, rhs] = product_mixture_dpi_check(rho_in, sigma_b, unit(rng));
        worst = std::max(worst, lhs - rhs);
    }
    return worst;
}

double check_fcoh_floor() {
    const Hamiltonian h_c = make_hamiltonian(-pauli_z(), "C");
    double worst = 0.0;
    for (int k = 0; k <= 20; ++k) {
        const double lambda = static_cast<double>(k) / 20.0;
        const double fcoh =
            free_energy_of_coherence(ControlState::mixed(lambda).matrix(), h_c, 1.0);
        worst = std::max(worst, fcoh_floor(lambda, 1.0) - fcoh);
    }
    const double full =
        free_energy_of_coherence(ControlState::mixed(1.0).matrix(), h_c, 1.0);
    return std::max(worst, std::abs(full - std::log(2.0)));
}

double check_violation_witness() {
    const ScenarioParams base = default_scenario();
    ScenarioParams in_params = base;
    in_params.q = 0.5;
    const DensityMatrix rho_in = input_am_state(in_params);
    const ComplexMatrix sigma_c = ControlState::mixed(1.0).matrix();
    double best_violation = 0.0;
    double best_s = 0.0;
    for (int k = 1; k <= 10; ++k) {
        const double s = static_cast<double>(k) / 10.0;
        const KrausChannel thermal = thermal_qubit_channel(s, 0.5);
        const KrausChannel flip = partial_cnot_channel(s);
        const DensityMatrix fin = apply_switch_channels(sigma_c, thermal, flip, rho_in);
        const double achieved = mutual_information(fin, {"A"}, {"C", "M"}, EntropyBase::two);
        const double bound = information_bound(s, 1.0, 0.5, base.p, base.rho_a0,
                                               base.rho_a1, EntropyBase::two)
                                 .bound_value;
        if (achieved - bound > best_violation) {
            best_violation = achieved - bound;
            best_s = s;
        }
    }
    double residual = std::max(0.0, 0.01 - best_violation);
    const Hamiltonian h_z = make_hamiltonian(pauli_z(), "M");
    const EnergyReport energy =
        is_energy_conserving(partial_cnot_dilation(best_s), h_z, h_z);
    if (energy.ok) residual = std::max(residual, 1.0);  // must break the first law
    const KrausChannel flip = partial_cnot_channel(best_s);
    if (!is_cptp(flip).ok) residual = std::max(residual, 1.0);
    if (!is_gibbs_preserving(flip, 0.5 * identity(2)).ok) residual = std::max(residual, 1.0);
    return residual;
}

double check_switch_activation() {
    const double on_cold = run_scenario(grid_scenario(1.0, 1.0, 1.0, 0.5)).i_achieved_bits;
    const double on_hot = run_scenario(grid_scenario(1.0, 0.5, 1.0, 0.5)).i_achieved_bits;
    const double off_cold = run_scenario(grid_scenario(1.0, 1.0, 0.0, 0.5)).i_achieved_bits;
    const double off_hot = run_scenario(grid_scenario(1.0, 0.5, 0.0, 0.5)).i_achieved_bits;
    constexpr double kMargin = 1e-3;
    double residual = std::max(0.0, kMargin - (on_cold - on_hot));
    residual = std::max(residual, std::max(0.0, kMargin - (on_cold - off_cold)));
    residual = std::max(residual, std::max(0.0, kMargin - (on_hot - off_hot)));
    return residual;
}

double check_control_matching_endpoints() {
    ScenarioParams fixed = default_scenario();
    fixed.q = 1.0;
    double worst = 0.0;
    for (int k = 0; k <= 10; ++k) {
        const double s = static_cast<double>(k) / 10.0;
        ScenarioParams mixed_on = fixed;
        mixed_on.s = s;
        mixed_on.control = ControlState::mixed(1.0);
        ScenarioParams mixed_off = fixed;
        mixed_off.s = s;
        mixed_off.control = ControlState::mixed(0.0);
        const double on = run_scenario(mixed_on).i_achieved_bits;
        const double off = run_scenario(mixed_off).i_achieved_bits;
        for (double alpha : {0.5}) {
            ScenarioParams pure = fixed;
            pure.s = s;
            pure.control = ControlState::pure(alpha);
            worst = std::max(worst, std::abs(run_scenario(pure).i_achieved_bits - on));
        }
        for (double alpha : {0.0, 1.0}) {
            ScenarioParams pure = fixed;
            pure.s = s;
            pure.control = ControlState::pure(alpha);
            worst = std::max(worst, std::abs(run_scenario(pure).i_achieved_bits - off));
        }
    }
    return worst;
}

double check_control_matching_gap() {
    ScenarioParams fixed = default_scenario();
    fixed.q = 1.0;
    double worst = 0.0;
    for (int a = 1; a <= 9; ++a) {
        const double alpha = static_cast<double>(a) / 20.0;
        const double lambda = matched_lambda_for_alpha(alpha, fixed);
        for (int k = 0; k <= 20; ++k) {
            const double s = static_cast<double>(k) / 20.0;
            ScenarioParams pure = fixed;
            pure.s = s;
            pure.control = ControlState::pure(alpha);
            ScenarioParams mixed = fixed;
            mixed.s = s;
            mixed.control = ControlState::mixed(lambda);
            worst = std::max(worst, std::abs(run_scenario(pure).i_achieved_bits -
                                             run_scenario(mixed).i_achieved_bits));
        }
    }
    return worst;
}

std::vector<Check> build_checks() {
    return {
        {"matcore-kron", 1e-14, check_matcore_kron},
        {"matcore-partial-trace", 1e-13, check_matcore_partial_trace},
        {"matcore-eigh", 1e-12, check_matcore_eigh},
        {"states-thermal", 1e-12, check_states_thermal},
        {"states-entropy", 1e-12, check_states_entropy},
        {"states-dephase", 1e-12, check_states_dephase},
        {"channels-cptp-gibbs", 1e-9, check_channels_cptp_gibbs},
        {"channels-kraus-extract", 1e-12, check_channels_kraus_extract},
        {"channels-phase-invariance", 1e-12, check_channels_phase_invariance},
        {"channels-second-law", 1e-9, check_channels_second_law},
        {"channels-collision-energy", 1e-10, check_channels_collision_energy},
        {"switch-triple-path", 1e-11, check_switch_triple_path},
        {"switch-bystander", 1e-12, check_switch_bystander},
        {"switch-control-marginal", 1e-12, check_switch_control_marginal},
        {"switch-dilation-energy", 1e-10, check_switch_dilation_energy},
        {"switch-gibbs-invariance", 1e-10, check_switch_gibbs_invariance},
        {"switch-pointer-spectrum", 1e-12, check_switch_pointer_spectrum},
        {"bound-dominance", 1e-9, check_bound_dominance},
        {"bound-special-cases", 1e-12, check_bound_special_cases},
        {"bound-on-gap", 1e-12, check_bound_on_gap},
        {"bound-tight-s0", 1e-9, check_bound_tight_s0},
        {"info-chain-rule", 1e-10, check_info_chain_rule},
        {"info-discard-monotone", 1e-10, check_info_discard_monotone},
        {"info-product-mixture", 1e-10, check_info_product_mixture},
        {"fcoh-floor", 1e-10, check_fcoh_floor},
        {"violation-witness", 1e-12, check_violation_witness},
        {"switch-activation", 1e-12, check_switch_activation},
        {"control-matching-endpoints", 1e-9, check_control_matching_endpoints},
        {"control-matching-gap", 0.05, check_control_matching_gap},
    };
}

}  // namespace

int verify(const std::string& only, std::optional<double> tol_override, std::ostream& out) {
    const std::vector<Check> checks = build_checks();
    int selected = 0;
    int passed = 0;
    for (const Check& check : checks) {
        if (!only.empty() && check.name.find(only) == std::string::npos) continue;
        ++selected;
        const double tol = tol_override.value_or(check.tol);
        double residual = 0.0;
        bool threw = false;
        std::string what;
        try {
            residual = check.residual();
        } catch (const std::exception& err) {
            threw = true;
            what = err.what();
        }
        const bool ok = !threw && residual <= tol;
        if (ok) ++passed;
        char line[160];
        if (threw) {
            std::snprintf(line, sizeof(line), "FAIL  %-28s error: %s", check.name.c_str(),
                          what.c_str());
        } else {
            std::snprintf(line, sizeof(line), "%s  %-28s residual=%.3e  tol=%.0e",
                          ok ? "PASS" : "FAIL", check.name.c_str(), residual, tol);
        }
        out << line << '\n';
    }
    if (selected == 0) {
        out << "verify: no check matches '" << only << "'\n";
        return 1;
    }
    out << "verify: " << passed << "/" << selected << " checks passed\n";
    return passed == selected ? 0 : 1;
}

}  // namespace switchtherm
