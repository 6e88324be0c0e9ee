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

#include "switchtherm/states.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>

#include "doctest.h"

namespace {

using namespace switchtherm;

const double kLn2 = std::log(2.0);

ComplexMatrix plus_state() {
    ComplexMatrix m(2, 2);
    m << 0.5, 0.5, 0.5, 0.5;
    return m;
}

}  // namespace

TEST_SUITE_BEGIN("states");

TEST_CASE("make_density_matrix accepts valid states and rejects invalid ones") {
    CHECK_NOTHROW(make_qubit_state(0.5 * identity(2), "A"));
    CHECK_NOTHROW(make_qubit_state(plus_state(), "A"));

    ComplexMatrix not_herm = 0.5 * identity(2);
    not_herm(0, 1) = Complex(0.1, 0.0);
    CHECK_THROWS_AS(make_qubit_state(not_herm, "A"), std::invalid_argument);

    CHECK_THROWS_AS(make_qubit_state(0.7 * identity(2), "A"), std::invalid_argument);

    ComplexMatrix neg = ComplexMatrix::Zero(2, 2);
    neg(0, 0) = 1.5;
    neg(1, 1) = -0.5;
    CHECK_THROWS_AS(make_qubit_state(neg, "A"), std::invalid_argument);

    // Layout dimension must match the matrix.
    CHECK_THROWS_AS(make_density_matrix(0.5 * identity(2), make_layout({4}, {"A"})),
                    std::invalid_argument);
}

TEST_CASE("reduce marginalizes and relabels consistently") {
    const ComplexMatrix a = projector(basis_ket(0));
    const ComplexMatrix b = plus_state();
    const DensityMatrix joint =
        make_density_matrix(kron(a, b), make_layout({2, 2}, {"A", "B"}));
    const DensityMatrix ra = reduce(joint, {"A"});
    const DensityMatrix rb = reduce(joint, {"B"});
    CHECK(ra.layout.labels == std::vector<std::string>{"A"});
    CHECK(rb.layout.labels == std::vector<std::string>{"B"});
    CHECK(approx_equal(ra.matrix, a, 1e-13));
    CHECK(approx_equal(rb.matrix, b, 1e-13));
}

TEST_CASE("q_from_beta and beta_from_q are mutually inverse") {
    CHECK(q_from_beta(0.0) == doctest::Approx(0.5));
    CHECK(q_from_beta(std::numeric_limits<double>::infinity()) == doctest::Approx(1.0));
    for (double q : {0.5, 0.6, 0.75, 0.9, 0.999}) {
        CHECK(q_from_beta(beta_from_q(q)) == doctest::Approx(q).epsilon(1e-12));
    }
    CHECK(beta_from_q(1.0) == std::numeric_limits<double>::infinity());
    CHECK_THROWS_AS(beta_from_q(0.3), std::domain_error);
    CHECK_THROWS_AS(q_from_beta(-0.1), std::domain_error);
}

TEST_CASE("ThermalSpec keeps one authoritative parameter") {
    const ThermalSpec from_q = ThermalSpec::from_q(0.75);
    CHECK(from_q.q() == 0.75);
    CHECK(from_q.beta() == doctest::Approx(0.5 * std::log(3.0)));

    const ThermalSpec from_beta = ThermalSpec::from_beta(1.0);
    CHECK(from_beta.beta() == 1.0);
    CHECK(from_beta.q() == doctest::Approx(1.0 / (1.0 + std::exp(-2.0))));

    const ThermalSpec cold = ThermalSpec::from_q(1.0);
    CHECK(cold.beta() == std::numeric_limits<double>::infinity());
}

TEST_CASE("thermal_state matches Gibbs populations for the qubit Hamiltonian") {
    const Hamiltonian h = make_hamiltonian(-pauli_z(), "M");
    const double beta = 0.7;
    const DensityMatrix tau = thermal_state(h, beta);
    const double q = q_from_beta(beta);
    CHECK(std::abs(tau.matrix(0, 0) - Complex(q, 0)) < 1e-12);
    CHECK(std::abs(tau.matrix(1, 1) - Complex(1 - q, 0)) < 1e-12);
    CHECK(std::abs(tau.matrix(0, 1)) < 1e-14);

    const DensityMatrix ground = thermal_state(h, std::numeric_limits<double>::infinity());
    CHECK(approx_equal(ground.matrix, projector(basis_ket(0)), 1e-12));
}

TEST_CASE("thermal_state at infinite beta mixes a degenerate ground space") {
    ComplexMatrix hm = ComplexMatrix::Zero(3, 3);
    hm(2, 2) = 5.0;  // two-fold degenerate ground level at 0
    const Hamiltonian h = make_hamiltonian(hm, "T");
    const DensityMatrix rho = thermal_state(h, std::numeric_limits<double>::infinity());
    CHECK(std::abs(rho.matrix(0, 0) - Complex(0.5, 0)) < 1e-12);
    CHECK(std::abs(rho.matrix(1, 1) - Complex(0.5, 0)) < 1e-12);
    CHECK(std::abs(rho.matrix(2, 2)) < 1e-12);
}

TEST_CASE("von_neumann_entropy handles pure, mixed and near-singular states") {
    CHECK(von_neumann_entropy(projector(basis_ket(0))) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(von_neumann_entropy(0.5 * identity(2)) == doctest::Approx(kLn2));
    CHECK(von_neumann_entropy(0.5 * identity(2), EntropyBase::two) == doctest::Approx(1.0));

    ComplexMatrix diag = ComplexMatrix::Zero(2, 2);
    diag(0, 0) = 0.25;
    diag(1, 1) = 0.75;
    const double expected = -(0.25 * std::log(0.25) + 0.75 * std::log(0.75));
    CHECK(von_neumann_entropy(diag) == doctest::Approx(expected).epsilon(1e-12));

    // Tiny negative eigenvalues from roundoff are clipped, genuine ones throw.
    ComplexMatrix slightly_neg = projector(basis_ket(0));
    slightly_neg(1, 1) = -1e-13;
    CHECK_NOTHROW(von_neumann_entropy(slightly_neg));
    ComplexMatrix very_neg = projector(basis_ket(0));
    very_neg(1, 1) = -1e-6;
    CHECK_THROWS_AS(von_neumann_entropy(very_neg), std::invalid_argument);
}

TEST_CASE("trace_distance matches closed forms") {
    CHECK(trace_distance(projector(basis_ket(0)), projector(basis_ket(1))) ==
          doctest::Approx(1.0));
    CHECK(trace_distance(plus_state(), plus_state()) == doctest::Approx(0.0));
    // Qubit diagonal states: half the l1 distance of the populations.
    ComplexMatrix a = ComplexMatrix::Zero(2, 2);
    a(0, 0) = 0.9;
    a(1, 1) = 0.1;
    CHECK(trace_distance(a, 0.5 * identity(2)) == doctest::Approx(0.4));
}

TEST_CASE("relative_entropy detects support violations") {
    const ComplexMatrix pure0 = projector(basis_ket(0));
    const RelativeEntropyResult same = relative_entropy(pure0, pure0);
    CHECK(!same.support_violation);
    CHECK(same.value == doctest::Approx(0.0).epsilon(1e-10));

    const RelativeEntropyResult diverging = relative_entropy(0.5 * identity(2), pure0);
    CHECK(diverging.support_violation);
    CHECK(std::isinf(diverging.value));

    ComplexMatrix p = ComplexMatrix::Zero(2, 2);
    p(0, 0) = 0.75;
    p(1, 1) = 0.25;
    ComplexMatrix q = ComplexMatrix::Zero(2, 2);
    q(0, 0) = 0.5;
    q(1, 1) = 0.5;
    const double expected = 0.75 * std::log(0.75 / 0.5) + 0.25 * std::log(0.25 / 0.5);
    CHECK(relative_entropy(p, q).value == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("free_energy is minimized by the Gibbs state") {
    const Hamiltonian h = make_hamiltonian(-pauli_z(), "M");
    const double beta = 1.3;
    const double kT = 1.0 / beta;
    const DensityMatrix tau = thermal_state(h, beta);
    const double f_tau = free_energy(tau.matrix, h, kT);
    // -kT log Z with Z = e^beta + e^-beta.
    CHECK(f_tau == doctest::Approx(-kT * std::log(2.0 * std::cosh(beta))).epsilon(1e-12));
    std::mt19937_64 rng(23);
    for (int i = 0; i < 25; ++i) {
        CHECK(free_energy(random_density(2, rng), h, kT) >= f_tau - 1e-12);
    }
}

TEST_CASE("dephase kills coherences between distinct energy levels only") {
    const Hamiltonian h = make_hamiltonian(-pauli_z(), "M");
    const ComplexMatrix out = dephase(plus_state(), h);
    CHECK(approx_equal(out, 0.5 * identity(2), 1e-13));

    // Fully degenerate Hamiltonian: single projector, state untouched.
    const Hamiltonian flat = make_hamiltonian(ComplexMatrix::Zero(2, 2), "M");
    CHECK(approx_equal(dephase(plus_state(), flat), plus_state(), 1e-13));
}

TEST_CASE("free_energy_of_coherence vanishes on energy-diagonal states") {
    const Hamiltonian h = make_hamiltonian(-pauli_z(), "M");
    CHECK(free_energy_of_coherence(0.5 * identity(2), h, 1.0) ==
          doctest::Approx(0.0).epsilon(1e-12));
    CHECK(free_energy_of_coherence(plus_state(), h, 1.0) == doctest::Approx(kLn2));
    CHECK(free_energy_of_coherence(plus_state(), h, 2.5) == doctest::Approx(2.5 * kLn2));
}

TEST_CASE("random_density draws valid states deterministically per seed") {
    std::mt19937_64 rng_a(99);
    std::mt19937_64 rng_b(99);
    const ComplexMatrix a = random_density(4, rng_a);
    const ComplexMatrix b = random_density(4, rng_b);
    CHECK(approx_equal(a, b, 0.0));
    CHECK_NOTHROW(validate_density(a));
    std::mt19937_64 rng_c(100);
    CHECK(max_abs_diff(a, random_density(4, rng_c)) > 1e-3);
}

TEST_CASE("default_seed honors the environment override") {
    unsetenv("SWITCHTHERM_SEED");
    CHECK(default_seed() == 42u);
    setenv("SWITCHTHERM_SEED", "1234", 1);
    CHECK(default_seed() == 1234u);
    setenv("SWITCHTHERM_SEED", "not-a-number", 1);
    CHECK_THROWS(default_seed());
    unsetenv("SWITCHTHERM_SEED");
}

TEST_SUITE_END();
