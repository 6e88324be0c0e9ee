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

#include "switchtherm/infobound.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "doctest.h"

namespace {

using namespace switchtherm;

const ComplexMatrix kP0 = projector(basis_ket(0));
const ComplexMatrix kP1 = projector(basis_ket(1));

DensityMatrix bell_pair() {
    ComplexVector bell = ComplexVector::Zero(4);
    bell(0) = bell(3) = 1.0 / std::sqrt(2.0);
    return make_density_matrix(projector(bell), make_layout({2, 2}, {"A", "B"}));
}

DensityMatrix classical_pair(double p) {
    ComplexMatrix m = ComplexMatrix::Zero(4, 4);
    m(0, 0) = p;
    m(3, 3) = 1 - p;
    return make_density_matrix(m, make_layout({2, 2}, {"A", "B"}));
}

}  // namespace

TEST_SUITE_BEGIN("infobound");

TEST_CASE("mutual_information matches closed forms") {
    const DensityMatrix product = make_density_matrix(
        kron(0.5 * identity(2), kP0), make_layout({2, 2}, {"A", "B"}));
    CHECK(mutual_information(product, {"A"}, {"B"}) == doctest::Approx(0.0).epsilon(1e-12));

    CHECK(mutual_information(bell_pair(), {"A"}, {"B"}, EntropyBase::two) ==
          doctest::Approx(2.0));
    CHECK(mutual_information(bell_pair(), {"A"}, {"B"}) ==
          doctest::Approx(2.0 * std::log(2.0)));
    CHECK(mutual_information(classical_pair(0.5), {"A"}, {"B"}, EntropyBase::two) ==
          doctest::Approx(1.0));

    CHECK_THROWS_AS(mutual_information(bell_pair(), {"A"}, {"A"}), std::invalid_argument);
}

TEST_CASE("mutual information restricts to the named parts of a larger state") {
    ScenarioParams params = default_scenario();
    params.s = 0.8;
    const DensityMatrix out = apply_switch(params);
    const double direct = mutual_information(out, {"A"}, {"C", "M"});
    const DensityMatrix reduced = reduce(out, {"A", "C", "M"});
    const double through_reduce = mutual_information(reduced, {"A"}, {"C", "M"});
    CHECK(direct == doctest::Approx(through_reduce).epsilon(1e-12));
    CHECK(direct >= mutual_information(out, {"A"}, {"M"}) - 1e-10);
}

TEST_CASE("conditional mutual information satisfies the chain rule") {
    std::mt19937_64 rng(59);
    for (int i = 0; i < 10; ++i) {
        const DensityMatrix rho = make_density_matrix(
            random_density(8, rng), make_layout({2, 2, 2}, {"A", "B", "C"}));
        const double joint = mutual_information(rho, {"A"}, {"B", "C"});
        const double chained = mutual_information(rho, {"A"}, {"C"}) +
                               conditional_mutual_information(rho, {"A"}, {"B"}, {"C"});
        CHECK(std::abs(joint - chained) < 1e-10);
        // Strong subadditivity keeps the conditional term nonnegative.
        CHECK(conditional_mutual_information(rho, {"A"}, {"B"}, {"C"}) > -1e-10);
    }
}

TEST_CASE("mixing with a product tail can only shrink mutual information") {
    std::mt19937_64 rng(61);
    for (int i = 0; i < 50; ++i) {
        const DensityMatrix rho_in = make_density_matrix(
            random_density(4, rng), make_layout({2, 2}, {"A", "B"}));
        const ComplexMatrix sigma_b = random_density(2, rng);
        const double p = 0.02 + 0.96 * (i / 49.0);
        const auto [lhs, rhs] = product_mixture_dpi_check(rho_in, sigma_b, p);
        CHECK(lhs <= rhs + 1e-10);
    }
    // Endpoints: p = 1 reproduces the input MI, p = 0 erases it.
    const auto [all_in, all_in_rhs] = product_mixture_dpi_check(bell_pair(), kP0, 1.0);
    CHECK(all_in == doctest::Approx(all_in_rhs).epsilon(1e-12));
    const auto [none, none_rhs] = product_mixture_dpi_check(bell_pair(), kP0, 0.0);
    CHECK(none == doctest::Approx(0.0).epsilon(1e-10));
    CHECK(none_rhs == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("information_bound reproduces pinned component values") {
    const BoundResult r =
        information_bound(0.75, 0.5, 0.75, 0.25, kP0, kP1, EntropyBase::two);
    CHECK(std::abs(r.weight_d0 - 0.435729980468750) < 1e-12);
    CHECK(std::abs(r.weight_d1 - 0.064270019531250) < 1e-12);
    CHECK(std::abs(r.mix_d0 - 0.977307746182939) < 1e-12);
    CHECK(std::abs(r.mix_d1 - 0.538461538461538) < 1e-12);
    CHECK(std::abs(r.bound_value - 0.223244538888092) < 1e-12);
    CHECK(r.mix_d0_defined);
    CHECK(r.mix_d1_defined);
    CHECK(std::abs(r.weight_d0 + r.weight_d1 - 0.5) < 1e-15);
    const double s4 = std::pow(0.75, 4);
    const double c4 = std::pow(1 - 0.75 * 0.75, 2);
    CHECK(std::abs(r.coefficient - (c4 + 0.5 * (0.75 * 0.75 - 0.75 + 0.5) * s4)) < 1e-15);
}

TEST_CASE("information_bound hits the pinned scenario values") {
    const BoundResult full =
        information_bound(1.0, 1.0, 1.0, 0.5, kP0, kP1, EntropyBase::two);
    CHECK(std::abs(full.bound_value - 0.688721875540867) < 1e-12);
    CHECK(full.i_in == 1.0);  // one classical bit in the default ensemble

    const BoundResult off = information_bound(1.0, 0.0, 1.0, 0.5, kP0, kP1,
                                              EntropyBase::two);
    CHECK(off.bound_value == 0.0);
    CHECK(off.coefficient == 0.0);
    CHECK(!off.mix_d0_defined);
    CHECK(!off.mix_d1_defined);
    CHECK(std::isnan(off.mix_d0));

    const BoundResult partial =
        information_bound(0.5, 1.0, 1.0, 0.5, kP0, kP1, EntropyBase::two);
    CHECK(std::abs(partial.bound_value - 0.609196086851588) < 1e-12);
}

TEST_CASE("maximally mixing bath makes the bound exactly a quarter of the input") {
    const BoundResult r = information_bound(1.0, 1.0, 0.5, 0.5, kP0, kP1,
                                            EntropyBase::two);
    // Dyadic coefficients: bitwise equality, not approximate.
    CHECK(r.coefficient == 0.25);
    CHECK(r.g_term == 0.0);
    CHECK(r.bound_value == 0.25 * r.i_in);
    CHECK(r.i_in == 1.0);
    // q = 1/2 pins the first virtual register to the input marginal.
    const BoundResult partial = information_bound(0.8, 0.7, 0.5, 0.4, kP0, kP1,
                                                  EntropyBase::two);
    CHECK(std::abs(partial.mix_d0 - 1.0) < 1e-12);
    CHECK(std::abs(partial.i_ad0) < 1e-12);
}

TEST_CASE("information_bound clamps roundoff and rejects real violations") {
    CHECK_NOTHROW(information_bound(1.0 + 1e-10, 1.0, 1.0, 0.5, kP0, kP1));
    CHECK_NOTHROW(information_bound(1.0, 1.0, 1.0, -1e-10, kP0, kP1));
    CHECK_THROWS_AS(information_bound(1.1, 1.0, 1.0, 0.5, kP0, kP1), std::domain_error);
    CHECK_THROWS_AS(information_bound(0.5, 1.5, 1.0, 0.5, kP0, kP1), std::domain_error);
    CHECK_THROWS_AS(information_bound(0.5, 1.0, 0.3, 0.5, kP0, kP1), std::domain_error);
    CHECK_THROWS_AS(information_bound(0.5, 1.0, 1.0, 1.2, kP0, kP1), std::domain_error);
}

TEST_CASE("nats and bits differ by exactly log2") {
    const BoundResult nats = information_bound(0.8, 0.9, 0.8, 0.4, kP0, kP1);
    const BoundResult bits =
        information_bound(0.8, 0.9, 0.8, 0.4, kP0, kP1, EntropyBase::two);
    const double ln2 = std::log(2.0);
    CHECK(nats.bound_value == doctest::Approx(bits.bound_value * ln2).epsilon(1e-12));
    CHECK(nats.i_in == doctest::Approx(bits.i_in * ln2).epsilon(1e-12));
    CHECK(nats.coefficient == bits.coefficient);  // unitless
    CHECK(nats.weight_d0 == bits.weight_d0);
    CHECK(nats.mix_d1 == bits.mix_d1);
}

TEST_CASE("fcoh_floor scales with lambda squared and temperature") {
    const double ln16 = std::log(16.0);
    CHECK(fcoh_floor(0.0, 1.0) == 0.0);
    CHECK(fcoh_floor(1.0, 1.0) == doctest::Approx(1.0 / ln16));
    CHECK(fcoh_floor(0.5, 2.0) == doctest::Approx(2.0 * 0.25 / ln16));
}

TEST_SUITE_END();
