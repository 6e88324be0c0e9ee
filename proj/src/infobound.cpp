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

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace switchtherm {

namespace {

constexpr double kWeightFloor = 1e-12;
constexpr double kClampTol = 1e-9;

std::vector<std::string> join_parts(const std::vector<std::string>& a,
                                    const std::vector<std::string>& b) {
    std::vector<std::string> out = a;
    for (const std::string& name : b) {
        if (std::find(out.begin(), out.end(), name) != out.end())
            throw std::invalid_argument("parts must be disjoint: " + name);
        out.push_back(name);
    }
    return out;
}

double clamp_probability(double value, const char* name) {
    if (value < -kClampTol || value > 1.0 + kClampTol)
        throw std::domain_error(std::string(name) +
                                " outside [0, 1]: " + std::to_string(value));
    return std::clamp(value, 0.0, 1.0);
}

// I(A:D) for the register mixture mix rho_a + (1-mix) rho_ai, in nats
double virtual_register_mi(double mix, const ComplexMatrix& rho_a,
                           const ComplexMatrix& rho_ai) {
    const ComplexMatrix mixture = mix * rho_a + (1.0 - mix) * rho_ai;
    return von_neumann_entropy(mixture) - mix * von_neumann_entropy(rho_a) -
           (1.0 - mix) * von_neumann_entropy(rho_ai);
}

}  // namespace

double mutual_information(const DensityMatrix& rho, const std::vector<std::string>& part_a,
                          const std::vector<std::string>& part_b, EntropyBase base) {
    const std::vector<std::string> joint = join_parts(part_a, part_b);
    const DensityMatrix rho_ab = reduce(rho, joint);
    const double s_a = von_neumann_entropy(reduce(rho_ab, part_a), base);
    const double s_b = von_neumann_entropy(reduce(rho_ab, part_b), base);
    return s_a + s_b - von_neumann_entropy(rho_ab, base);
}

double conditional_mutual_information(const DensityMatrix& rho,
                                      const std::vector<std::string>& part_a,
                                      const std::vector<std::string>& part_b,
                                      const std::vector<std::string>& part_c,
                                      EntropyBase base) {
    const std::vector<std::string> abc = join_parts(join_parts(part_a, part_b), part_c);
    const DensityMatrix rho_abc = reduce(rho, abc);
    const double s_ac = von_neumann_entropy(reduce(rho_abc, join_parts(part_a, part_c)), base);
    const double s_bc = von_neumann_entropy(reduce(rho_abc, join_parts(part_b, part_c)), base);
    const double s_c = von_neumann_entropy(reduce(rho_abc, part_c), base);
    return s_ac + s_bc - s_c - von_neumann_entropy(rho_abc, base);
}

std::pair<double, double> product_mixture_dpi_check(const DensityMatrix& rho_in,
                                                    const ComplexMatrix& sigma_b, double p,
                                                    EntropyBase base) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("weight must be in [0, 1]");
    if (rho_in.layout.dims.size() != 2)
        throw std::invalid_argument("expected a bipartite state");
    const std::string label_a = rho_in.layout.labels[0];
    const std::string label_b = rho_in.layout.labels[1];
    if (sigma_b.rows() != rho_in.layout.dims[1])
        throw std::invalid_argument("replacement state dimension mismatch");
    const ComplexMatrix rho_a = partial_trace(rho_in.matrix, rho_in.layout, {label_a});
    const ComplexMatrix fin = p * rho_in.matrix + (1.0 - p) * kron(rho_a, sigma_b);
    const DensityMatrix rho_fin{fin, rho_in.layout};
    const double lhs = mutual_information(rho_fin, {label_a}, {label_b}, base);
    const double rhs = p * mutual_information(rho_in, {label_a}, {label_b}, base);
    return {lhs, rhs};
}

BoundResult information_bound(double s, double lambda, double q, double p,
                              const ComplexMatrix& rho_a0, const ComplexMatrix& rho_a1,
                              EntropyBase base) {
    s = clamp_probability(s, "strength");
    lambda = clamp_probability(lambda, "coherent weight");
    if (q < 0.5 - kClampTol || q > 1.0 + kClampTol)
        throw std::domain_error("ground population outside [1/2, 1]: " + std::to_string(q));
    q = std::clamp(q, 0.5, 1.0);
    p = clamp_probability(p, "pointer weight");
    validate_density(rho_a0);
    validate_density(rho_a1);

    const double s2 = s * s;
    const double c2 = 1.0 - s2;
    const double c4 = c2 * c2;
    const double s4 = s2 * s2;

    BoundResult result;
    result.coefficient = c4 + lambda * (q * q - q + 0.5) * s4;
    result.weight_d0 = lambda * (1.0 - ((1.0 - q * q) + (2.0 * q - 1.0) * (1.0 - p)) / 2.0 * s4);
    result.weight_d1 = lambda - result.weight_d0;

    const ComplexMatrix rho_a = p * rho_a0 + (1.0 - p) * rho_a1;
    ScenarioParams in_params = default_scenario();
    in_params.p = p;
    in_params.rho_a0 = rho_a0;
    in_params.rho_a1 = rho_a1;
    const DensityMatrix rho_in = input_am_state(in_params);
    result.i_in = mutual_information(rho_in, {"A"}, {"M"});

    const double nan = std::numeric_limits<double>::quiet_NaN();
    result.mix_d0 = nan;
    result.mix_d1 = nan;
    result.i_ad0 = 0.0;
    result.i_ad1 = 0.0;
    if (result.weight_d0 > kWeightFloor) {
        const double raw = lambda * (1.0 + (q * q - 2.0 * q) * s4 / 2.0) / result.weight_d0;
        result.mix_d0 = clamp_probability(raw, "mix_d0");
        result.mix_d0_defined = true;
        result.i_ad0 = virtual_register_mi(result.mix_d0, rho_a, rho_a0);
    }
    if (result.weight_d1 > kWeightFloor) {
        const double raw = lambda * (1.0 - q * q) * s4 / 2.0 / result.weight_d1;
        result.mix_d1 = clamp_probability(raw, "mix_d1");
        result.mix_d1_defined = true;
        result.i_ad1 = virtual_register_mi(result.mix_d1, rho_a, rho_a1);
    }
    result.g_term = result.weight_d0 * result.i_ad0 + result.weight_d1 * result.i_ad1;
    result.bound_value = result.coefficient * result.i_in + result.g_term;
    if (base == EntropyBase::two) {
        const double scale = 1.0 / std::log(2.0);
        result.bound_value *= scale;
        result.g_term *= scale;
        result.i_ad0 *= scale;
        result.i_ad1 *= scale;
        result.i_in *= scale;
    }
    return result;
}

double fcoh_floor(double lambda, double kT) {
    if (!(lambda >= 0.0 && lambda <= 1.0))
        throw std::invalid_argument("coherent weight must be in [0, 1]");
    if (!(kT > 0.0)) throw std::invalid_argument("temperature must be positive");
    return kT * lambda * lambda / std::log(16.0);
}

}  // namespace switchtherm
