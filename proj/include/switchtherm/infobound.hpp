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

#include "switchtherm/switchmap.hpp"

#include <utility>

namespace switchtherm {

// I(A:B) = S(A) + S(B) - S(AB) on the restriction to part_a + part_b.
double mutual_information(const DensityMatrix& rho, const std::vector<std::string>& part_a,
                          const std::vector<std::string>& part_b,
                          EntropyBase base = EntropyBase::e);

// I(A:B|C) = S(AC) + S(BC) - S(C) - S(ABC).
double conditional_mutual_information(const DensityMatrix& rho,
                                      const std::vector<std::string>& part_a,
                                      const std::vector<std::string>& part_b,
                                      const std::vector<std::string>& part_c,
                                      EntropyBase base = EntropyBase::e);

// For rho_fin = p rho_in + (1-p) rho_A x sigma_b returns
// (I(A:B)_fin, p * I(A:B)_in); the first never exceeds the second.
std::pair<double, double> product_mixture_dpi_check(const DensityMatrix& rho_in,
                                                    const ComplexMatrix& sigma_b, double p,
                                                    EntropyBase base = EntropyBase::e);

// bound_value = coefficient * i_in + weight_d0 * i_ad0 + weight_d1 * i_ad1.
// weight_d0 + weight_d1 = lambda; mix_d0 / mix_d1 are the mixing
// probabilities inside the two virtual-register terms, NaN when the
// corresponding weight vanishes.
struct BoundResult {
    double bound_value = 0.0;
    double coefficient = 0.0;
    double g_term = 0.0;  // weight_d0 * i_ad0 + weight_d1 * i_ad1
    double weight_d0 = 0.0;
    double weight_d1 = 0.0;
    double mix_d0 = 0.0;
    double mix_d1 = 0.0;
    double i_ad0 = 0.0;
    double i_ad1 = 0.0;
    double i_in = 0.0;
    bool mix_d0_defined = false;
    bool mix_d1_defined = false;
};

// Upper bound on I(A:CM) transmitted through two switched thermalizing
// collisions of strength s toward diag(q, 1-q) with mixed control lambda,
// for the classical-quantum input with pointer weight p and message states
// rho_a0 / rho_a1:
//   coefficient = c^4 + lambda (q^2 - q + 1/2) s^4,
//   weight_d0   = lambda (1 - ((1-q^2) + (2q-1)(1-p)) s^4 / 2),
//   mix_d0      = lambda (1 + (q^2 - 2q) s^4 / 2) / weight_d0,
//   mix_d1      = lambda (1 - q^2) s^4 / 2 / weight_d1.
BoundResult information_bound(double s, double lambda, double q, double p,
                              const ComplexMatrix& rho_a0, const ComplexMatrix& rho_a1,
                              EntropyBase base = EntropyBase::e);

// kT lambda^2 / ln 16, a floor under the coherent free energy of the
// mixed control state.
double fcoh_floor(double lambda, double kT);

}  // namespace switchtherm
