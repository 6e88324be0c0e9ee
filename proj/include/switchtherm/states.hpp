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

#include "switchtherm/matcore.hpp"

#include <cstdint>
#include <random>

namespace switchtherm {

enum class EntropyBase { e, two };

struct Hamiltonian {
    ComplexMatrix matrix;
    std::string label;
};

Hamiltonian make_hamiltonian(ComplexMatrix m, std::string label);

struct DensityMatrix {
    ComplexMatrix matrix;
    FactorLayout layout;

    int dim() const { return static_cast<int>(matrix.rows()); }
};

// Validates Hermiticity (1e-9), unit trace (1e-9) and positivity (min
// eigenvalue >= -1e-9) before wrapping.
DensityMatrix make_density_matrix(ComplexMatrix m, FactorLayout layout);
DensityMatrix make_qubit_state(ComplexMatrix m, std::string label);
void validate_density(const ComplexMatrix& m);

DensityMatrix reduce(const DensityMatrix& rho, const std::vector<std::string>& keep);

// Ground-state population q = e^beta / (e^beta + e^-beta) of a qubit with
// Hamiltonian -sigma_z; q in [1/2, 1], beta in [0, +inf].
double q_from_beta(double beta);
double beta_from_q(double q);

// Exactly one of q / beta is authoritative; the other is derived on demand.
struct ThermalSpec {
    static ThermalSpec from_q(double q);
    static ThermalSpec from_beta(double beta);
    double q() const;
    double beta() const;

   private:
    bool q_authoritative_ = true;
    double value_ = 1.0;
};

// exp(-beta h) / Z; beta = +inf returns the uniform mixture over the ground
// eigenspace.
DensityMatrix thermal_state(const Hamiltonian& h, double beta);

double von_neumann_entropy(const ComplexMatrix& rho, EntropyBase base = EntropyBase::e);
double von_neumann_entropy(const DensityMatrix& rho, EntropyBase base = EntropyBase::e);

// (1/2) ||a - b||_1.
double trace_distance(const ComplexMatrix& a, const ComplexMatrix& b);

struct RelativeEntropyResult {
    double value = 0.0;  // nats; +inf when support_violation
    bool support_violation = false;
};

// S(rho || sigma) = Tr(rho log rho) - Tr(rho log sigma), natural log.
RelativeEntropyResult relative_entropy(const ComplexMatrix& rho, const ComplexMatrix& sigma);
RelativeEntropyResult relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma);

// F(rho, H, T) = Tr(rho H) - kT S(rho), natural-log entropy.
double free_energy(const ComplexMatrix& rho, const Hamiltonian& h, double kT);

// Sum of P_k rho P_k over the spectral projectors of h (degenerate
// eigenspaces grouped within 1e-9).
ComplexMatrix dephase(const ComplexMatrix& rho, const Hamiltonian& h);
DensityMatrix dephase(const DensityMatrix& rho, const Hamiltonian& h);

// F_coh = kT (S(dephase(rho, h)) - S(rho)).
double free_energy_of_coherence(const ComplexMatrix& rho, const Hamiltonian& h, double kT);

// Ginibre-induced random density matrix.
ComplexMatrix random_density(int dim, std::mt19937_64& rng);

// SWITCHTHERM_SEED environment variable, default 42.
std::uint64_t default_seed();

}  // namespace switchtherm
