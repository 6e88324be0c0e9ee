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

#include "switchtherm/states.hpp"

#include <array>

namespace switchtherm {

struct KrausChannel {
    std::vector<ComplexMatrix> kraus_ops;
    int dim_in = 0;
    int dim_out = 0;
};

// Validates shapes and the completeness relation sum_i K_i^dag K_i = I
// within 1e-9.
KrausChannel make_kraus_channel(std::vector<ComplexMatrix> kraus_ops);
double completeness_residual(const KrausChannel& ch);

// Collision-model parameters: theta1 sets the partial-swap strength
// s = sin(theta1); theta2 is an interaction phase that never affects the
// induced channel on diagonal inputs; axis is the system qubit's energy axis.
struct CollisionParams {
    double theta1 = 0.0;
    double theta2 = 0.0;
    std::array<double, 3> axis = {0.0, 0.0, 1.0};

    double s() const;
    double c() const;
};

// Single-qubit unitary with tilde_u sigma_z tilde_u^dag = axis . sigma;
// column 0 is the ground state of -(axis . sigma).
ComplexMatrix tilde_u(const std::array<double, 3>& axis);

// (tilde_u x tilde_u) e^{i theta1 SWAP} e^{i theta2 sigma_z x sigma_z / 2}
// (tilde_u x tilde_u)^dag on system x environment; both qubits share the
// energy axis, so the environment must be prepared in the same frame.
ComplexMatrix collision_unitary(const CollisionParams& params);

// Stinespring reduction: K_(e', e) = sqrt(p_e) <e'| U |e> for the spectral
// decomposition env = sum_e p_e |e><e|. Terms with p_e < 1e-14 are dropped.
KrausChannel kraus_from_dilation(const ComplexMatrix& u, const ComplexMatrix& env_state);

// Thermalizing qubit channel with strength s toward tau = diag(q, 1-q):
//   K1 = sqrt(q) (c I + i s |0><0|),  K2 = sqrt(q) i s |0><1|,
//   K3 = sqrt(1-q) i s |1><0|,        K4 = sqrt(1-q) (c I + i s |1><1|),
// with c = sqrt(1 - s^2).
KrausChannel thermal_qubit_channel(double s, double q);

// Channel applied to the factor named `target` inside rho's layout.
DensityMatrix apply_channel(const KrausChannel& ch, const DensityMatrix& rho,
                            const std::string& target);
ComplexMatrix apply_channel(const KrausChannel& ch, const ComplexMatrix& rho);

// Sequential composition (second after first), Kraus set {K2_j K1_i}.
KrausChannel compose(const KrausChannel& second, const KrausChannel& first);

// (1/d) sum_ij |i><j| x ch(|i><j|); equal Choi matrices mean equal channels.
ComplexMatrix choi_matrix(const KrausChannel& ch);

struct CptpReport {
    bool ok = false;
    double completeness_residual = 0.0;
    double choi_min_eigenvalue = 0.0;
};

CptpReport is_cptp(const KrausChannel& ch, double tol = 1e-9);

struct GibbsReport {
    bool ok = false;
    double fixed_point_residual = 0.0;
    double worst_monotonicity_violation = 0.0;
};

// Checks that gibbs is a fixed point and that relative entropy to gibbs is
// monotone under the channel over `samples` random input states.
GibbsReport is_gibbs_preserving(const KrausChannel& ch, const ComplexMatrix& gibbs,
                                std::mt19937_64& rng, int samples = 100, double tol = 1e-9);
GibbsReport is_gibbs_preserving(const KrausChannel& ch, const ComplexMatrix& gibbs,
                                double tol = 1e-9);

struct EnergyReport {
    bool ok = false;
    double residual = 0.0;
};

// Max-entry norm of [U, H_sys x I + I x H_env] for u on sys x env.
EnergyReport is_energy_conserving(const ComplexMatrix& u, const Hamiltonian& h_sys,
                                  const Hamiltonian& h_env, double tol = 1e-10);
// Max-entry norm of [U, H] for a prebuilt total Hamiltonian.
EnergyReport is_energy_conserving(const ComplexMatrix& u, const ComplexMatrix& h_total,
                                  double tol = 1e-10);

// Partial controlled flip of an environment qubit conditioned on the system:
// induced Kraus ops {c I + i s |0><0|, i s |1><1|} on the system qubit,
// c = sqrt(1 - s^2). Unital but not energy conserving for s in (0, 1).
KrausChannel partial_cnot_channel(double s);

// cos(theta) I + i sin(theta) CNOT on system x environment (system controls,
// environment is flipped), theta = asin(s).
ComplexMatrix partial_cnot_dilation(double s);

// Rotates each Kraus operator by a global phase making its
// largest-magnitude entry real and positive.
std::vector<ComplexMatrix> phase_normalize(std::vector<ComplexMatrix> ops);

}  // namespace switchtherm
