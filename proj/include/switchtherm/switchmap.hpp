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

#include "switchtherm/channels.hpp"

namespace switchtherm {

// Control qubit preparation. mixed_lambda: lambda |+><+| + (1-lambda) |0><0|.
// pure_alpha: sqrt(alpha) |0> + sqrt(1-alpha) |1>.
struct ControlState {
    enum class Kind { mixed_lambda, pure_alpha };

    Kind kind = Kind::mixed_lambda;
    double value = 1.0;

    static ControlState mixed(double lambda);
    static ControlState pure(double alpha);
    ComplexMatrix matrix() const;
};

struct ScenarioParams {
    double s = 1.0;
    double q = 1.0;
    ControlState control = ControlState::mixed(1.0);
    double p = 0.5;
    ComplexMatrix rho_a0;  // message state sent with the ground pointer
    ComplexMatrix rho_a1;  // message state sent with the excited pointer
    std::array<double, 3> axis = {0.0, 0.0, 1.0};
};

// p = 1/2, rho_a0 = |0><0|, rho_a1 = |1><1|, z axis, q = 1, lambda = 1, s = 1.
ScenarioParams default_scenario();

// Classical-quantum input  p rho_a0 x |phi><phi| + (1-p) rho_a1 x
// |phi_perp><phi_perp|  on [A, M], with |phi> the ground state of the
// axis-aligned qubit Hamiltonian.
DensityMatrix input_am_state(const ScenarioParams& params);

// Kraus set of the coherently ordered pair on C x target:
//   |0><0|_C x K2_j K1_i + |1><1|_C x K1_i K2_j.
KrausChannel switched_kraus(const KrausChannel& first, const KrausChannel& second);

// Switch action with explicit control state and channel pair; rho carries an
// "M" factor the channels act on, and bystander factors ride along. Returns
// the joint state on [C, ...rho factors...].
DensityMatrix apply_switch_channels(const ComplexMatrix& sigma_c, const KrausChannel& first,
                                    const KrausChannel& second, const DensityMatrix& rho);

// Full scenario: two thermalizing collisions of strength s toward
// tau = diag(q, 1-q) in the axis frame, applied in a superposed order
// controlled by params.control. Returns the [C, A, M] state.
DensityMatrix apply_switch(const ScenarioParams& params);

// Coherent-order dilation on [C, M, E1, E2]:
//   |0><0|_C x U_ME2 U_ME1 + |1><1|_C x U_ME1 U_ME2.
ComplexMatrix dilation_unitary_L(const ComplexMatrix& u1, const ComplexMatrix& u2);

// Same scenario evaluated through the dilation on [C, A, M, E1, E2] with
// thermal environments, traced down to [C, A, M].
DensityMatrix simulate_full(const ScenarioParams& params);

// Closed-form [C, A, M] output, z-axis algebra conjugated into the requested
// frame. Supports both control kinds.
DensityMatrix closed_form_final_state(const ScenarioParams& params);

// Tr_C (SWAP rho_CM SWAP): the control marginal re-expressed on the M wire.
ComplexMatrix swap_and_trace(const ComplexMatrix& rho_cm);
DensityMatrix swap_and_trace(const DensityMatrix& rho_cm);

struct GibbsInvarianceReport {
    double residual = 0.0;            // |Tr_C switch(tau) - tau|_max
    bool precondition_ok = false;     // each channel individually fixes tau
    double precondition_residual = 0.0;
};

// Gibbs preservation of the traced-out switch for an arbitrary control.
GibbsInvarianceReport verify_gibbs_invariance(const KrausChannel& first,
                                              const KrausChannel& second,
                                              const ComplexMatrix& tau,
                                              const ComplexMatrix& sigma_c);
GibbsInvarianceReport verify_gibbs_invariance(const KrausChannel& first,
                                              const KrausChannel& second,
                                              const ComplexMatrix& tau,
                                              const ControlState& control);

}  // namespace switchtherm
