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

#include "switchtherm/switchmap.hpp"

#include <cmath>
#include <stdexcept>

namespace switchtherm {

namespace {

ComplexMatrix ket_proj(int k) { return projector(basis_ket(k)); }

ComplexMatrix plus_proj() {
    ComplexVector plus(2);
    plus << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
    return projector(plus);
}

ComplexMatrix minus_proj() {
    ComplexVector minus(2);
    minus << 1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0);
    return projector(minus);
}

void validate_scenario(const ScenarioParams& params) {
    if (!(params.s >= 0.0 && params.s <= 1.0))
        throw std::invalid_argument("strength must be in [0, 1]");
    if (!(params.q >= 0.5 && params.q <= 1.0))
        throw std::invalid_argument("ground population must be in [1/2, 1]");
    if (!(params.p >= 0.0 && params.p <= 1.0))
        throw std::invalid_argument("pointer weight must be in [0, 1]");
    validate_density(params.rho_a0);
    validate_density(params.rho_a1);
    if (params.rho_a0.rows() != params.rho_a1.rows())
        throw std::invalid_argument("message states must share one dimension");
}

bool is_z_axis(const std::array<double, 3>& axis) {
    return axis[0] == 0.0 && axis[1] == 0.0 && axis[2] == 1.0;
}

// z-frame classical-quantum input p rho_a0 x |0><0| + (1-p) rho_a1 x |1><1|
ComplexMatrix input_am_zframe(const ScenarioParams& params) {
    return params.p * kron(params.rho_a0, ket_proj(0)) +
           (1.0 - params.p) * kron(params.rho_a1, ket_proj(1));
}

// closed form for the fully coherent control, z frame, layout [C, A, M]
ComplexMatrix closed_lambda_one(const ScenarioParams& params) {
    const double s2 = params.s * params.s;
    const double c2 = 1.0 - s2;
    const double c4 = c2 * c2;
    const double s4 = s2 * s2;
    const double q = params.q;
    const double p = params.p;
    const int da = static_cast<int>(params.rho_a0.rows());
    const ComplexMatrix rho_am = input_am_zframe(params);
    const ComplexMatrix rho_a = p * params.rho_a0 + (1.0 - p) * params.rho_a1;
    const ComplexMatrix flip = kron(identity(da), pauli_x());
    ComplexMatrix tau = ComplexMatrix::Zero(2, 2);
    tau(0, 0) = q;
    tau(1, 1) = 1.0 - q;
    const ComplexMatrix minus_block =
        s4 * ((1.0 - q) * (1.0 - q) / 2.0 * (flip * rho_am * flip) +
              q * (1.0 - q) * kron(rho_a, identity(2) / 2.0) +
              (2.0 * q - 1.0) / 2.0 * (1.0 - p) * kron(params.rho_a1, ket_proj(0)));
    const ComplexMatrix plus_block =
        (c4 + (1.0 - q) * (1.0 - q) / 2.0 * s4) * rho_am +
        (2.0 * c2 * s2 + s4 / 2.0) * kron(rho_a, tau) +
        s4 * (2.0 * q - 1.0) / 2.0 * p * kron(params.rho_a0, ket_proj(0));
    return kron(minus_proj(), minus_block) + kron(plus_proj(), plus_block);
}

// coherent cross block of the pure-control output, z frame, layout [A, M]
ComplexMatrix coherent_cross_block(const ScenarioParams& params) {
    const double s2 = params.s * params.s;
    const double c2 = 1.0 - s2;
    const double q = params.q;
    const double p = params.p;
    const double a0 = (c2 + s2 * q) * (c2 + s2 * q);
    const double a1 = (c2 + s2 * (1.0 - q)) * (c2 + s2 * (1.0 - q));
    return a0 * p * kron(params.rho_a0, ket_proj(0)) +
           a1 * (1.0 - p) * kron(params.rho_a1, ket_proj(1)) +
           2.0 * c2 * s2 * (1.0 - q) * p * kron(params.rho_a0, ket_proj(1)) +
           2.0 * c2 * s2 * q * (1.0 - p) * kron(params.rho_a1, ket_proj(0));
}

}  // namespace

ControlState ControlState::mixed(double lambda) {
    if (!(lambda >= 0.0 && lambda <= 1.0))
        throw std::invalid_argument("coherent weight must be in [0, 1]");
    return ControlState{Kind::mixed_lambda, lambda};
}

ControlState ControlState::pure(double alpha) {
    if (!(alpha >= 0.0 && alpha <= 1.0))
        throw std::invalid_argument("amplitude weight must be in [0, 1]");
    return ControlState{Kind::pure_alpha, alpha};
}

ComplexMatrix ControlState::matrix() const {
    if (kind == Kind::mixed_lambda)
        return value * plus_proj() + (1.0 - value) * ket_proj(0);
    ComplexVector psi(2);
    psi << std::sqrt(value), std::sqrt(1.0 - value);
    return projector(psi);
}

ScenarioParams default_scenario() {
    ScenarioParams params;
    params.s = 1.0;
    params.q = 1.0;
    params.control = ControlState::mixed(1.0);
    params.p = 0.5;
    params.rho_a0 = ket_proj(0);
    params.rho_a1 = ket_proj(1);
    params.axis = {0.0, 0.0, 1.0};
    return params;
}

DensityMatrix input_am_state(const ScenarioParams& params) {
    validate_scenario(params);
    const ComplexMatrix frame = tilde_u(params.axis);
    const ComplexMatrix phi = projector(frame.col(0));
    const ComplexMatrix phi_perp = projector(frame.col(1));
    ComplexMatrix rho = params.p * kron(params.rho_a0, phi) +
                        (1.0 - params.p) * kron(params.rho_a1, phi_perp);
    const int da = static_cast<int>(params.rho_a0.rows());
    return make_density_matrix(std::move(rho), make_layout({da, 2}, {"A", "M"}));
}

KrausChannel switched_kraus(const KrausChannel& first, const KrausChannel& second) {
    if (first.dim_in != first.dim_out || second.dim_in != second.dim_out)
        throw std::invalid_argument("switched channels must be square");
    if (first.dim_in != second.dim_in)
        throw std::invalid_argument("switched channels must share one dimension");
    std::vector<ComplexMatrix> ops;
    ops.reserve(first.kraus_ops.size() * second.kraus_ops.size());
    for (const ComplexMatrix& ki : first.kraus_ops)
        for (const ComplexMatrix& kj : second.kraus_ops)
            ops.push_back(kron(ket_proj(0), kj * ki) + kron(ket_proj(1), ki * kj));
    return make_kraus_channel(std::move(ops));
}

DensityMatrix apply_switch_channels(const ComplexMatrix& sigma_c, const KrausChannel& first,
                                    const KrausChannel& second, const DensityMatrix& rho) {
    validate_density(sigma_c);
    if (sigma_c.rows() != 2) throw std::invalid_argument("control must be a qubit");
    const int m_pos = rho.layout.index_of("M");
    if (rho.layout.dims[m_pos] != first.dim_in)
        throw std::invalid_argument("channel dimension does not match M factor");
    std::vector<int> joint_dims;
    std::vector<std::string> joint_labels;
    joint_dims.push_back(2);
    joint_labels.push_back("C");
    joint_dims.insert(joint_dims.end(), rho.layout.dims.begin(), rho.layout.dims.end());
    joint_labels.insert(joint_labels.end(), rho.layout.labels.begin(),
                        rho.layout.labels.end());
    const ComplexMatrix init = kron(sigma_c, rho.matrix);
    const KrausChannel sw = switched_kraus(first, second);
    ComplexMatrix out = ComplexMatrix::Zero(init.rows(), init.cols());
    for (const ComplexMatrix& op : sw.kraus_ops) {
        const ComplexMatrix big = embed(op, {0, m_pos + 1}, joint_dims);
        out += big * init * big.adjoint();
    }
    return DensityMatrix{std::move(out), make_layout(joint_dims, joint_labels)};
}

DensityMatrix apply_switch(const ScenarioParams& params) {
    const DensityMatrix rho_in = input_am_state(params);
    KrausChannel ch = thermal_qubit_channel(params.s, params.q);
    if (!is_z_axis(params.axis)) {
        const ComplexMatrix frame = tilde_u(params.axis);
        std::vector<ComplexMatrix> rotated;
        rotated.reserve(ch.kraus_ops.size());
        for (const ComplexMatrix& k : ch.kraus_ops)
            rotated.push_back(frame * k * frame.adjoint());
        ch = make_kraus_channel(std::move(rotated));
    }
    return apply_switch_channels(params.control.matrix(), ch, ch, rho_in);
}

ComplexMatrix dilation_unitary_L(const ComplexMatrix& u1, const ComplexMatrix& u2) {
    if (u1.rows() != 4 || u1.cols() != 4 || u2.rows() != 4 || u2.cols() != 4)
        throw std::invalid_argument("collision unitaries must be 4x4");
    if ((u1 * u1.adjoint() - identity(4)).cwiseAbs().maxCoeff() > 1e-9 ||
        (u2 * u2.adjoint() - identity(4)).cwiseAbs().maxCoeff() > 1e-9)
        throw std::invalid_argument("collision unitaries must be unitary");
    const std::vector<int> dims{2, 2, 2, 2};  // [C, M, E1, E2]
    const ComplexMatrix first_leg = embed(u1, {1, 2}, dims);
    const ComplexMatrix second_leg = embed(u2, {1, 3}, dims);
    return embed(ket_proj(0), {0}, dims) * second_leg * first_leg +
           embed(ket_proj(1), {0}, dims) * first_leg * second_leg;
}

DensityMatrix simulate_full(const ScenarioParams& params) {
    const DensityMatrix rho_in = input_am_state(params);
    const int da = static_cast<int>(params.rho_a0.rows());
    const CollisionParams collision{std::asin(params.s), 0.0, params.axis};
    const ComplexMatrix u = collision_unitary(collision);
    const ComplexMatrix l = dilation_unitary_L(u, u);
    const std::vector<int> dims{2, da, 2, 2, 2};
    const std::vector<std::string> labels{"C", "A", "M", "E1", "E2"};
    const ComplexMatrix big_l = embed(l, {0, 2, 3, 4}, dims);
    const ComplexMatrix frame = tilde_u(params.axis);
    ComplexMatrix tau_z = ComplexMatrix::Zero(2, 2);
    tau_z(0, 0) = params.q;
    tau_z(1, 1) = 1.0 - params.q;
    const ComplexMatrix tau = frame * tau_z * frame.adjoint();
    const ComplexMatrix init =
        kron(params.control.matrix(), kron(rho_in.matrix, kron(tau, tau)));
    const ComplexMatrix fin = big_l * init * big_l.adjoint();
    const FactorLayout layout = make_layout(dims, labels);
    ComplexMatrix reduced = partial_trace(fin, layout, {"C", "A", "M"});
    return DensityMatrix{std::move(reduced), layout.sublayout({"C", "A", "M"})};
}

DensityMatrix closed_form_final_state(const ScenarioParams& params) {
    validate_scenario(params);
    const double s2 = params.s * params.s;
    const double c4 = (1.0 - s2) * (1.0 - s2);
    const int da = static_cast<int>(params.rho_a0.rows());
    const ComplexMatrix rho_am = input_am_zframe(params);
    const ComplexMatrix rho_a =
        params.p * params.rho_a0 + (1.0 - params.p) * params.rho_a1;
    ComplexMatrix tau = ComplexMatrix::Zero(2, 2);
    tau(0, 0) = params.q;
    tau(1, 1) = 1.0 - params.q;
    const ComplexMatrix definite_block = c4 * rho_am + (1.0 - c4) * kron(rho_a, tau);
    ComplexMatrix out;
    if (params.control.kind == ControlState::Kind::mixed_lambda) {
        const double lambda = params.control.value;
        out = lambda * closed_lambda_one(params) +
              (1.0 - lambda) * kron(ket_proj(0), definite_block);
    } else {
        const double alpha = params.control.value;
        ComplexMatrix c_diag = ComplexMatrix::Zero(2, 2);
        c_diag(0, 0) = alpha;
        c_diag(1, 1) = 1.0 - alpha;
        ComplexMatrix c_off = ComplexMatrix::Zero(2, 2);
        c_off(0, 1) = std::sqrt(alpha * (1.0 - alpha));
        c_off(1, 0) = c_off(0, 1);
        out = kron(c_diag, definite_block) + kron(c_off, coherent_cross_block(params));
    }
    if (!is_z_axis(params.axis)) {
        const ComplexMatrix frame =
            kron(identity(2), kron(identity(da), tilde_u(params.axis)));
        out = frame * out * frame.adjoint();
    }
    return DensityMatrix{std::move(out), make_layout({2, da, 2}, {"C", "A", "M"})};
}

ComplexMatrix swap_and_trace(const ComplexMatrix& rho_cm) {
    if (rho_cm.rows() != 4 || rho_cm.cols() != 4)
        throw std::invalid_argument("expected a two-qubit state");
    const ComplexMatrix swapped = swap_gate() * rho_cm * swap_gate();
    return partial_trace(swapped, make_layout({2, 2}, {"C", "M"}), {"M"});
}

DensityMatrix swap_and_trace(const DensityMatrix& rho_cm) {
    if (rho_cm.layout.dims.size() != 2 || rho_cm.layout.dims[0] != 2 ||
        rho_cm.layout.dims[1] != 2)
        throw std::invalid_argument("expected a two-qubit state");
    return DensityMatrix{swap_and_trace(rho_cm.matrix),
                         make_layout({2}, {rho_cm.layout.labels[1]})};
}

GibbsInvarianceReport verify_gibbs_invariance(const KrausChannel& first,
                                              const KrausChannel& second,
                                              const ComplexMatrix& tau,
                                              const ComplexMatrix& sigma_c) {
    GibbsInvarianceReport report;
    const double r1 = (apply_channel(first, tau) - tau).cwiseAbs().maxCoeff();
    const double r2 = (apply_channel(second, tau) - tau).cwiseAbs().maxCoeff();
    report.precondition_residual = std::max(r1, r2);
    report.precondition_ok = report.precondition_residual <= 1e-9;
    const DensityMatrix rho{tau, make_layout({first.dim_in}, {"M"})};
    const DensityMatrix out = apply_switch_channels(sigma_c, first, second, rho);
    const ComplexMatrix reduced = partial_trace(out.matrix, out.layout, {"M"});
    report.residual = (reduced - tau).cwiseAbs().maxCoeff();
    return report;
}

GibbsInvarianceReport verify_gibbs_invariance(const KrausChannel& first,
                                              const KrausChannel& second,
                                              const ComplexMatrix& tau,
                                              const ControlState& control) {
    return verify_gibbs_invariance(first, second, tau, control.matrix());
}

}  // namespace switchtherm
