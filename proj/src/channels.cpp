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

#include "switchtherm/channels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace switchtherm {

namespace {

constexpr double kCompletenessTol = 1e-9;
constexpr double kEnvWeightTol = 1e-14;

void check_unit_interval(double value, const char* name) {
    if (!(value >= 0.0 && value <= 1.0))
        throw std::domain_error(std::string(name) + " must be in [0, 1]");
}

}  // namespace

KrausChannel make_kraus_channel(std::vector<ComplexMatrix> kraus_ops) {
    if (kraus_ops.empty()) throw std::invalid_argument("kraus set must be non-empty");
    const int dim_out = static_cast<int>(kraus_ops.front().rows());
    const int dim_in = static_cast<int>(kraus_ops.front().cols());
    for (const ComplexMatrix& k : kraus_ops) {
        if (k.rows() != dim_out || k.cols() != dim_in)
            throw std::invalid_argument("kraus operators must share one shape");
    }
    KrausChannel ch{std::move(kraus_ops), dim_in, dim_out};
    const double residual = completeness_residual(ch);
    if (residual > kCompletenessTol)
        throw std::invalid_argument("kraus completeness residual " + std::to_string(residual));
    return ch;
}

double completeness_residual(const KrausChannel& ch) {
    ComplexMatrix sum = ComplexMatrix::Zero(ch.dim_in, ch.dim_in);
    for (const ComplexMatrix& k : ch.kraus_ops) sum += k.adjoint() * k;
    return (sum - identity(ch.dim_in)).cwiseAbs().maxCoeff();
}

double CollisionParams::s() const { return std::sin(theta1); }

double CollisionParams::c() const { return std::cos(theta1); }

ComplexMatrix tilde_u(const std::array<double, 3>& axis) {
    const double norm =
        std::sqrt(axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2]);
    if (std::abs(norm - 1.0) > 1e-12)
        throw std::invalid_argument("axis must be a unit vector");
    const double theta = std::acos(std::clamp(axis[2], -1.0, 1.0));
    const double phi = std::atan2(axis[1], axis[0]);
    const Complex eiphi = std::polar(1.0, phi);
    ComplexMatrix u(2, 2);
    u(0, 0) = std::cos(theta / 2.0);
    u(1, 0) = eiphi * std::sin(theta / 2.0);
    u(0, 1) = -std::conj(eiphi) * std::sin(theta / 2.0);
    u(1, 1) = std::cos(theta / 2.0);
    return u;
}

ComplexMatrix collision_unitary(const CollisionParams& params) {
    const ComplexMatrix swap = swap_gate();
    const ComplexMatrix partial_swap =
        std::cos(params.theta1) * identity(4) + Complex(0.0, std::sin(params.theta1)) * swap;
    ComplexMatrix phase = ComplexMatrix::Zero(4, 4);
    const Complex plus = std::polar(1.0, params.theta2 / 2.0);
    const Complex minus = std::conj(plus);
    phase(0, 0) = plus;
    phase(1, 1) = minus;
    phase(2, 2) = minus;
    phase(3, 3) = plus;
    const ComplexMatrix u = tilde_u(params.axis);
    const ComplexMatrix frame = kron(u, u);
    return frame * partial_swap * phase * frame.adjoint();
}

KrausChannel kraus_from_dilation(const ComplexMatrix& u, const ComplexMatrix& env_state) {
    const int env_dim = static_cast<int>(env_state.rows());
    if (u.rows() != u.cols()) throw std::invalid_argument("dilation must be square");
    if (u.rows() % env_dim != 0)
        throw std::invalid_argument("dilation dimension must be divisible by environment");
    const int sys_dim = static_cast<int>(u.rows()) / env_dim;
    if ((u * u.adjoint() - identity(static_cast<int>(u.rows()))).cwiseAbs().maxCoeff() > 1e-9)
        throw std::invalid_argument("dilation must be unitary");
    const EighResult es = eigh(env_state);
    std::vector<ComplexMatrix> ops;
    for (int e = 0; e < env_dim; ++e) {
        const double p = es.eigenvalues(e);
        if (p < kEnvWeightTol) continue;
        const ComplexVector ket = es.eigenvectors.col(e);
        for (int ep = 0; ep < env_dim; ++ep) {
            // K(r, c) = <r, ep| U (|c> x |e>), global index = sys * env_dim + env
            ComplexMatrix k(sys_dim, sys_dim);
            for (int r = 0; r < sys_dim; ++r)
                for (int c = 0; c < sys_dim; ++c) {
                    Complex entry(0.0, 0.0);
                    for (int a = 0; a < env_dim; ++a)
                        entry += u(r * env_dim + ep, c * env_dim + a) * ket(a);
                    k(r, c) = entry;
                }
            ops.push_back(std::sqrt(p) * k);
        }
    }
    return make_kraus_channel(std::move(ops));
}

KrausChannel thermal_qubit_channel(double s, double q) {
    check_unit_interval(s, "strength");
    if (!(q >= 0.5 && q <= 1.0))
        throw std::domain_error("ground population must be in [1/2, 1]");
    const double c = std::sqrt(1.0 - s * s);
    const Complex is(0.0, s);
    const ComplexMatrix eye = identity(2);
    ComplexMatrix p0 = ComplexMatrix::Zero(2, 2);
    p0(0, 0) = 1.0;
    ComplexMatrix p1 = ComplexMatrix::Zero(2, 2);
    p1(1, 1) = 1.0;
    ComplexMatrix raise = ComplexMatrix::Zero(2, 2);
    raise(0, 1) = 1.0;  // |0><1|
    ComplexMatrix lower = ComplexMatrix::Zero(2, 2);
    lower(1, 0) = 1.0;  // |1><0|
    std::vector<ComplexMatrix> ops;
    ops.push_back(std::sqrt(q) * (c * eye + is * p0));
    ops.push_back(std::sqrt(q) * is * raise);
    ops.push_back(std::sqrt(1.0 - q) * is * lower);
    ops.push_back(std::sqrt(1.0 - q) * (c * eye + is * p1));
    return make_kraus_channel(std::move(ops));
}

DensityMatrix apply_channel(const KrausChannel& ch, const DensityMatrix& rho,
                            const std::string& target) {
    const int pos = rho.layout.index_of(target);
    if (rho.layout.dims[pos] != ch.dim_in)
        throw std::invalid_argument("channel dimension does not match target factor");
    if (ch.dim_in != ch.dim_out)
        throw std::invalid_argument("embedded application requires square channels");
    ComplexMatrix out = ComplexMatrix::Zero(rho.matrix.rows(), rho.matrix.cols());
    for (const ComplexMatrix& k : ch.kraus_ops) {
        const ComplexMatrix big = embed(k, {pos}, rho.layout.dims);
        out += big * rho.matrix * big.adjoint();
    }
    return DensityMatrix{std::move(out), rho.layout};
}

ComplexMatrix apply_channel(const KrausChannel& ch, const ComplexMatrix& rho) {
    if (rho.rows() != ch.dim_in)
        throw std::invalid_argument("channel dimension does not match state");
    ComplexMatrix out = ComplexMatrix::Zero(ch.dim_out, ch.dim_out);
    for (const ComplexMatrix& k : ch.kraus_ops) out += k * rho * k.adjoint();
    return out;
}

KrausChannel compose(const KrausChannel& second, const KrausChannel& first) {
    if (second.dim_in != first.dim_out)
        throw std::invalid_argument("composition dimension mismatch");
    std::vector<ComplexMatrix> ops;
    ops.reserve(second.kraus_ops.size() * first.kraus_ops.size());
    for (const ComplexMatrix& k2 : second.kraus_ops)
        for (const ComplexMatrix& k1 : first.kraus_ops) ops.push_back(k2 * k1);
    return make_kraus_channel(std::move(ops));
}

ComplexMatrix choi_matrix(const KrausChannel& ch) {
    const int d = ch.dim_in;
    ComplexMatrix choi = ComplexMatrix::Zero(d * ch.dim_out, d * ch.dim_out);
    for (const ComplexMatrix& k : ch.kraus_ops) {
        // vectorized K with the input index as the leading factor
        ComplexVector vec(d * ch.dim_out);
        for (int i = 0; i < d; ++i)
            for (int r = 0; r < ch.dim_out; ++r) vec(i * ch.dim_out + r) = k(r, i);
        choi += vec * vec.adjoint();
    }
    return choi / static_cast<double>(d);
}

CptpReport is_cptp(const KrausChannel& ch, double tol) {
    CptpReport report;
    report.completeness_residual = completeness_residual(ch);
    report.choi_min_eigenvalue = eigh(choi_matrix(ch)).eigenvalues.minCoeff();
    report.ok = report.completeness_residual <= tol && report.choi_min_eigenvalue >= -tol;
    return report;
}

GibbsReport is_gibbs_preserving(const KrausChannel& ch, const ComplexMatrix& gibbs,
                                std::mt19937_64& rng, int samples, double tol) {
    GibbsReport report;
    report.fixed_point_residual = (apply_channel(ch, gibbs) - gibbs).cwiseAbs().maxCoeff();
    report.worst_monotonicity_violation = 0.0;
    for (int n = 0; n < samples; ++n) {
        const ComplexMatrix rho = random_density(ch.dim_in, rng);
        const RelativeEntropyResult before = relative_entropy(rho, gibbs);
        if (before.support_violation) continue;
        const RelativeEntropyResult after = relative_entropy(apply_channel(ch, rho), gibbs);
        if (after.support_violation) {
            report.worst_monotonicity_violation = std::numeric_limits<double>::infinity();
            continue;
        }
        const double violation = after.value - before.value;
        if (violation > report.worst_monotonicity_violation)
            report.worst_monotonicity_violation = violation;
    }
    report.ok =
        report.fixed_point_residual <= tol && report.worst_monotonicity_violation <= tol;
    return report;
}

GibbsReport is_gibbs_preserving(const KrausChannel& ch, const ComplexMatrix& gibbs,
                                double tol) {
    std::mt19937_64 rng(default_seed());
    return is_gibbs_preserving(ch, gibbs, rng, 100, tol);
}

EnergyReport is_energy_conserving(const ComplexMatrix& u, const Hamiltonian& h_sys,
                                  const Hamiltonian& h_env, double tol) {
    const int sys_dim = static_cast<int>(h_sys.matrix.rows());
    const int env_dim = static_cast<int>(h_env.matrix.rows());
    if (u.rows() != static_cast<Eigen::Index>(sys_dim) * env_dim)
        throw std::invalid_argument("dilation dimension does not match hamiltonians");
    const ComplexMatrix total =
        kron(h_sys.matrix, identity(env_dim)) + kron(identity(sys_dim), h_env.matrix);
    return is_energy_conserving(u, total, tol);
}

EnergyReport is_energy_conserving(const ComplexMatrix& u, const ComplexMatrix& h_total,
                                  double tol) {
    EnergyReport report;
    report.residual = commutator_norm(u, h_total);
    report.ok = report.residual <= tol;
    return report;
}

KrausChannel partial_cnot_channel(double s) {
    check_unit_interval(s, "strength");
    const double c = std::sqrt(1.0 - s * s);
    const Complex is(0.0, s);
    ComplexMatrix p0 = ComplexMatrix::Zero(2, 2);
    p0(0, 0) = 1.0;
    ComplexMatrix p1 = ComplexMatrix::Zero(2, 2);
    p1(1, 1) = 1.0;
    std::vector<ComplexMatrix> ops;
    ops.push_back(c * identity(2) + is * p0);
    ops.push_back(is * p1);
    return make_kraus_channel(std::move(ops));
}

ComplexMatrix partial_cnot_dilation(double s) {
    check_unit_interval(s, "strength");
    const double theta = std::asin(s);
    ComplexMatrix cnot = ComplexMatrix::Zero(4, 4);
    cnot(0, 0) = 1.0;
    cnot(1, 1) = 1.0;
    cnot(2, 3) = 1.0;
    cnot(3, 2) = 1.0;
    return std::cos(theta) * identity(4) + Complex(0.0, std::sin(theta)) * cnot;
}

std::vector<ComplexMatrix> phase_normalize(std::vector<ComplexMatrix> ops) {
    for (ComplexMatrix& k : ops) {
        int best_r = 0;
        int best_c = 0;
        double best = -1.0;
        for (int r = 0; r < k.rows(); ++r)
            for (int c = 0; c < k.cols(); ++c)
                if (std::abs(k(r, c)) > best) {
                    best = std::abs(k(r, c));
                    best_r = r;
                    best_c = c;
                }
        if (best <= 0.0) continue;
        const Complex phase = k(best_r, best_c) / best;
        k /= phase;
    }
    return ops;
}

}  // namespace switchtherm
