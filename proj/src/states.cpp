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
#include <string>

namespace switchtherm {

namespace {

constexpr double kStateTol = 1e-9;
constexpr double kSupportSigmaTol = 1e-12;
constexpr double kSupportRhoTol = 1e-10;
constexpr double kDegeneracyTol = 1e-9;

double clipped_eigenvalue(double v) {
    if (v < 0.0) {
        if (v > -kEigClip) return 0.0;
        throw std::invalid_argument("density matrix eigenvalue below clip threshold: " +
                                    std::to_string(v));
    }
    return v;
}

}  // namespace

Hamiltonian make_hamiltonian(ComplexMatrix m, std::string label) {
    if (m.rows() != m.cols()) throw std::invalid_argument("hamiltonian must be square");
    if ((m - m.adjoint()).cwiseAbs().maxCoeff() > kHermTol)
        throw std::invalid_argument("hamiltonian must be Hermitian");
    return Hamiltonian{std::move(m), std::move(label)};
}

void validate_density(const ComplexMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("density matrix must be square");
    if ((m - m.adjoint()).cwiseAbs().maxCoeff() > kStateTol)
        throw std::invalid_argument("density matrix must be Hermitian");
    if (std::abs(m.trace() - Complex(1.0, 0.0)) > kStateTol)
        throw std::invalid_argument("density matrix must have unit trace");
    const EighResult es = eigh(m);
    if (es.eigenvalues.minCoeff() < -kStateTol)
        throw std::invalid_argument("density matrix must be positive semidefinite");
}

DensityMatrix make_density_matrix(ComplexMatrix m, FactorLayout layout) {
    validate_density(m);
    if (m.rows() != layout.total_dim())
        throw std::invalid_argument("density matrix dimension does not match layout");
    return DensityMatrix{std::move(m), std::move(layout)};
}

DensityMatrix make_qubit_state(ComplexMatrix m, std::string label) {
    return make_density_matrix(std::move(m), make_layout({2}, {std::move(label)}));
}

DensityMatrix reduce(const DensityMatrix& rho, const std::vector<std::string>& keep) {
    ComplexMatrix reduced = partial_trace(rho.matrix, rho.layout, keep);
    return DensityMatrix{std::move(reduced), rho.layout.sublayout(keep)};
}

double q_from_beta(double beta) {
    if (std::isnan(beta) || beta < 0.0)
        throw std::domain_error("inverse temperature must be in [0, +inf]");
    if (std::isinf(beta)) return 1.0;
    // e^beta / (e^beta + e^-beta) = 1 / (1 + e^-2 beta)
    return 1.0 / (1.0 + std::exp(-2.0 * beta));
}

double beta_from_q(double q) {
    if (!(q >= 0.5 && q <= 1.0))
        throw std::domain_error("ground population must be in [1/2, 1]");
    if (q == 1.0) return std::numeric_limits<double>::infinity();
    return 0.5 * std::log(q / (1.0 - q));
}

ThermalSpec ThermalSpec::from_q(double q) {
    beta_from_q(q);  // range check
    ThermalSpec spec;
    spec.q_authoritative_ = true;
    spec.value_ = q;
    return spec;
}

ThermalSpec ThermalSpec::from_beta(double beta) {
    q_from_beta(beta);  // range check
    ThermalSpec spec;
    spec.q_authoritative_ = false;
    spec.value_ = beta;
    return spec;
}

double ThermalSpec::q() const { return q_authoritative_ ? value_ : q_from_beta(value_); }

double ThermalSpec::beta() const { return q_authoritative_ ? beta_from_q(value_) : value_; }

DensityMatrix thermal_state(const Hamiltonian& h, double beta) {
    if (std::isnan(beta) || beta < 0.0)
        throw std::domain_error("inverse temperature must be in [0, +inf]");
    const int dim = static_cast<int>(h.matrix.rows());
    ComplexMatrix gibbs;
    if (std::isinf(beta)) {
        const EighResult es = eigh(h.matrix);
        const double ground = es.eigenvalues.minCoeff();
        gibbs = ComplexMatrix::Zero(dim, dim);
        int count = 0;
        for (int k = 0; k < dim; ++k) {
            if (es.eigenvalues(k) - ground <= kDegeneracyTol) {
                gibbs += projector(es.eigenvectors.col(k));
                ++count;
            }
        }
        gibbs /= static_cast<double>(count);
    } else {
        // Shift by the ground energy before exponentiating to avoid overflow.
        const EighResult es = eigh(h.matrix);
        const double ground = es.eigenvalues.minCoeff();
        gibbs = herm_func(h.matrix, [&](double e) { return std::exp(-beta * (e - ground)); });
        gibbs /= gibbs.trace().real();
    }
    return make_density_matrix(std::move(gibbs), make_layout({dim}, {h.label}));
}

double von_neumann_entropy(const ComplexMatrix& rho, EntropyBase base) {
    const EighResult es = eigh(rho);
    double entropy = 0.0;
    for (int k = 0; k < es.eigenvalues.size(); ++k) {
        const double v = clipped_eigenvalue(es.eigenvalues(k));
        if (v > 0.0) entropy -= v * std::log(v);
    }
    if (base == EntropyBase::two) entropy /= std::log(2.0);
    return entropy;
}

double von_neumann_entropy(const DensityMatrix& rho, EntropyBase base) {
    return von_neumann_entropy(rho.matrix, base);
}

double trace_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("trace distance requires equal dimensions");
    const EighResult es = eigh(a - b);
    return 0.5 * es.eigenvalues.cwiseAbs().sum();
}

RelativeEntropyResult relative_entropy(const ComplexMatrix& rho, const ComplexMatrix& sigma) {
    if (rho.rows() != sigma.rows() || rho.cols() != sigma.cols())
        throw std::invalid_argument("relative entropy requires equal dimensions");
    const EighResult sigma_es = eigh(sigma);
    for (int k = 0; k < sigma_es.eigenvalues.size(); ++k) {
        if (sigma_es.eigenvalues(k) > kSupportSigmaTol) continue;
        const ComplexVector v = sigma_es.eigenvectors.col(k);
        const double weight = (v.adjoint() * rho * v)(0, 0).real();
        if (weight > kSupportRhoTol)
            return RelativeEntropyResult{std::numeric_limits<double>::infinity(), true};
    }
    const EighResult rho_es = eigh(rho);
    double value = 0.0;
    // Tr(rho log rho)
    for (int k = 0; k < rho_es.eigenvalues.size(); ++k) {
        const double v = clipped_eigenvalue(rho_es.eigenvalues(k));
        if (v > 0.0) value += v * std::log(v);
    }
    // -Tr(rho log sigma) over the support of sigma
    for (int k = 0; k < sigma_es.eigenvalues.size(); ++k) {
        const double sv = sigma_es.eigenvalues(k);
        if (sv <= kSupportSigmaTol) continue;
        const ComplexVector v = sigma_es.eigenvectors.col(k);
        const double weight = (v.adjoint() * rho * v)(0, 0).real();
        value -= weight * std::log(sv);
    }
    return RelativeEntropyResult{value, false};
}

RelativeEntropyResult relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma) {
    return relative_entropy(rho.matrix, sigma.matrix);
}

double free_energy(const ComplexMatrix& rho, const Hamiltonian& h, double kT) {
    if (rho.rows() != h.matrix.rows())
        throw std::invalid_argument("state and hamiltonian dimensions differ");
    const double energy = (rho * h.matrix).trace().real();
    return energy - kT * von_neumann_entropy(rho, EntropyBase::e);
}

ComplexMatrix dephase(const ComplexMatrix& rho, const Hamiltonian& h) {
    if (rho.rows() != h.matrix.rows())
        throw std::invalid_argument("state and hamiltonian dimensions differ");
    const EighResult es = eigh(h.matrix);
    const int dim = static_cast<int>(rho.rows());
    ComplexMatrix out = ComplexMatrix::Zero(dim, dim);
    int k = 0;
    while (k < dim) {
        int j = k;
        ComplexMatrix p = ComplexMatrix::Zero(dim, dim);
        // eigh sorts eigenvalues, so degenerate groups are contiguous
        while (j < dim && std::abs(es.eigenvalues(j) - es.eigenvalues(k)) <= kDegeneracyTol) {
            p += projector(es.eigenvectors.col(j));
            ++j;
        }
        out += p * rho * p;
        k = j;
    }
    return out;
}

DensityMatrix dephase(const DensityMatrix& rho, const Hamiltonian& h) {
    return DensityMatrix{dephase(rho.matrix, h), rho.layout};
}

double free_energy_of_coherence(const ComplexMatrix& rho, const Hamiltonian& h, double kT) {
    const double s_dephased = von_neumann_entropy(dephase(rho, h), EntropyBase::e);
    const double s_rho = von_neumann_entropy(rho, EntropyBase::e);
    return kT * (s_dephased - s_rho);
}

ComplexMatrix random_density(int dim, std::mt19937_64& rng) {
    if (dim <= 0) throw std::invalid_argument("dimension must be positive");
    std::normal_distribution<double> gauss(0.0, 1.0);
    ComplexMatrix g(dim, dim);
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c) g(r, c) = Complex(gauss(rng), gauss(rng));
    ComplexMatrix rho = g * g.adjoint();
    rho /= rho.trace().real();
    return rho;
}

std::uint64_t default_seed() {
    const char* env = std::getenv("SWITCHTHERM_SEED");
    if (env == nullptr || *env == '\0') return 42;
    try {
        return std::stoull(env);
    } catch (const std::exception&) {
        throw std::invalid_argument("SWITCHTHERM_SEED must be an unsigned integer");
    }
}

}  // namespace switchtherm
