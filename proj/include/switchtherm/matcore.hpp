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

#include <Eigen/Dense>
#include <complex>
#include <functional>
#include <string>
#include <vector>

namespace switchtherm {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// Hermiticity tolerance (max absolute entry of h - h^dag).
inline constexpr double kHermTol = 1e-9;
// Eigenvalues in (-kEigClip, 0) are clipped to zero before logarithms.
inline constexpr double kEigClip = 1e-12;

// Ordered tensor-factor structure annotating a square matrix.
// The global convention is [C, A, M, E1, E2]; absent factors are omitted
// while preserving relative order.
struct FactorLayout {
    std::vector<int> dims;
    std::vector<std::string> labels;

    int total_dim() const;
    int index_of(const std::string& label) const;
    bool has_label(const std::string& label) const;
    FactorLayout sublayout(const std::vector<std::string>& keep) const;
};

FactorLayout make_layout(std::vector<int> dims, std::vector<std::string> labels);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix kron_all(const std::vector<ComplexMatrix>& factors);

// Reduced matrix on the kept factors, in their original relative order.
ComplexMatrix partial_trace(const ComplexMatrix& m, const FactorLayout& layout,
                            const std::vector<std::string>& keep);

// op acting on the listed factor positions (ascending) of a composite space
// with the given dimensions, identity on the rest.
ComplexMatrix embed(const ComplexMatrix& op, const std::vector<int>& positions,
                    const std::vector<int>& dims);

struct EighResult {
    RealVector eigenvalues;      // descending
    ComplexMatrix eigenvectors;  // columns, matching eigenvalue order
};

EighResult eigh(const ComplexMatrix& h, double herm_tol = kHermTol);

// V f(Lambda) V^dag over the spectral decomposition of a Hermitian matrix.
ComplexMatrix herm_func(const ComplexMatrix& h, const std::function<double(double)>& f);

// Largest absolute entry of ab - ba.
double commutator_norm(const ComplexMatrix& a, const ComplexMatrix& b);

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double tol);

ComplexMatrix identity(int dim);
ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();
ComplexMatrix swap_gate();
ComplexVector basis_ket(int k, int dim = 2);
ComplexMatrix projector(const ComplexVector& v);

}  // namespace switchtherm
