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

#include "switchtherm/matcore.hpp"

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/KroneckerProduct>

#include <algorithm>
#include <stdexcept>

namespace switchtherm {

namespace {

// Factor indices of every global index, row-major over layout dims.
std::vector<std::vector<int>> digit_table(const std::vector<int>& dims) {
    int total = 1;
    for (int d : dims) total *= d;
    std::vector<std::vector<int>> table(total, std::vector<int>(dims.size()));
    for (int g = 0; g < total; ++g) {
        int rem = g;
        for (int i = static_cast<int>(dims.size()) - 1; i >= 0; --i) {
            table[g][i] = rem % dims[i];
            rem /= dims[i];
        }
    }
    return table;
}

}  // namespace

int FactorLayout::total_dim() const {
    int total = 1;
    for (int d : dims) total *= d;
    return total;
}

int FactorLayout::index_of(const std::string& label) const {
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i] == label) return static_cast<int>(i);
    }
    throw std::invalid_argument("unknown subsystem label: " + label);
}

bool FactorLayout::has_label(const std::string& label) const {
    return std::find(labels.begin(), labels.end(), label) != labels.end();
}

FactorLayout FactorLayout::sublayout(const std::vector<std::string>& keep) const {
    FactorLayout out;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (std::find(keep.begin(), keep.end(), labels[i]) != keep.end()) {
            out.dims.push_back(dims[i]);
            out.labels.push_back(labels[i]);
        }
    }
    for (const auto& k : keep) {
        if (!has_label(k)) throw std::invalid_argument("unknown subsystem label: " + k);
    }
    return out;
}

FactorLayout make_layout(std::vector<int> dims, std::vector<std::string> labels) {
    if (dims.size() != labels.size()) {
        throw std::invalid_argument("layout dims and labels differ in length");
    }
    for (std::size_t i = 0; i < labels.size(); ++i) {
        for (std::size_t j = i + 1; j < labels.size(); ++j) {
            if (labels[i] == labels[j]) {
                throw std::invalid_argument("duplicate subsystem label: " + labels[i]);
            }
        }
        if (dims[i] <= 0) throw std::invalid_argument("nonpositive factor dimension");
    }
    return FactorLayout{std::move(dims), std::move(labels)};
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    return Eigen::kroneckerProduct(a, b);
}

ComplexMatrix kron_all(const std::vector<ComplexMatrix>& factors) {
    ComplexMatrix out = ComplexMatrix::Identity(1, 1);
    for (const auto& f : factors) out = kron(out, f);
    return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, const FactorLayout& layout,
                            const std::vector<std::string>& keep) {
    if (m.rows() != m.cols() || m.rows() != layout.total_dim()) {
        throw std::invalid_argument("matrix dimension inconsistent with layout");
    }
    if (keep.empty()) throw std::invalid_argument("keep set must be nonempty");

    const int n = static_cast<int>(layout.dims.size());
    std::vector<bool> kept(n, false);
    for (const auto& k : keep) kept[layout.index_of(k)] = true;

    std::vector<int> keep_pos;
    std::vector<int> rest_pos;
    for (int i = 0; i < n; ++i) (kept[i] ? keep_pos : rest_pos).push_back(i);

    int dk = 1;
    for (int i : keep_pos) dk *= layout.dims[i];

    const auto digits = digit_table(layout.dims);
    const int total = layout.total_dim();
    ComplexMatrix out = ComplexMatrix::Zero(dk, dk);
    for (int g = 0; g < total; ++g) {
        for (int h = 0; h < total; ++h) {
            bool diagonal_on_rest = true;
            for (int r : rest_pos) {
                if (digits[g][r] != digits[h][r]) { diagonal_on_rest = false; break; }
            }
            if (!diagonal_on_rest) continue;
            int ro = 0, co = 0;
            for (int i : keep_pos) {
                ro = ro * layout.dims[i] + digits[g][i];
                co = co * layout.dims[i] + digits[h][i];
            }
            out(ro, co) += m(g, h);
        }
    }
    return out;
}

ComplexMatrix embed(const ComplexMatrix& op, const std::vector<int>& positions,
                    const std::vector<int>& dims) {
    const int n = static_cast<int>(dims.size());
    int dop = 1;
    for (int p : positions) {
        if (p < 0 || p >= n) throw std::invalid_argument("embed position out of range");
        dop *= dims[p];
    }
    if (op.rows() != op.cols() || op.rows() != dop) {
        throw std::invalid_argument("operator dimension inconsistent with positions");
    }
    for (std::size_t i = 1; i < positions.size(); ++i) {
        if (positions[i] <= positions[i - 1]) {
            throw std::invalid_argument("embed positions must be strictly ascending");
        }
    }

    std::vector<bool> on(n, false);
    for (int p : positions) on[p] = true;
    std::vector<int> rest_pos;
    for (int i = 0; i < n; ++i) {
        if (!on[i]) rest_pos.push_back(i);
    }

    const auto digits = digit_table(dims);
    int total = 1;
    for (int d : dims) total *= d;
    ComplexMatrix out = ComplexMatrix::Zero(total, total);
    for (int g = 0; g < total; ++g) {
        for (int h = 0; h < total; ++h) {
            bool diagonal_on_rest = true;
            for (int r : rest_pos) {
                if (digits[g][r] != digits[h][r]) { diagonal_on_rest = false; break; }
            }
            if (!diagonal_on_rest) continue;
            int ro = 0, co = 0;
            for (int p : positions) {
                ro = ro * dims[p] + digits[g][p];
                co = co * dims[p] + digits[h][p];
            }
            out(g, h) = op(ro, co);
        }
    }
    return out;
}

EighResult eigh(const ComplexMatrix& h, double herm_tol) {
    if (h.rows() != h.cols()) throw std::invalid_argument("eigh requires a square matrix");
    const double asym = max_abs_diff(h, h.adjoint());
    if (asym > herm_tol) {
        throw std::invalid_argument("eigh input is not Hermitian (max asymmetry " +
                                    std::to_string(asym) + ")");
    }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver((h + h.adjoint()) / 2.0);
    if (solver.info() != Eigen::Success) throw std::runtime_error("eigh failed to converge");

    const int n = static_cast<int>(h.rows());
    EighResult out;
    out.eigenvalues = RealVector(n);
    out.eigenvectors = ComplexMatrix(n, n);
    for (int i = 0; i < n; ++i) {
        out.eigenvalues(i) = solver.eigenvalues()(n - 1 - i);
        out.eigenvectors.col(i) = solver.eigenvectors().col(n - 1 - i);
    }
    return out;
}

ComplexMatrix herm_func(const ComplexMatrix& h, const std::function<double(double)>& f) {
    const EighResult ev = eigh(h);
    const int n = static_cast<int>(h.rows());
    ComplexMatrix diag = ComplexMatrix::Zero(n, n);
    for (int i = 0; i < n; ++i) diag(i, i) = f(ev.eigenvalues(i));
    return ev.eigenvectors * diag * ev.eigenvectors.adjoint();
}

double commutator_norm(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("commutator_norm dimension mismatch");
    }
    return (a * b - b * a).cwiseAbs().maxCoeff();
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("max_abs_diff dimension mismatch");
    }
    if (a.size() == 0) return 0.0;
    return (a - b).cwiseAbs().maxCoeff();
}

bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    return max_abs_diff(a, b) <= tol;
}

ComplexMatrix identity(int dim) { return ComplexMatrix::Identity(dim, dim); }

ComplexMatrix pauli_x() {
    ComplexMatrix m(2, 2);
    m << 0, 1, 1, 0;
    return m;
}

ComplexMatrix pauli_y() {
    ComplexMatrix m(2, 2);
    m << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
    return m;
}

ComplexMatrix pauli_z() {
    ComplexMatrix m(2, 2);
    m << 1, 0, 0, -1;
    return m;
}

ComplexMatrix swap_gate() {
    ComplexMatrix m = ComplexMatrix::Zero(4, 4);
    m(0, 0) = 1;
    m(1, 2) = 1;
    m(2, 1) = 1;
    m(3, 3) = 1;
    return m;
}

ComplexVector basis_ket(int k, int dim) {
    if (k < 0 || k >= dim) throw std::invalid_argument("basis index out of range");
    ComplexVector v = ComplexVector::Zero(dim);
    v(k) = 1.0;
    return v;
}

ComplexMatrix projector(const ComplexVector& v) { return v * v.adjoint(); }

}  // namespace switchtherm
