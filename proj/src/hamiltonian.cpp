// Copyright 2026 The hamsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hamsim/hamiltonian.hpp"

#include <cmath>

#include "hamsim/errors.hpp"
#include "hamsim/su_basis.hpp"

namespace hamsim {

Hamiltonian::Hamiltonian(CMat m) : mat_(std::move(m)) {
    if (mat_.dim() == 0) {
        throw ValidationError("hamiltonian: empty matrix");
    }
    if (!mat_.is_finite()) {
        throw ValidationError("hamiltonian: non-finite entries");
    }
    double scale = std::max(1.0, mat_.fro_norm());
    double herm = mat_.hermitian_defect();
    double tr = std::abs(mat_.trace());
    if (herm > 1e-8 * scale) {
        throw ValidationError("hamiltonian: not Hermitian (defect " +
                              std::to_string(herm) + ")");
    }
    if (tr > 1e-8 * scale) {
        throw ValidationError("hamiltonian: not traceless (|tr| " + std::to_string(tr) +
                              ")");
    }
    if (herm > 0.0 || tr > 0.0) {
        // Absorb roundoff: H <- (H + H†)/2 - (tr/d) I.
        CMat sym = mat_.adjoint();
        sym += mat_;
        sym *= 0.5;
        cplx shift = sym.trace() / static_cast<double>(mat_.dim());
        for (std::size_t i = 0; i < mat_.dim(); i++) {
            sym(i, i) -= shift;
        }
        mat_ = std::move(sym);
    }
    EigResult eig = hermitian_eig_matrix(mat_);
    spectrum_ = std::move(eig.values);
    eigvecs_ = std::move(eig.vectors);
    double sum = 0.0;
    for (double v : spectrum_) {
        sum += v;
    }
    if (std::abs(sum) > 1e-9 * scale) {
        throw ToleranceError("hamiltonian: spectrum sum " + std::to_string(sum) +
                             " not zero");
    }
}

EigResult hermitian_eig(const Hamiltonian &h) {
    return EigResult{h.spectrum(), h.eigenvectors()};
}

std::vector<double> vec_su(const Hamiltonian &h) {
    return vec_su(h.mat());
}

}  // namespace hamsim
