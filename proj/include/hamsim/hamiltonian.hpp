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

#pragma once

#include <vector>

#include "hamsim/eig.hpp"
#include "hamsim/matrix.hpp"

namespace hamsim {

// Hermitian traceless matrix with its spectrum computed up front.
// Construction symmetrizes away float-level noise (deviation < 1e-8 relative)
// and rejects anything worse.
class Hamiltonian {
  public:
    explicit Hamiltonian(CMat m);

    static Hamiltonian zero(std::size_t d) { return Hamiltonian(CMat(d)); }

    std::size_t dim() const { return mat_.dim(); }
    const CMat &mat() const { return mat_; }
    // Non-increasing, sums to zero.
    const std::vector<double> &spectrum() const { return spectrum_; }
    // Column k belongs to spectrum()[k].
    const CMat &eigenvectors() const { return eigvecs_; }
    double fro_norm() const { return mat_.fro_norm(); }
    bool is_zero(double tol = 1e-12) const { return fro_norm() <= tol; }

  private:
    CMat mat_;
    std::vector<double> spectrum_;
    CMat eigvecs_;
};

// Spectrum + eigenbasis accessor in one call (values sorted non-increasing,
// ties broken by original index; H = V diag(λ) V†).
EigResult hermitian_eig(const Hamiltonian &h);

std::vector<double> vec_su(const Hamiltonian &h);

}  // namespace hamsim
