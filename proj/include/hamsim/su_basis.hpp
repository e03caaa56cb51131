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

#include "hamsim/matrix.hpp"
#include "hamsim/real_matrix.hpp"

namespace hamsim {

// Generalized Gell-Mann basis of the traceless Hermitian d x d matrices,
// orthonormal under the trace inner product tr(A†B)/d (so tr(σ_α²) = d).
// Order: symmetric pairs, antisymmetric pairs (each lexicographic in (j,k)),
// then the d-1 diagonal matrices.
std::vector<CMat> su_basis(std::size_t d);

inline std::size_t su_dim(std::size_t d) {
    return d * d - 1;
}

// Real coordinates x_α = tr(σ_α H)/d of a Hermitian traceless H; then
// ||x||² = tr(H²)/d and unvec_su inverts the map.
std::vector<double> vec_su(const CMat &h);
CMat unvec_su(const std::vector<double> &x, std::size_t d);

// The (d²-1)x(d²-1) real matrix of A ↦ U†AU in the basis above.
RealMat adjoint_matrix(const CMat &u);

}  // namespace hamsim
