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

struct EigResult {
    std::vector<double> values;  // non-increasing; ties keep original index order
    CMat vectors;                // column k is the eigenvector of values[k]
};

// Cyclic Jacobi for Hermitian matrices. Converges when the off-diagonal
// Frobenius norm drops below 1e-12 * ||H||_F; throws ToleranceError after 100
// full sweeps (pathological input).
EigResult hermitian_eig_matrix(const CMat &h);

// Real symmetric case, solved by embedding into the Hermitian solver.
struct RealEigResult {
    std::vector<double> values;
    RealMat vectors;
};
RealEigResult symmetric_eig(const RealMat &s);

}  // namespace hamsim
