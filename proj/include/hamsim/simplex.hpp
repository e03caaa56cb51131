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

#include "hamsim/real_matrix.hpp"

namespace hamsim {

enum class LpStatus {
    kOptimal,
    kInfeasible,
    kUnbounded,
};

struct LpSolution {
    LpStatus status = LpStatus::kInfeasible;
    std::vector<double> x;  // length = columns of A; valid when optimal
    double objective = 0.0;
};

// Minimizes c.x subject to A x = b, x >= 0, by two-phase primal simplex with
// Bland's pivoting rule (guarantees termination under degeneracy). Problem
// sizes here are tiny (tens of rows, a few hundred columns), so the dense
// tableau is the whole data structure. Throws ToleranceError if the pivot
// count exceeds a generous cap, which indicates numerical breakdown rather
// than a big problem.
LpSolution solve_lp(const RealMat &a, const std::vector<double> &b,
                    const std::vector<double> &c);

}  // namespace hamsim
