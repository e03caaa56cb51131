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

#include <cstddef>
#include <vector>

#include "hamsim/real_matrix.hpp"

namespace hamsim {

// True when x is majorized by y (x ≺ y): descending prefix sums of x never
// exceed those of y and the totals agree, all within tol.
bool is_majorized_by(const std::vector<double> &x, const std::vector<double> &y,
                     double tol);

// Doubly stochastic D with D y = x, for x ≺ y. Built as a product of at most
// n-1 two-coordinate averaging steps on the sorted vectors, conjugated back
// by the sorting permutations. Entries are exactly nonnegative. Throws
// ValidationError when x ≺ y fails beyond 1e-9.
RealMat majorization_transfer(const std::vector<double> &x,
                              const std::vector<double> &y);

struct BirkhoffTerm {
    double p = 0.0;
    std::vector<std::size_t> perm;  // row i carries a 1 in column perm[i]
};

struct BirkhoffDecomposition {
    std::size_t n = 0;
    std::vector<BirkhoffTerm> terms;
    RealMat source;

    RealMat reconstruct() const;
};

RealMat permutation_matrix(const std::vector<std::size_t> &perm);

// Convex decomposition of a doubly stochastic matrix into permutations:
// greedy peeling (perfect matching on the positive support, subtract the
// smallest matched entry) followed by affine-dependence pruning down to at
// most (n-1)^2 + 1 terms. Weights sum to 1 within 1e-10 and the terms
// reconstruct the input within 1e-10 entrywise.
BirkhoffDecomposition birkhoff_decompose(const RealMat &d);

}  // namespace hamsim
