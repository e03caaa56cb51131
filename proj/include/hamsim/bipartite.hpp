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

#include "hamsim/group.hpp"
#include "hamsim/hamiltonian.hpp"
#include "hamsim/matrix.hpp"

namespace hamsim {

struct SchmidtTerm {
    CMat a;  // left factor, Hermitian traceless
    CMat b;  // right factor, Hermitian traceless
};

// Coupling part of a two-sided Hamiltonian written as sum A_j x B_j with the
// A_j mutually orthogonal and the B_j orthonormal-up-to-scale (so linearly
// independent), obtained from an SVD of the coefficient matrix.
struct OperatorSchmidt {
    std::vector<SchmidtTerm> terms;
    CMat coupling;                // sum of the terms, kept for residual checks
    double gram_condition = 1.0;  // eigenvalue spread of the right Gram matrix

    CMat reconstruct() const;
};

// Split of a Hamiltonian on d*d into left local a, right local b and the
// remaining pure coupling, H = a x I + I x b + coupling.
struct BipartiteSplit {
    Hamiltonian a;
    Hamiltonian b;
    OperatorSchmidt coupling;
};

BipartiteSplit operator_schmidt(const Hamiltonian &h, std::size_t d);

struct BipartiteTerm {
    double tau = 0.0;
    CMat u;  // left control
    CMat v;  // right control
};

struct BipartitePlan {
    std::size_t dim_local = 0;  // each side; the joint dimension is its square
    Hamiltonian h;
    Hamiltonian h_target;
    std::vector<BipartiteTerm> terms;
    double residual = 0.0;

    double overhead() const;
};

// ||sum tau (UxV)^dag H (UxV) - target||_F.
double bipartite_residual(const std::vector<BipartiteTerm> &terms,
                          const Hamiltonian &h, const Hamiltonian &h_target);

// Turns the first Schmidt term of the coupling into C x D: the left group
// realizes a map sending A_1 to C (zero elsewhere), the right group one
// sending B_1 to D and killing the other B_j; the product weights d_i * f_j
// realize C x D from the full coupling.
BipartitePlan simulate_product_term(const MatrixGroup &t1, const MatrixGroup &t2,
                                    const OperatorSchmidt &coupling,
                                    const Hamiltonian &c, const Hamiltonian &d);

// Realizes an arbitrary target on d*d from H (which must have nonzero
// coupling): every target coupling coefficient becomes a product term, and
// leftover local terms are produced by annihilating one side while steering
// the other side's local part through the group.
BipartitePlan bipartite_synthesize(const MatrixGroup &t1, const MatrixGroup &t2,
                                   const Hamiltonian &h, const Hamiltonian &h_target);

}  // namespace hamsim
