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

#include "hamsim/hamiltonian.hpp"
#include "hamsim/matrix.hpp"
#include "hamsim/pulse.hpp"

namespace hamsim {

// Unitary basis of d x d matrix space indexed by Z_d x Z_d, built from the
// shift S (S e_k = e_{k-1 mod d}) and the clock T = diag(1, w, ..., w^{d-1})
// with w = e^{2pi i/d}. U_{(i,j)} = S^i T^j. All elements except the identity
// are traceless, the family is trace-orthogonal, and products close up to the
// phase factor(g, h), so conjugation averages over the family have strong
// annihilation properties.
struct NiceErrorBasis {
    std::size_t dim = 0;
    cplx omega{1.0, 0.0};
    CMat s;  // cyclic shift
    CMat t;  // diagonal clock
    // U_{(i,j)} in lexicographic (i, j) order; matrices[0] is the identity.
    std::vector<CMat> matrices;

    const CMat &at(std::size_t i, std::size_t j) const;

    // Phase with U_{(i,j)} U_{(k,l)} = factor * U_{(i+k mod d, j+l mod d)}.
    cplx factor(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const;
};

NiceErrorBasis heisenberg_basis(std::size_t d);

// Cyclic sequence of d^2 equally weighted pulses whose frames enumerate the
// basis (identity last). The frame average kills every traceless Hamiltonian.
PulseSequence annihilator_sequence(const NiceErrorBasis &basis);

// Frames enumerate the d^2 - 1 non-identity elements with equal weights
// 1/(d^2 - 1), plus a weightless closing pulse returning to the identity.
// The weighted frame average of H is -H / (d^2 - 1); the overhead field is
// d^2 - 1, so the scaled sequence simulates -H.
PulseSequence inversion_sequence(const NiceErrorBasis &basis);

// r / (-q) with r the largest and q the smallest eigenvalue: no scheme can
// simulate -H cheaper than this relative time. Throws on zero input.
double inversion_lower_bound(const Hamiltonian &h);

// Average of (U_g x I)^dag H (U_g x I) over the whole basis, acting on the
// leading factor of dimension basis.dim. The result is I x H_bath with
// H_bath = tr_system(H)/d: all system and coupling terms are removed.
Hamiltonian decouple(const NiceErrorBasis &basis, const Hamiltonian &h_joint);

// Length-d cyclic sequence averaging H to zero using only the shift in H's
// own eigenbasis: every pulse is W S W^dag. Throws on zero input.
PulseSequence cyclic_switch_off(const Hamiltonian &h);

}  // namespace hamsim
