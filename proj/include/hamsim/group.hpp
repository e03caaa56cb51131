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

#include <cstdint>
#include <utility>
#include <vector>

#include "hamsim/matrix.hpp"
#include "hamsim/real_matrix.hpp"

namespace hamsim {

// Finite unitary matrix group stored as an explicit element list. Immutable
// after closure; all queries are pure.
struct MatrixGroup {
    std::size_t dim = 0;
    std::vector<CMat> elements;  // identity is elements[identity_index]
    std::size_t identity_index = 0;
    std::vector<std::size_t> generators;  // indices into elements

    std::size_t order() const { return elements.size(); }
};

// Breadth-first closure of the generated group. Deduplication uses a hash
// grid over entries rounded to 1e-6 (two half-shifted lattices so boundary
// straddling cannot split a true duplicate), each candidate confirmed by
// Frobenius distance < 1e-7. Throws when the closure exceeds max_order
// (irrational rotations etc.) or a generator is not unitary.
MatrixGroup close_group(const std::vector<CMat> &generators, std::size_t max_order = 4096);

// Multiplication table: cayley(i,j) = index of elements[i]*elements[j].
// Computed on demand; doubles as a closure check.
std::vector<std::vector<std::uint32_t>> cayley_table(const MatrixGroup &g);

struct Character {
    std::vector<cplx> values;  // chi(g) = tr(g), one per element
    double fourth_power_sum;   // sum_g |chi(g)|^4
};

Character character(const MatrixGroup &g);

// Character criterion: irreducible natural representation is a transformer
// iff sum |chi|^4 == 2|G|. Returns (verdict, sum). Throws ValidationError
// when the natural representation is reducible (<chi,chi> != 1), where the
// criterion does not apply.
std::pair<bool, double> is_transformer(const MatrixGroup &g);

// Irreducibility of the conjugation action on traceless matrices, tested via
// (1/|G|) sum (|chi(g)|^2 - 1)^2 == 1. Agrees with is_transformer whenever
// the natural representation is irreducible.
bool adjoint_irreducible(const MatrixGroup &g);

// (1/|G|) sum_g U_g† M U_g; equals (tr M / d) I for irreducible groups.
CMat group_average(const MatrixGroup &g, const CMat &m);

// Writes the linear map L (a (d²-1)x(d²-1) real matrix acting on vec_su
// coordinates) as L = sum_j p_j Ad(U_j) with all p_j > 0. Least squares over
// the adjoint matrices, then a uniform shift by max(0, -min q) + 1e-12 —
// valid because the full group average is the zero map on traceless inputs.
std::vector<std::pair<double, std::size_t>> decompose_linear_map(const MatrixGroup &g,
                                                                 const RealMat &l);

// The two explicit transformer groups, built from their literal generator
// matrices and verified to close at orders 24 and 168.
MatrixGroup sl2f3_transformer();
MatrixGroup gl3f2_transformer();

}  // namespace hamsim
