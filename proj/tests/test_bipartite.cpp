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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <vector>

#include "doctest.h"
#include "hamsim/bipartite.hpp"
#include "hamsim/errors.hpp"
#include "hamsim/group.hpp"
#include "hamsim/hamiltonian.hpp"
#include "hamsim/matrix.hpp"
#include "hamsim/rng.hpp"
#include "test_helpers.hpp"

using namespace hamsim;
using namespace hamsim::testing;

namespace {

CMat heisenberg_coupling() {
    return kron(pauli_x(), pauli_x()) + kron(pauli_y(), pauli_y()) +
           kron(pauli_z(), pauli_z());
}

}  // namespace

TEST_CASE("schmidt split of a pure product coupling") {
    Hamiltonian h(kron(pauli_z(), pauli_z()));
    BipartiteSplit split = operator_schmidt(h, 2);
    CHECK(split.a.is_zero(1e-12));
    CHECK(split.b.is_zero(1e-12));
    REQUIRE(split.coupling.terms.size() == 1);
    CHECK(diff_norm(kron(split.coupling.terms[0].a, split.coupling.terms[0].b),
                    h.mat()) < 1e-12);
    CHECK(diff_norm(split.coupling.reconstruct(), h.mat()) < 1e-12);
}

TEST_CASE("schmidt split of the heisenberg interaction has three terms") {
    Hamiltonian h(heisenberg_coupling());
    BipartiteSplit split = operator_schmidt(h, 2);
    CHECK(split.a.is_zero(1e-12));
    CHECK(split.b.is_zero(1e-12));
    REQUIRE(split.coupling.terms.size() == 3);
    CHECK(diff_norm(split.coupling.reconstruct(), h.mat()) < 1e-11);
    // Equal singular values: perfectly conditioned right Gram matrix.
    CHECK(split.coupling.gram_condition == doctest::Approx(1.0).epsilon(1e-9));
    // Left factors are mutually trace-orthogonal.
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j)
            CHECK(std::abs(trace_inner(split.coupling.terms[i].a,
                                       split.coupling.terms[j].a)) < 1e-11);
}

TEST_CASE("schmidt split separates pure local terms") {
    Hamiltonian h(kron(pauli_z(), CMat::identity(2)) +
                  kron(CMat::identity(2), pauli_x()));
    BipartiteSplit split = operator_schmidt(h, 2);
    CHECK(diff_norm(split.a.mat(), pauli_z()) < 1e-12);
    CHECK(diff_norm(split.b.mat(), pauli_x()) < 1e-12);
    CHECK(split.coupling.terms.empty());
}

TEST_CASE("schmidt split reassembles arbitrary hamiltonians") {
    Rng rng(3);
    for (std::size_t d : {2u, 3u}) {
        Hamiltonian h = random_hamiltonian(d * d, rng);
        BipartiteSplit split = operator_schmidt(h, d);
        CMat recon = kron(split.a.mat(), CMat::identity(d)) +
                     kron(CMat::identity(d), split.b.mat()) +
                     split.coupling.reconstruct();
        CHECK(diff_norm(recon, h.mat()) < 1e-9 * (1.0 + h.fro_norm()));
        // Coupling partial traces vanish on both sides.
        CMat c = split.coupling.reconstruct();
        CHECK(partial_trace_right(c, d, d).fro_norm() < 1e-10);
        CHECK(partial_trace_left(c, d, d).fro_norm() < 1e-10);
    }
}

TEST_CASE("schmidt split requires a square joint dimension") {
    Rng rng(4);
    CHECK_THROWS_AS((void)operator_schmidt(random_hamiltonian(6, rng), 2), ValidationError);
}

TEST_CASE("product term simulation isolates one schmidt factor") {
    MatrixGroup g = sl2f3_transformer();
    Hamiltonian h(heisenberg_coupling());
    BipartiteSplit split = operator_schmidt(h, 2);

    // Steer the first coupling factor onto 0.4 * (sx x sx).
    Hamiltonian c(cplx{0.4, 0} * pauli_x());
    Hamiltonian d(pauli_x());
    BipartitePlan plan = simulate_product_term(g, g, split.coupling, c, d);
    CHECK(!plan.terms.empty());
    double res = bipartite_residual(plan.terms, h,
                                    Hamiltonian(kron(c.mat(), d.mat())));
    CHECK(res < 1e-6);
}

TEST_CASE("bipartite synthesis realizes coupling-only targets") {
    MatrixGroup g = sl2f3_transformer();
    Hamiltonian h(heisenberg_coupling());
    Hamiltonian target(cplx{0.5, 0} * kron(pauli_x(), pauli_x()));
    BipartitePlan plan = bipartite_synthesize(g, g, h, target);
    CHECK(plan.residual < 1e-6);
    CHECK(plan.overhead() > 0.0);
    CHECK(bipartite_residual(plan.terms, h, target) ==
          doctest::Approx(plan.residual).epsilon(1e-9));
    for (const BipartiteTerm &t : plan.terms) {
        CHECK(t.tau > 0.0);
        CHECK(t.u.unitary_defect() < 1e-9);
        CHECK(t.v.unitary_defect() < 1e-9);
    }
}

TEST_CASE("bipartite synthesis realizes mixed coupling targets") {
    MatrixGroup g = sl2f3_transformer();
    Hamiltonian h(heisenberg_coupling());
    // A target spread over several coefficient entries.
    Hamiltonian target(cplx{0.3, 0} * kron(pauli_x(), pauli_y()) +
                       cplx{0.2, 0} * kron(pauli_z(), pauli_z()) +
                       cplx{-0.1, 0} * kron(pauli_y(), pauli_x()));
    BipartitePlan plan = bipartite_synthesize(g, g, h, target);
    CHECK(plan.residual < 1e-6);
}

TEST_CASE("bipartite synthesis steers leftover local terms") {
    MatrixGroup g = sl2f3_transformer();
    Hamiltonian h(heisenberg_coupling() + cplx{0.5, 0} * kron(pauli_z(), CMat::identity(2)) +
                  cplx{0.4, 0} * kron(CMat::identity(2), pauli_x()));
    Hamiltonian target(cplx{0.25, 0} * kron(pauli_x(), pauli_x()) +
                       cplx{0.3, 0} * kron(pauli_z(), CMat::identity(2)) +
                       cplx{-0.2, 0} * kron(CMat::identity(2), pauli_y()));
    BipartitePlan plan = bipartite_synthesize(g, g, h, target);
    CHECK(plan.residual < 1e-6);
}

TEST_CASE("local targets need matching local resources") {
    MatrixGroup g = sl2f3_transformer();
    Hamiltonian h(heisenberg_coupling());  // no local part at all
    Hamiltonian target(cplx{0.3, 0} * kron(pauli_z(), CMat::identity(2)));
    CHECK_THROWS_AS((void)bipartite_synthesize(g, g, h, target), InfeasibleError);
}

TEST_CASE("a hamiltonian without coupling cannot drive couplings") {
    MatrixGroup g = sl2f3_transformer();
    Hamiltonian h(kron(pauli_z(), CMat::identity(2)));
    Hamiltonian target(cplx{0.5, 0} * kron(pauli_x(), pauli_x()));
    CHECK_THROWS_AS((void)bipartite_synthesize(g, g, h, target), ValidationError);
}

TEST_CASE("bipartite synthesis handles random couplings at d=2") {
    MatrixGroup g = sl2f3_transformer();
    Rng rng(21);
    Hamiltonian h(heisenberg_coupling());
    for (int rep = 0; rep < 3; ++rep) {
        // Random coupling-only target: strip locals from a random joint H.
        Hamiltonian raw = random_hamiltonian(4, rng);
        BipartiteSplit split = operator_schmidt(raw, 2);
        Hamiltonian target(split.coupling.reconstruct());
        BipartitePlan plan = bipartite_synthesize(g, g, h, target);
        CHECK(plan.residual < 1e-6 * std::max(1.0, target.fro_norm()));
    }
}
