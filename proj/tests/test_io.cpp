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
#include <limits>
#include <string>
#include <vector>

#include "doctest.h"
#include "hamsim/bipartite.hpp"
#include "hamsim/error_basis.hpp"
#include "hamsim/errors.hpp"
#include "hamsim/evolution.hpp"
#include "hamsim/group.hpp"
#include "hamsim/hamiltonian.hpp"
#include "hamsim/io.hpp"
#include "hamsim/majorization.hpp"
#include "hamsim/matrix.hpp"
#include "hamsim/rng.hpp"
#include "hamsim/synthesis.hpp"
#include "test_helpers.hpp"

using namespace hamsim;
using namespace hamsim::testing;

TEST_CASE("matrix serialization is exact and deterministic") {
    CHECK(io::matrix_to_json(pauli_z()) ==
          "{\"d\":2,\"entries\":[[1,0],[0,0],[0,0],[-1,0]]}\n");

    Rng rng(10);
    CMat m = random_unitary(3, rng);
    std::string once = io::matrix_to_json(m);
    CMat back = io::matrix_from_json(once);
    // Bit-exact round trip: all 17 significant digits survive.
    CHECK(back.data() == m.data());
    CHECK(io::matrix_to_json(back) == once);
}

TEST_CASE("awkward doubles survive the round trip") {
    CMat m(2);
    m(0, 0) = cplx{0.1, -0.3};
    m(0, 1) = cplx{1e-17, 1e17};
    m(1, 0) = cplx{-2.2250738585072014e-308, 4.9e-324};  // smallest normal, denormal
    m(1, 1) = cplx{123456789.12345679, -0.0};
    CMat back = io::matrix_from_json(io::matrix_to_json(m));
    CHECK(back.data() == m.data());
}

TEST_CASE("matrix parsing rejects malformed input") {
    CHECK_THROWS_AS((void)io::matrix_from_json("not json"), ValidationError);
    CHECK_THROWS_AS((void)io::matrix_from_json("{}"), ValidationError);
    CHECK_THROWS_AS((void)io::matrix_from_json("{\"d\":2,\"entries\":[[1,0]]}"),
                    ValidationError);  // wrong entry count
    CHECK_THROWS_AS((void)io::matrix_from_json("{\"d\":2,\"entries\":[1,2,3,4]}"),
                    ValidationError);  // entries must be [re,im] pairs
}

TEST_CASE("non-finite values refuse to serialize") {
    CMat m(1);
    m(0, 0) = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS((void)io::matrix_to_json(m), ToleranceError);
    m(0, 0) = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS((void)io::matrix_to_json(m), ToleranceError);
}

TEST_CASE("scalar serialization is a bare number") {
    CHECK(io::scalar_to_json(0.5) == "0.5\n");
    CHECK(io::scalar_to_json(3.0) == "3\n");
    CHECK_THROWS_AS((void)io::scalar_to_json(std::numeric_limits<double>::infinity()),
                    ToleranceError);
}

TEST_CASE("sequence round trip preserves bytes and validity") {
    PulseSequence seq = annihilator_sequence(heisenberg_basis(3));
    std::string once = io::sequence_to_json(seq);
    PulseSequence back = io::sequence_from_json(once);
    back.validate();
    CHECK(back.dim == seq.dim);
    CHECK(back.overhead == seq.overhead);
    CHECK(back.cyclic == seq.cyclic);
    REQUIRE(back.size() == seq.size());
    CHECK(io::sequence_to_json(back) == once);
}

TEST_CASE("sequence parsing enforces the sequence invariants") {
    // Weights that do not sum to 1.
    std::string bad =
        "{\"d\":2,\"overhead\":1,\"cyclic\":false,\"pulses\":["
        "{\"V\":{\"d\":2,\"entries\":[[1,0],[0,0],[0,0],[1,0]]},\"tau\":0.4}]}";
    CHECK_THROWS_AS((void)io::sequence_from_json(bad), ValidationError);
    CHECK_THROWS_AS((void)io::sequence_from_json("{\"d\":2,\"pulses\":[]}"),
                    ValidationError);
}

TEST_CASE("plan round trip recomputes the derived fields") {
    Hamiltonian h(pauli_z());
    SimulationPlan plan = eigenbasis_synthesis(h, Hamiltonian(pauli_x()));
    std::string text = io::plan_to_json(plan);
    SimulationPlan back = io::plan_from_json(text, h);
    CHECK(back.status == PlanStatus::kSuccess);
    CHECK(back.overhead == doctest::Approx(plan.overhead).epsilon(1e-12));
    CHECK(back.lower_bound == doctest::Approx(plan.lower_bound).epsilon(1e-12));
    CHECK(back.residual < 1e-9);
    REQUIRE(back.terms.size() == plan.terms.size());
    CHECK(diff_norm(back.terms[0].u, plan.terms[0].u) == 0.0);
    // The realized target is rebuilt from the terms, not trusted from disk.
    CHECK(diff_norm(back.h_target.mat(), average_hamiltonian(back, h).mat()) < 1e-12);
}

TEST_CASE("plan parsing polices terms") {
    Hamiltonian h(pauli_z());
    // A bipartite-shaped term is not a plan term.
    std::string bip =
        "{\"status\":\"success\",\"d\":2,\"overhead\":1,\"lower_bound\":1,"
        "\"residual\":0,\"terms\":[{\"tau\":1,\"U\":{\"d\":2,\"entries\":"
        "[[1,0],[0,0],[0,0],[1,0]]},\"V\":{\"d\":2,\"entries\":"
        "[[1,0],[0,0],[0,0],[1,0]]}}]}";
    CHECK_THROWS_AS((void)io::plan_from_json(bip, h), ValidationError);
    // Nonpositive weights are rejected.
    std::string neg =
        "{\"status\":\"success\",\"d\":2,\"overhead\":1,\"lower_bound\":1,"
        "\"residual\":0,\"terms\":[{\"tau\":-1,\"U\":{\"d\":2,\"entries\":"
        "[[1,0],[0,0],[0,0],[1,0]]}}]}";
    CHECK_THROWS_AS((void)io::plan_from_json(neg, h), ValidationError);
}

TEST_CASE("plan versus sequence sniffing") {
    PulseSequence seq = annihilator_sequence(heisenberg_basis(2));
    CHECK(!io::json_is_plan(io::sequence_to_json(seq)));
    Hamiltonian h(pauli_z());
    SimulationPlan plan = eigenbasis_synthesis(h, Hamiltonian(pauli_x()));
    CHECK(io::json_is_plan(io::plan_to_json(plan)));
    CHECK_THROWS_AS((void)io::json_is_plan("{\"d\":2}"), ValidationError);
}

TEST_CASE("group generators parse from either shape") {
    MatrixGroup g = sl2f3_transformer();
    std::string full = io::group_to_json(g);
    auto gens = io::group_generators_from_json(full);
    CHECK(close_group(gens).order() == 24);

    // A bare array of matrices works too.
    std::string bare = "[" + io::matrix_to_json(g.elements[g.generators[0]]) + "," +
                       io::matrix_to_json(g.elements[g.generators[1]]) + "]";
    auto gens2 = io::group_generators_from_json(bare);
    CHECK(gens2.size() == 2);
    CHECK_THROWS_AS((void)io::group_generators_from_json("[]"), ValidationError);
}

TEST_CASE("real matrices parse from arrays of rows") {
    RealMat m = io::real_matrix_from_json("[[0.5,0.5],[0.25,0.75]]");
    REQUIRE(m.rows() == 2);
    CHECK(m(1, 0) == 0.25);
    CHECK_THROWS_AS((void)io::real_matrix_from_json("[[1,2],[3]]"), ValidationError);
    CHECK_THROWS_AS((void)io::real_matrix_from_json("[]"), ValidationError);
}

TEST_CASE("birkhoff serialization lists weights and permutations") {
    BirkhoffDecomposition b = birkhoff_decompose(RealMat::identity(2));
    CHECK(io::birkhoff_to_json(b) == "{\"n\":2,\"terms\":[{\"p\":1,\"perm\":[0,1]}]}\n");
}

TEST_CASE("transformer verdicts serialize compactly") {
    CHECK(io::transformer_to_json(true, 24, 48.0) ==
          "{\"is_transformer\":true,\"order\":24,\"criterion\":48}\n");
    CHECK(io::transformer_to_json(false, 8, 32.0) ==
          "{\"is_transformer\":false,\"order\":8,\"criterion\":32}\n");
}

TEST_CASE("verification reports serialize with their verdicts") {
    SimulationPlan plan = eigenbasis_synthesis(Hamiltonian(pauli_z()), Hamiltonian(pauli_x()));
    auto reports = verify_first_order(plan, 0.05, 2);
    std::string text = io::reports_to_json(reports_pass(reports),
                                           reports_monotone(reports), reports);
    CHECK(text.find("\"passed\":true") != std::string::npos);
    CHECK(text.find("\"monotone\":") != std::string::npos);
    CHECK(text.find("\"reports\":[") != std::string::npos);
    CHECK(text.find("\"scaling_ratio\":") != std::string::npos);
    // Three reports for two halvings.
    CHECK(reports.size() == 3);
}

TEST_CASE("decouple output still parses as a sequence") {
    Rng rng(5);
    Hamiltonian h = random_hamiltonian(4, rng);
    NiceErrorBasis b = heisenberg_basis(2);
    Hamiltonian hb = decouple(b, h);
    PulseSequence seq = annihilator_sequence(b);
    // Lift to the joint space the same way the command line does.
    PulseSequence lifted;
    lifted.dim = 4;
    lifted.overhead = seq.overhead;
    lifted.cyclic = seq.cyclic;
    for (const Pulse &p : seq.pulses)
        lifted.pulses.push_back({kron(p.v, CMat::identity(2)), p.tau});
    std::string text = io::decouple_to_json(lifted, hb.mat());
    PulseSequence back = io::sequence_from_json(text);
    back.validate();
    CHECK(back.size() == 4);
    CHECK(text.find("\"h_decoupled\":") != std::string::npos);
}

TEST_CASE("bipartite plans serialize both controls") {
    MatrixGroup g = sl2f3_transformer();
    Hamiltonian h(kron(pauli_x(), pauli_x()) + kron(pauli_y(), pauli_y()) +
                  kron(pauli_z(), pauli_z()));
    Hamiltonian target(cplx{0.5, 0} * kron(pauli_x(), pauli_x()));
    BipartitePlan plan = bipartite_synthesize(g, g, h, target);
    std::string text = io::bipartite_to_json(plan);
    CHECK(text.find("\"U\":") != std::string::npos);
    CHECK(text.find("\"V\":") != std::string::npos);
    CHECK(text.find("\"residual\":") != std::string::npos);
    // Not mistakable for a single-system plan: loading as one must fail.
    CHECK_THROWS_AS((void)io::plan_from_json(text, h), ValidationError);
}

TEST_CASE("read_input surfaces missing files") {
    CHECK_THROWS_AS((void)io::read_input("/no/such/file.json"), ValidationError);
}
