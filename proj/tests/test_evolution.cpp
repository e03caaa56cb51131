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
#include "hamsim/error_basis.hpp"
#include "hamsim/errors.hpp"
#include "hamsim/evolution.hpp"
#include "hamsim/expm.hpp"
#include "hamsim/hamiltonian.hpp"
#include "hamsim/matrix.hpp"
#include "hamsim/pulse.hpp"
#include "hamsim/rng.hpp"
#include "hamsim/synthesis.hpp"
#include "test_helpers.hpp"

using namespace hamsim;
using namespace hamsim::testing;

TEST_CASE("single-pulse evolution is one exponential after one kick") {
    Hamiltonian h(pauli_z());
    PulseSequence seq;
    seq.dim = 2;
    seq.overhead = 2.0;
    seq.cyclic = false;
    seq.pulses.push_back({pauli_x(), 1.0});

    double t = 0.37;
    CMat got = evolve_sequence(seq, h, t);
    CMat want = expm(cplx{0, -2.0 * t} * h.mat()) * pauli_x();
    CHECK(diff_norm(got, want) < 1e-13);
}

TEST_CASE("piecewise product applies pulses first-to-last") {
    Rng rng(1);
    Hamiltonian h = random_hamiltonian(2, rng);
    PulseSequence seq;
    seq.dim = 2;
    seq.overhead = 1.0;
    seq.cyclic = false;
    seq.pulses.push_back({pauli_x(), 0.25});
    seq.pulses.push_back({pauli_z(), 0.75});

    double t = 0.2;
    CMat u1 = expm(cplx{0, -0.25 * t} * h.mat());
    CMat u2 = expm(cplx{0, -0.75 * t} * h.mat());
    CMat want = u2 * (pauli_z() * (u1 * pauli_x()));
    CHECK(diff_norm(evolve_sequence(seq, h, t), want) < 1e-13);
}

TEST_CASE("weightless closing pulses contribute only their kick") {
    NiceErrorBasis b = heisenberg_basis(2);
    PulseSequence seq = inversion_sequence(b);
    REQUIRE(seq.pulses.back().tau == 0.0);
    Rng rng(2);
    Hamiltonian h = random_hamiltonian(2, rng);
    double t = 0.05;
    CMat full = evolve_sequence(seq, h, t);
    // Dropping the closing pulse and reapplying it by hand gives the same.
    PulseSequence trimmed = seq;
    CMat closing = trimmed.pulses.back().v;
    trimmed.pulses.pop_back();
    trimmed.cyclic = false;
    CHECK(diff_norm(full, closing * evolve_sequence(trimmed, h, t)) < 1e-13);
}

TEST_CASE("evolution validates inputs") {
    NiceErrorBasis b = heisenberg_basis(2);
    PulseSequence seq = annihilator_sequence(b);
    Rng rng(3);
    Hamiltonian h2 = random_hamiltonian(2, rng);
    Hamiltonian h3 = random_hamiltonian(3, rng);
    CHECK_THROWS_AS((void)evolve_sequence(seq, h3, 0.1), ValidationError);
    CHECK_THROWS_AS((void)evolve_sequence(seq, h2, 0.0), ValidationError);
    CHECK_THROWS_AS((void)evolve_sequence(seq, h2, -1.0), ValidationError);
}

TEST_CASE("annihilator verification shows quadratic convergence") {
    Rng rng(11);
    for (std::size_t d : {2u, 3u}) {
        Hamiltonian h = random_hamiltonian(d, rng);
        PulseSequence seq = annihilator_sequence(heisenberg_basis(d));
        auto reports = verify_sequence(seq, h, default_t0(h), 3);
        REQUIRE(reports.size() == 4);
        CHECK(reports_pass(reports));
        CHECK(reports_monotone(reports));
        // The average is zero: exact evolution is the identity.
        CHECK(diff_norm(reports[0].exact, CMat::identity(d)) < 1e-12);
        for (std::size_t k = 0; k + 1 < reports.size(); ++k)
            CHECK(reports[k].t == doctest::Approx(2.0 * reports[k + 1].t));
        CHECK(reports.back().scaling_ratio == 0.0);
    }
}

TEST_CASE("inversion verification passes with ratios near four") {
    Rng rng(13);
    Hamiltonian h = random_hamiltonian(2, rng);
    PulseSequence seq = inversion_sequence(heisenberg_basis(2));
    auto reports = verify_sequence(seq, h, default_t0(h), 3);
    CHECK(reports_pass(reports));
    CHECK(reports_monotone(reports));
    bool informative = false;
    for (std::size_t k = 0; k + 1 < reports.size(); ++k) {
        if (reports[k].error_aligned >= 1e-13) {
            CHECK(reports[k].scaling_ratio > 3.0);
            CHECK(reports[k].scaling_ratio < 5.0);
            informative = true;
        }
    }
    CHECK(informative);  // d=2 inversion genuinely has second-order error
    for (const auto &r : reports) {
        CHECK(r.exact.unitary_defect() < 1e-9);
        CHECK(r.sequenced.unitary_defect() < 1e-9);
        CHECK(r.error_aligned <= r.error + 1e-15);
    }
}

TEST_CASE("plan verification matches its realized target") {
    SimulationPlan plan = eigenbasis_synthesis(Hamiltonian(pauli_z()), Hamiltonian(pauli_x()));
    auto reports = verify_first_order(plan, 0.05, 3);
    CHECK(reports_pass(reports));
    CHECK(reports_monotone(reports));
    // Exact side evolves under the realized average.
    CMat gen = average_hamiltonian(plan, plan.h).mat();
    CHECK(diff_norm(reports[0].exact, expm(cplx{0, -reports[0].t} * gen)) < 1e-12);
}

TEST_CASE("first-order defect shrinks linearly in t") {
    Rng rng(17);
    Hamiltonian h = random_hamiltonian(2, rng);
    Hamiltonian target = random_hamiltonian(2, rng);
    SimulationPlan plan = eigenbasis_synthesis(h, target);
    PulseSequence seq = plan_to_sequence(plan);
    Hamiltonian realized = average_hamiltonian(plan, h);

    auto defect = [&](double t) {
        CMat u = evolve_sequence(seq, h, t);
        CMat lin = cplx{1.0 / t, 0} * (u - CMat::identity(2));
        return diff_norm(lin, cplx{0, -1} * realized.mat());
    };
    double d3 = defect(1e-3), d4 = defect(1e-4);
    CHECK(d3 < 0.05);
    CHECK(d4 * 5.0 < d3);  // one decade of t buys at least 5x accuracy
}

TEST_CASE("pass and monotone judgments on synthetic reports") {
    auto mk = [](double e0, double e1) {
        EvolutionReport a, b;
        a.error_aligned = e0;
        b.error_aligned = e1;
        a.scaling_ratio = e1 > 0.0 ? e0 / e1 : 0.0;
        return std::vector<EvolutionReport>{a, b};
    };
    CHECK(reports_pass(mk(4e-6, 1e-6)));
    CHECK(!reports_pass(mk(1e-5, 1e-6)));   // ratio 10: not second order
    CHECK(!reports_pass(mk(2e-6, 1e-6)));   // ratio 2: too shallow
    CHECK(reports_pass(mk(1e-14, 5e-15)));  // both at machine floor
    CHECK(reports_monotone(mk(4e-6, 1e-6)));
    CHECK(!reports_monotone(mk(1e-6, 4e-6)));
}

TEST_CASE("verification validates its knobs") {
    SimulationPlan plan = eigenbasis_synthesis(Hamiltonian(pauli_z()), Hamiltonian(pauli_x()));
    CHECK_THROWS_AS((void)verify_first_order(plan, 0.0, 3), ValidationError);
    CHECK_THROWS_AS((void)verify_first_order(plan, 0.1, 1), ValidationError);

    SimulationPlan infeasible{PlanStatus::kInfeasible, Hamiltonian(pauli_z()),
                              Hamiltonian(pauli_x()), {}, 0.0, 0.0, 1.0};
    CHECK_THROWS_AS((void)verify_first_order(infeasible, 0.1, 3), ValidationError);
}

TEST_CASE("default starting time is a tenth of the inverse energy scale") {
    Hamiltonian h(cplx{2, 0} * pauli_z());  // frobenius norm 2*sqrt(2)
    CHECK(default_t0(h) == doctest::Approx(0.1 / (2.0 * std::sqrt(2.0))));
    CHECK(default_t0(Hamiltonian::zero(2)) == doctest::Approx(0.1));
}

TEST_CASE("switch-off sequence freezes the evolution") {
    Rng rng(23);
    Hamiltonian h = random_hamiltonian(4, rng);
    PulseSequence seq = cyclic_switch_off(h);
    double t = default_t0(h);
    CMat u = evolve_sequence(seq, h, t);
    // Average is zero, so the stroboscopic evolution is I + O(t²).
    CHECK(diff_norm(u, CMat::identity(4)) < 10.0 * t * t * h.fro_norm() * h.fro_norm());
    auto reports = verify_sequence(seq, h, t, 3);
    CHECK(reports_pass(reports));
}
