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

// Command-line front end. Every subcommand builds its complete JSON payload
// in memory before a single byte is written, so a failure never leaves a
// truncated file behind. Exit codes: 0 ok, 1 bad input, 2 infeasible or
// criterion not met, 3 tolerance/internal failure, 64 usage.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hamsim/bipartite.hpp"
#include "hamsim/error_basis.hpp"
#include "hamsim/errors.hpp"
#include "hamsim/evolution.hpp"
#include "hamsim/group.hpp"
#include "hamsim/hamiltonian.hpp"
#include "hamsim/io.hpp"
#include "hamsim/majorization.hpp"
#include "hamsim/matrix.hpp"
#include "hamsim/pulse.hpp"
#include "hamsim/rng.hpp"
#include "hamsim/synthesis.hpp"

namespace {

using namespace hamsim;

struct CliResult {
    std::string payload;
    std::string out_path;
    std::string summary;
    int code = 0;
};

std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

Hamiltonian load_hamiltonian(const std::string &path) {
    return Hamiltonian(io::matrix_from_json(io::read_input(path)));
}

MatrixGroup load_group(const std::string &path) {
    return close_group(io::group_generators_from_json(io::read_input(path)));
}

void write_payload(const CliResult &res) {
    if (res.payload.empty()) return;
    if (res.out_path.empty()) {
        std::fwrite(res.payload.data(), 1, res.payload.size(), stdout);
        std::fflush(stdout);
        return;
    }
    std::ofstream f(res.out_path, std::ios::binary);
    if (!f) throw ValidationError("cannot open output file: " + res.out_path);
    f.write(res.payload.data(), static_cast<std::streamsize>(res.payload.size()));
    f.flush();
    if (!f) throw ValidationError("failed writing output file: " + res.out_path);
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"hamsim: pulse-sequence synthesis for Hamiltonian simulation"};
    // Long-only help so short option names stay free for subcommand flags.
    app.set_help_flag("--help", "print this help message and exit");
    app.require_subcommand(1);

    CliResult res;

    // --- basis ----------------------------------------------------------
    auto *c_basis = app.add_subcommand(
        "basis", "Emit the cyclic shift/clock error basis for dimension d");
    auto d_basis = std::make_shared<std::size_t>(0);
    c_basis->add_option("--d", *d_basis, "local dimension")->required();
    c_basis->add_option("--out", res.out_path, "write JSON to this file");
    c_basis->callback([&, d_basis] {
        NiceErrorBasis b = heisenberg_basis(*d_basis);
        res.payload = io::matrices_to_json(b.dim, b.matrices);
        res.summary = "error basis: d=" + std::to_string(b.dim) + ", " +
                      std::to_string(b.matrices.size()) + " unitaries";
    });

    // --- annihilate -----------------------------------------------------
    auto *c_ann = app.add_subcommand(
        "annihilate", "Sequence that averages any Hamiltonian of dimension d to zero");
    auto d_ann = std::make_shared<std::size_t>(0);
    c_ann->add_option("--d", *d_ann, "dimension")->required();
    c_ann->add_option("--out", res.out_path, "write JSON to this file");
    c_ann->callback([&, d_ann] {
        PulseSequence seq = annihilator_sequence(heisenberg_basis(*d_ann));
        res.payload = io::sequence_to_json(seq);
        res.summary = "annihilator: " + std::to_string(seq.size()) +
                      " pulses, overhead " + num(seq.overhead);
    });

    // --- invert ---------------------------------------------------------
    auto *c_inv = app.add_subcommand(
        "invert", "Sequence whose average is -H for any H of dimension d");
    auto d_inv = std::make_shared<std::size_t>(0);
    c_inv->add_option("--d", *d_inv, "dimension")->required();
    c_inv->add_option("--out", res.out_path, "write JSON to this file");
    c_inv->callback([&, d_inv] {
        PulseSequence seq = inversion_sequence(heisenberg_basis(*d_inv));
        res.payload = io::sequence_to_json(seq);
        res.summary = "inversion: " + std::to_string(seq.size()) +
                      " pulses, overhead " + num(seq.overhead);
    });

    // --- decouple -------------------------------------------------------
    auto *c_dec = app.add_subcommand(
        "decouple", "Average away the system side of a joint Hamiltonian");
    auto dec_ds = std::make_shared<std::size_t>(0);
    auto dec_h = std::make_shared<std::string>();
    c_dec->add_option("--d-system", *dec_ds, "system dimension")->required();
    c_dec->add_option("--h", *dec_h, "joint Hamiltonian JSON file")->required();
    c_dec->add_option("--out", res.out_path, "write JSON to this file");
    c_dec->callback([&, dec_ds, dec_h] {
        Hamiltonian h = load_hamiltonian(*dec_h);
        NiceErrorBasis basis = heisenberg_basis(*dec_ds);
        Hamiltonian hb = decouple(basis, h);
        std::size_t db = h.dim() / basis.dim;
        PulseSequence base = annihilator_sequence(basis);
        PulseSequence seq;
        seq.dim = h.dim();
        seq.overhead = base.overhead;
        seq.cyclic = base.cyclic;
        CMat eye_b = CMat::identity(db);
        for (const Pulse &p : base.pulses) seq.pulses.push_back({kron(p.v, eye_b), p.tau});
        res.payload = io::decouple_to_json(seq, hb.mat());
        res.summary = "decoupled: system d=" + std::to_string(basis.dim) +
                      ", bath d=" + std::to_string(db) + ", " +
                      std::to_string(seq.size()) + " pulses";
    });

    // --- check-transformer ----------------------------------------------
    auto *c_chk = app.add_subcommand(
        "check-transformer",
        "Test whether a finite unitary group can reach every traceless target");
    auto chk_group = std::make_shared<std::string>();
    c_chk->add_option("group", *chk_group, "group generators JSON file")->required();
    c_chk->add_option("--out", res.out_path, "write JSON to this file");
    c_chk->callback([&, chk_group] {
        MatrixGroup g = load_group(*chk_group);
        auto [ok, criterion] = is_transformer(g);
        res.payload = io::transformer_to_json(ok, g.order(), criterion);
        res.summary = "group order " + std::to_string(g.order()) + ", criterion " +
                      num(criterion) + " vs 2|G|=" + num(2.0 * double(g.order())) +
                      ", transformer: " + (ok ? "yes" : "no");
        res.code = ok ? 0 : 2;
    });

    // --- synthesize -----------------------------------------------------
    auto *c_syn = app.add_subcommand(
        "synthesize", "Find conjugation weights that average H into the target");
    auto syn_group = std::make_shared<std::string>();
    auto syn_h = std::make_shared<std::string>();
    auto syn_t = std::make_shared<std::string>();
    auto syn_eig = std::make_shared<bool>(false);
    auto *og = c_syn->add_option("--group", *syn_group, "group generators JSON file");
    c_syn->add_flag("--optimal-basis", *syn_eig,
                    "use the eigenbasis construction (optimal overhead)")
        ->excludes(og);
    c_syn->add_option("--h", *syn_h, "Hamiltonian JSON file")->required();
    c_syn->add_option("--target", *syn_t, "target Hamiltonian JSON file")->required();
    c_syn->add_option("--out", res.out_path, "write JSON to this file");
    c_syn->callback([&, syn_group, syn_h, syn_t, syn_eig] {
        if (!*syn_eig && syn_group->empty())
            throw CLI::RequiredError("--group or --optimal-basis");
        Hamiltonian h = load_hamiltonian(*syn_h);
        Hamiltonian ht = load_hamiltonian(*syn_t);
        SimulationPlan plan = *syn_eig ? eigenbasis_synthesis(h, ht)
                                       : lp_synthesize(load_group(*syn_group), h, ht);
        res.payload = io::plan_to_json(plan);
        if (plan.status == PlanStatus::kSuccess) {
            res.summary = "plan: " + std::to_string(plan.terms.size()) +
                          " terms, overhead " + num(plan.overhead) + ", lower bound " +
                          num(plan.lower_bound) + ", residual " + num(plan.residual);
        } else {
            res.summary = "plan: infeasible (target is outside the reachable cone)";
            res.code = 2;
        }
    });

    // --- lower-bound ----------------------------------------------------
    auto *c_lb = app.add_subcommand(
        "lower-bound", "Spectral lower bound on overhead for simulating the target");
    auto lb_h = std::make_shared<std::string>();
    auto lb_t = std::make_shared<std::string>();
    c_lb->add_option("--h", *lb_h, "Hamiltonian JSON file")->required();
    c_lb->add_option("--target", *lb_t, "target Hamiltonian JSON file")->required();
    c_lb->add_option("--out", res.out_path, "write JSON to this file");
    c_lb->callback([&, lb_h, lb_t] {
        double v = majorization_lower_bound(load_hamiltonian(*lb_h), load_hamiltonian(*lb_t));
        res.payload = io::scalar_to_json(v);
        res.summary = "overhead lower bound: " + num(v);
    });

    // --- birkhoff -------------------------------------------------------
    auto *c_bir = app.add_subcommand(
        "birkhoff", "Decompose a doubly stochastic matrix into permutations");
    auto bir_m = std::make_shared<std::string>();
    c_bir->add_option("matrix", *bir_m, "doubly stochastic matrix JSON file")->required();
    c_bir->add_option("--out", res.out_path, "write JSON to this file");
    c_bir->callback([&, bir_m] {
        BirkhoffDecomposition b = birkhoff_decompose(io::real_matrix_from_json(io::read_input(*bir_m)));
        res.payload = io::birkhoff_to_json(b);
        res.summary = "birkhoff: " + std::to_string(b.terms.size()) + " permutations (n=" +
                      std::to_string(b.n) + ")";
    });

    // --- bipartite ------------------------------------------------------
    auto *c_bip = app.add_subcommand(
        "bipartite", "Synthesize a two-party target using local control groups");
    auto bip_t1 = std::make_shared<std::string>();
    auto bip_t2 = std::make_shared<std::string>();
    auto bip_h = std::make_shared<std::string>();
    auto bip_t = std::make_shared<std::string>();
    c_bip->add_option("--t1", *bip_t1, "left-side group generators JSON file")->required();
    c_bip->add_option("--t2", *bip_t2, "right-side group generators JSON file")->required();
    c_bip->add_option("--h", *bip_h, "joint Hamiltonian JSON file")->required();
    c_bip->add_option("--target", *bip_t, "joint target Hamiltonian JSON file")->required();
    c_bip->add_option("--out", res.out_path, "write JSON to this file");
    c_bip->callback([&, bip_t1, bip_t2, bip_h, bip_t] {
        BipartitePlan plan = bipartite_synthesize(load_group(*bip_t1), load_group(*bip_t2),
                                                  load_hamiltonian(*bip_h),
                                                  load_hamiltonian(*bip_t));
        res.payload = io::bipartite_to_json(plan);
        res.summary = "bipartite plan: " + std::to_string(plan.terms.size()) +
                      " terms, overhead " + num(plan.overhead()) + ", residual " +
                      num(plan.residual);
    });

    // --- verify ---------------------------------------------------------
    auto *c_ver = app.add_subcommand(
        "verify", "Scale t down and check the sequenced evolution converges quadratically");
    auto ver_plan = std::make_shared<std::string>();
    auto ver_h = std::make_shared<std::string>();
    auto ver_t0 = std::make_shared<double>(0.0);
    auto ver_halv = std::make_shared<std::size_t>(3);
    c_ver->add_option("--plan", *ver_plan, "plan or pulse-sequence JSON file")->required();
    c_ver->add_option("--h", *ver_h, "Hamiltonian JSON file")->required();
    c_ver->add_option("--t0", *ver_t0, "largest evolution time (default 0.1/|H|)");
    c_ver->add_option("--halvings", *ver_halv, "number of halvings below t0 (default 3)");
    c_ver->add_option("--out", res.out_path, "write JSON to this file");
    c_ver->callback([&, ver_plan, ver_h, ver_t0, ver_halv] {
        std::string text = io::read_input(*ver_plan);
        Hamiltonian h = load_hamiltonian(*ver_h);
        double t0 = *ver_t0 > 0.0 ? *ver_t0 : default_t0(h);
        std::vector<EvolutionReport> reports;
        if (io::json_is_plan(text)) {
            reports = verify_first_order(io::plan_from_json(text, h), t0, *ver_halv);
        } else {
            reports = verify_sequence(io::sequence_from_json(text), h, t0, *ver_halv);
        }
        bool passed = reports_pass(reports);
        bool monotone = reports_monotone(reports);
        res.payload = io::reports_to_json(passed, monotone, reports);
        res.summary = "verify: " + std::to_string(reports.size()) + " times from t0=" +
                      num(t0) + ", quadratic scaling " + (passed ? "ok" : "FAILED") +
                      ", monotone " + (monotone ? "ok" : "FAILED");
        res.code = (passed && monotone) ? 0 : 2;
    });

    // --- random-h -------------------------------------------------------
    auto *c_rnd = app.add_subcommand(
        "random-h", "Emit seeded random traceless Hermitian matrices");
    auto rnd_d = std::make_shared<std::size_t>(0);
    auto rnd_seed = std::make_shared<std::uint64_t>(0);
    auto rnd_count = std::make_shared<std::size_t>(1);
    c_rnd->add_option("--d", *rnd_d, "dimension")->required();
    c_rnd->add_option("--seed", *rnd_seed, "RNG seed (default 0)");
    c_rnd->add_option("--count", *rnd_count, "how many matrices (default 1)");
    c_rnd->add_option("--out", res.out_path, "write JSON to this file");
    c_rnd->callback([&, rnd_d, rnd_seed, rnd_count] {
        if (*rnd_count == 0) throw ValidationError("count must be positive");
        Rng rng(*rnd_seed);
        std::vector<CMat> mats;
        for (std::size_t i = 0; i < *rnd_count; ++i)
            mats.push_back(random_hamiltonian(*rnd_d, rng).mat());
        res.payload = *rnd_count == 1 ? io::matrix_to_json(mats[0])
                                      : io::matrices_to_json(*rnd_d, mats);
        res.summary = "random-h: " + std::to_string(mats.size()) + " matrices, d=" +
                      std::to_string(*rnd_d) + ", seed " + std::to_string(*rnd_seed);
    });

    try {
        app.parse(argc, argv);
        write_payload(res);
        std::cerr << res.summary << '\n';
        return res.code;
    } catch (const CLI::ParseError &e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cerr << "error: " << e.what() << "\n\n" << app.help();
        return 64;
    } catch (const ValidationError &e) {
        std::cerr << "validation error: " << e.what() << '\n';
        return 1;
    } catch (const InfeasibleError &e) {
        std::cerr << "infeasible: " << e.what() << '\n';
        return 2;
    } catch (const ToleranceError &e) {
        std::cerr << "tolerance failure: " << e.what() << '\n';
        return 3;
    } catch (const std::exception &e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 3;
    }
}
