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

#include "hamsim/bipartite.hpp"

#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "hamsim/eig.hpp"
#include "hamsim/error_basis.hpp"
#include "hamsim/errors.hpp"
#include "hamsim/real_matrix.hpp"
#include "hamsim/su_basis.hpp"

namespace hamsim {

namespace {

// Rank-one map on traceless coordinates: source -> target, orthogonal
// complement of source -> 0.
RealMat rank_one_map(const CMat &target, const CMat &source) {
    auto vt = vec_su(target);
    auto vs = vec_su(source);
    double s2 = 0.0;
    for (double v : vs) s2 += v * v;
    RealMat l(vt.size(), vs.size());
    for (std::size_t r = 0; r < vt.size(); r++) {
        for (std::size_t c = 0; c < vs.size(); c++) {
            l(r, c) = vt[r] * vs[c] / s2;
        }
    }
    return l;
}

CMat accumulate_left(const std::vector<BipartiteTerm> &terms, const CMat &a) {
    CMat acc(a.dim());
    for (const auto &t : terms) {
        CMat c = conjugate_by(t.u, a);
        c *= t.tau;
        acc += c;
    }
    return acc;
}

CMat accumulate_right(const std::vector<BipartiteTerm> &terms, const CMat &b) {
    CMat acc(b.dim());
    for (const auto &t : terms) {
        CMat c = conjugate_by(t.v, b);
        c *= t.tau;
        acc += c;
    }
    return acc;
}

}  // namespace

CMat OperatorSchmidt::reconstruct() const {
    CMat acc(coupling.dim());
    for (const auto &t : terms) acc += kron(t.a, t.b);
    return acc;
}

double BipartitePlan::overhead() const {
    double s = 0.0;
    for (const auto &t : terms) s += t.tau;
    return s;
}

double bipartite_residual(const std::vector<BipartiteTerm> &terms,
                          const Hamiltonian &h, const Hamiltonian &h_target) {
    CMat acc(h.dim());
    for (const auto &t : terms) {
        CMat c = conjugate_by(kron(t.u, t.v), h.mat());
        c *= t.tau;
        acc += c;
    }
    return (acc - h_target.mat()).fro_norm();
}

BipartiteSplit operator_schmidt(const Hamiltonian &h, std::size_t d) {
    if (d < 2 || h.dim() != d * d) {
        throw ValidationError("joint dimension " + std::to_string(h.dim()) +
                              " is not the square of " + std::to_string(d));
    }
    CMat am = partial_trace_right(h.mat(), d, d);
    am *= 1.0 / static_cast<double>(d);
    CMat bm = partial_trace_left(h.mat(), d, d);
    bm *= 1.0 / static_cast<double>(d);
    CMat eye = CMat::identity(d);
    CMat coupling = h.mat() - kron(am, eye) - kron(eye, bm);

    auto basis = su_basis(d);
    std::size_t m = su_dim(d);
    RealMat j(m, m);
    for (std::size_t al = 0; al < m; al++) {
        for (std::size_t be = 0; be < m; be++) {
            j(al, be) = trace_inner(kron(basis[al], basis[be]), coupling).real();
        }
    }

    // Singular pairs of J through its (small, symmetric) normal matrix.
    auto eig = symmetric_eig(j.transpose() * j);
    double smax = std::sqrt(std::max(0.0, eig.values.front()));
    OperatorSchmidt schmidt;
    schmidt.coupling = coupling;
    for (std::size_t k = 0; k < m; k++) {
        double s = std::sqrt(std::max(0.0, eig.values[k]));
        if (s <= 1e-10 * smax || s == 0.0) break;
        std::vector<double> v(m);
        for (std::size_t r = 0; r < m; r++) v[r] = eig.vectors(r, k);
        std::vector<double> u = mat_vec(j, v);
        for (double &x : u) x /= s;
        CMat a = unvec_su(u, d);
        a *= s;
        schmidt.terms.push_back({std::move(a), unvec_su(v, d)});
    }

    if (!schmidt.terms.empty()) {
        std::size_t nt = schmidt.terms.size();
        RealMat gram(nt, nt);
        for (std::size_t r = 0; r < nt; r++) {
            for (std::size_t c = 0; c < nt; c++) {
                gram(r, c) =
                    trace_inner(schmidt.terms[r].b, schmidt.terms[c].b).real();
            }
        }
        auto geig = symmetric_eig(gram);
        schmidt.gram_condition = geig.values.front() / geig.values.back();
    }

    double recon_err = (schmidt.reconstruct() - coupling).fro_norm();
    if (recon_err > 1e-9 * std::max(1.0, coupling.fro_norm())) {
        throw ToleranceError("product expansion of the coupling drifted to " +
                             std::to_string(recon_err));
    }
    return BipartiteSplit{Hamiltonian(std::move(am)), Hamiltonian(std::move(bm)),
                          std::move(schmidt)};
}

BipartitePlan simulate_product_term(const MatrixGroup &t1, const MatrixGroup &t2,
                                    const OperatorSchmidt &coupling,
                                    const Hamiltonian &c, const Hamiltonian &d) {
    std::size_t dl = t1.dim;
    if (t2.dim != dl || c.dim() != dl || d.dim() != dl) {
        throw ValidationError("group and factor dimensions differ");
    }
    if (coupling.terms.empty()) {
        throw ValidationError("coupling has no product terms");
    }
    Hamiltonian h_c(coupling.coupling);
    Hamiltonian target(kron(c.mat(), d.mat()));
    BipartitePlan plan{dl, h_c, target, {}, 0.0};
    if (c.is_zero() || d.is_zero()) {
        return plan;
    }

    auto left = decompose_linear_map(t1, rank_one_map(c.mat(), coupling.terms[0].a));
    auto right = decompose_linear_map(t2, rank_one_map(d.mat(), coupling.terms[0].b));
    plan.terms.reserve(left.size() * right.size());
    for (const auto &[dw, di] : left) {
        for (const auto &[fw, fi] : right) {
            plan.terms.push_back({dw * fw, t1.elements[di], t2.elements[fi]});
        }
    }
    plan.residual = bipartite_residual(plan.terms, h_c, target);
    if (plan.residual > 1e-6 * std::max(1.0, target.fro_norm())) {
        throw ToleranceError("product term missed its target by " +
                             std::to_string(plan.residual));
    }
    return plan;
}

BipartitePlan bipartite_synthesize(const MatrixGroup &t1, const MatrixGroup &t2,
                                   const Hamiltonian &h, const Hamiltonian &h_target) {
    std::size_t d = t1.dim;
    if (t2.dim != d) {
        throw ValidationError("the two control groups have different dimensions");
    }
    BipartiteSplit split = operator_schmidt(h, d);
    if (h_target.dim() != h.dim()) {
        throw ValidationError("source and target dimensions differ");
    }
    if (split.coupling.coupling.fro_norm() < 1e-10) {
        throw ValidationError("H has no coupling between the subsystems; nothing "
                              "nonlocal can be simulated from it");
    }
    BipartiteSplit tsplit = operator_schmidt(h_target, d);

    auto basis = su_basis(d);
    std::size_t m = su_dim(d);
    BipartitePlan plan{d, h, h_target, {}, 0.0};
    for (std::size_t al = 0; al < m; al++) {
        for (std::size_t be = 0; be < m; be++) {
            double jt =
                trace_inner(kron(basis[al], basis[be]), tsplit.coupling.coupling)
                    .real();
            if (std::abs(jt) <= 1e-12) continue;
            auto sub = simulate_product_term(t1, t2, split.coupling,
                                             Hamiltonian(jt * basis[al]),
                                             Hamiltonian(basis[be]));
            plan.terms.insert(plan.terms.end(), sub.terms.begin(), sub.terms.end());
        }
    }

    // Locals produced as a side effect of the coupling terms; the remainder
    // has to come from steering H's own local parts.
    CMat a_incidental = accumulate_left(plan.terms, split.a.mat());
    CMat b_incidental = accumulate_right(plan.terms, split.b.mat());
    CMat need_a = tsplit.a.mat() - a_incidental;
    CMat need_b = tsplit.b.mat() - b_incidental;

    NiceErrorBasis ann = heisenberg_basis(d);
    double wg = 1.0 / static_cast<double>(d * d);
    if (need_a.fro_norm() > 1e-10) {
        if (split.a.fro_norm() <= 1e-10) {
            throw InfeasibleError("target needs a local term on the left subsystem "
                                  "but H's left local part is zero");
        }
        // Annihilate the right side while the left group maps a onto the
        // missing piece; coupling and right locals are averaged away exactly.
        auto dec = decompose_linear_map(t1, rank_one_map(need_a, split.a.mat()));
        for (const auto &[w, i] : dec) {
            for (const auto &g : ann.matrices) {
                plan.terms.push_back({w * wg, t1.elements[i], g});
            }
        }
    }
    if (need_b.fro_norm() > 1e-10) {
        if (split.b.fro_norm() <= 1e-10) {
            throw InfeasibleError("target needs a local term on the right subsystem "
                                  "but H's right local part is zero");
        }
        auto dec = decompose_linear_map(t2, rank_one_map(need_b, split.b.mat()));
        for (const auto &[w, i] : dec) {
            for (const auto &g : ann.matrices) {
                plan.terms.push_back({w * wg, g, t2.elements[i]});
            }
        }
    }

    plan.residual = bipartite_residual(plan.terms, h, h_target);
    if (plan.residual > 1e-6 * std::max(1.0, h_target.fro_norm())) {
        throw ToleranceError("bipartite plan missed its target by " +
                             std::to_string(plan.residual));
    }
    return plan;
}

}  // namespace hamsim
