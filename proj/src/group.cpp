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

#include "hamsim/group.hpp"

#include <cmath>
#include <unordered_map>

#include "hamsim/errors.hpp"
#include "hamsim/su_basis.hpp"

namespace hamsim {

namespace {

constexpr double kGrid = 1e-6;     // dedup cell size
constexpr double kMatchTol = 1e-7;  // Frobenius confirmation

// Hash grid over matrix entries rounded to the kGrid lattice. A second
// lattice shifted by half a cell catches entries that straddle a boundary of
// the first; a pair of matrices within kMatchTol of each other can only be
// missed if, across entries, each lattice has at least one straddler — with
// jitter ~1e-14 against cells of 1e-6 that chance is negligible, and the
// closure-order checks downstream would expose it anyway.
class DedupIndex {
  public:
    std::size_t find(const std::vector<CMat> &pool, const CMat &m) const {
        for (int lat = 0; lat < 2; lat++) {
            auto it = maps_[lat].find(key(m, lat));
            if (it == maps_[lat].end()) {
                continue;
            }
            for (std::size_t idx : it->second) {
                if ((pool[idx] - m).fro_norm() <= kMatchTol) {
                    return idx;
                }
            }
        }
        return npos;
    }

    void insert(const CMat &m, std::size_t idx) {
        maps_[0][key(m, 0)].push_back(idx);
        maps_[1][key(m, 1)].push_back(idx);
    }

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  private:
    static std::uint64_t key(const CMat &m, int lattice) {
        const double shift = lattice == 0 ? 0.0 : 0.5;
        std::uint64_t h = 1469598103934665603ull;  // FNV-1a
        auto mix = [&h, shift](double x) {
            auto cell = static_cast<std::uint64_t>(std::llround(x / kGrid + shift));
            for (int b = 0; b < 8; b++) {
                h ^= (cell >> (8 * b)) & 0xffu;
                h *= 1099511628211ull;
            }
        };
        for (const cplx &z : m.data()) {
            mix(z.real());
            mix(z.imag());
        }
        return h;
    }

    std::unordered_map<std::uint64_t, std::vector<std::size_t>> maps_[2];
};

}  // namespace

MatrixGroup close_group(const std::vector<CMat> &generators, std::size_t max_order) {
    if (generators.empty()) {
        throw ValidationError("close_group: no generators");
    }
    const std::size_t d = generators[0].dim();
    for (const CMat &g : generators) {
        if (g.dim() != d) {
            throw ValidationError("close_group: generators of mixed dimension");
        }
        if (g.unitary_defect() > 1e-9) {
            throw ValidationError("close_group: generator is not unitary (defect " +
                                  std::to_string(g.unitary_defect()) + ")");
        }
    }

    MatrixGroup grp;
    grp.dim = d;
    grp.elements.push_back(CMat::identity(d));
    grp.identity_index = 0;

    DedupIndex index;
    index.insert(grp.elements[0], 0);

    // Record generator indices (deduplicated; a generator may equal identity
    // or another generator).
    for (const CMat &g : generators) {
        std::size_t at = index.find(grp.elements, g);
        if (at == DedupIndex::npos) {
            at = grp.elements.size();
            grp.elements.push_back(g);
            index.insert(g, at);
        }
        grp.generators.push_back(at);
    }

    // Breadth-first: right-multiply every discovered element by every
    // generator. Finiteness makes inverses reachable for free.
    for (std::size_t head = 0; head < grp.elements.size(); head++) {
        for (std::size_t gi : grp.generators) {
            CMat prod = grp.elements[head] * grp.elements[gi];
            if (index.find(grp.elements, prod) != DedupIndex::npos) {
                continue;
            }
            if (grp.elements.size() >= max_order) {
                throw ValidationError("close_group: order exceeds max_order = " +
                                      std::to_string(max_order));
            }
            std::size_t at = grp.elements.size();
            grp.elements.push_back(std::move(prod));
            index.insert(grp.elements.back(), at);
        }
    }
    return grp;
}

std::vector<std::vector<std::uint32_t>> cayley_table(const MatrixGroup &g) {
    DedupIndex index;
    for (std::size_t i = 0; i < g.elements.size(); i++) {
        index.insert(g.elements[i], i);
    }
    const std::size_t n = g.order();
    std::vector<std::vector<std::uint32_t>> table(n, std::vector<std::uint32_t>(n, 0));
    for (std::size_t i = 0; i < n; i++) {
        for (std::size_t j = 0; j < n; j++) {
            CMat prod = g.elements[i] * g.elements[j];
            std::size_t k = index.find(g.elements, prod);
            if (k == DedupIndex::npos) {
                throw ToleranceError("cayley_table: product of elements " +
                                     std::to_string(i) + "," + std::to_string(j) +
                                     " left the element list (closure violated)");
            }
            table[i][j] = static_cast<std::uint32_t>(k);
        }
    }
    return table;
}

Character character(const MatrixGroup &g) {
    Character chi;
    chi.values.reserve(g.order());
    double sum4 = 0.0;
    for (const CMat &u : g.elements) {
        cplx t = u.trace();
        chi.values.push_back(t);
        double a2 = std::norm(t);
        sum4 += a2 * a2;
    }
    chi.fourth_power_sum = sum4;
    return chi;
}

std::pair<bool, double> is_transformer(const MatrixGroup &g) {
    Character chi = character(g);
    const double n = static_cast<double>(g.order());
    double sum2 = 0.0;
    for (const cplx &v : chi.values) {
        sum2 += std::norm(v);
    }
    double inner = sum2 / n;  // <chi, chi>
    if (std::abs(inner - 1.0) > 1e-6) {
        throw ValidationError(
            "is_transformer: natural representation is reducible (<chi,chi> = " +
            std::to_string(inner) + "), criterion does not apply");
    }
    bool verdict = std::abs(chi.fourth_power_sum - 2.0 * n) <= 1e-6 * n;
    return {verdict, chi.fourth_power_sum};
}

bool adjoint_irreducible(const MatrixGroup &g) {
    Character chi = character(g);
    double s = 0.0;
    for (const cplx &v : chi.values) {
        double a2 = std::norm(v) - 1.0;
        s += a2 * a2;
    }
    s /= static_cast<double>(g.order());
    return std::abs(s - 1.0) <= 1e-6;
}

CMat group_average(const MatrixGroup &g, const CMat &m) {
    if (m.dim() != g.dim) {
        throw ValidationError("group_average: dimension mismatch");
    }
    CMat acc(g.dim);
    for (const CMat &u : g.elements) {
        acc += conjugate_by(u, m);
    }
    acc *= 1.0 / static_cast<double>(g.order());
    return acc;
}

std::vector<std::pair<double, std::size_t>> decompose_linear_map(const MatrixGroup &g,
                                                                 const RealMat &l) {
    const std::size_t m = su_dim(g.dim);
    if (l.rows() != m || l.cols() != m) {
        throw ValidationError("decompose_linear_map: L must be " + std::to_string(m) +
                              "x" + std::to_string(m));
    }
    if (!is_transformer(g).first) {
        throw ValidationError("decompose_linear_map: group is not a transformer");
    }

    // Column j of the system is the flattened adjoint matrix of element j.
    const std::size_t n = g.order();
    RealMat sys(m * m, n);
    for (std::size_t j = 0; j < n; j++) {
        RealMat ad = adjoint_matrix(g.elements[j]);
        for (std::size_t r = 0; r < m * m; r++) {
            sys(r, j) = ad.data()[r];
        }
    }
    const std::vector<double> &b = l.data();
    std::vector<double> q = solve_min_norm(sys, b);

    double qmin = q[0];
    for (double v : q) {
        qmin = std::min(qmin, v);
    }
    double c = std::max(0.0, -qmin) + 1e-12;

    std::vector<std::pair<double, std::size_t>> out;
    out.reserve(n);
    std::vector<double> p(n);
    for (std::size_t j = 0; j < n; j++) {
        p[j] = q[j] + c;
        out.emplace_back(p[j], j);
    }

    std::vector<double> recon = mat_vec(sys, p);
    double res = 0.0;
    for (std::size_t r = 0; r < recon.size(); r++) {
        double dlt = recon[r] - b[r];
        res += dlt * dlt;
    }
    res = std::sqrt(res);
    if (res > 1e-7) {
        throw ToleranceError("decompose_linear_map: residual " + std::to_string(res) +
                             " above 1e-7 (rank-deficient adjoint span?)");
    }
    return out;
}

MatrixGroup sl2f3_transformer() {
    const cplx i{0.0, 1.0};
    CMat sx(2, {0, 1, 1, 0});
    CMat sy(2, {0, -i, i, 0});
    CMat sz(2, {1, 0, 0, -1});
    sx *= i;
    sy *= i;
    sz *= i;
    cplx f = (i - 1.0) / 2.0;
    CMat r(2, {f * i, f * i, -f, f});
    MatrixGroup g = close_group({sx, sy, sz, r}, 64);
    if (g.order() != 24) {
        throw ToleranceError("sl2f3_transformer: closed at order " +
                             std::to_string(g.order()) + ", expected 24");
    }
    return g;
}

MatrixGroup gl3f2_transformer() {
    const double pi = std::acos(-1.0);
    const double f = 2.0 / std::sqrt(7.0);
    const double c1 = std::cos(pi / 14.0);
    const double c3 = std::cos(3.0 * pi / 14.0);
    const double c5 = std::cos(5.0 * pi / 14.0);
    auto zeta = [&](int k) {
        return std::polar(1.0, 2.0 * pi * static_cast<double>(k) / 7.0);
    };
    CMat x(3);
    x(0, 0) = f * c5;
    x(0, 1) = -f * c1 * zeta(3);
    x(0, 2) = -f * c3 * zeta(2);
    x(1, 0) = -f * c1 * zeta(4);
    x(1, 1) = -f * c3;
    x(1, 2) = f * c5 * zeta(6);
    x(2, 0) = -f * c3 * zeta(5);
    x(2, 1) = f * c5 * zeta(1);
    x(2, 2) = -f * c1;
    CMat y(3);
    y(0, 0) = zeta(1);
    y(1, 1) = zeta(2);
    y(2, 2) = zeta(4);
    MatrixGroup g = close_group({x, y}, 256);
    if (g.order() != 168) {
        throw ToleranceError("gl3f2_transformer: closed at order " +
                             std::to_string(g.order()) + ", expected 168");
    }
    return g;
}

}  // namespace hamsim
