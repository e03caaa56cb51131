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

#include "hamsim/majorization.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "hamsim/eig.hpp"
#include "hamsim/errors.hpp"

namespace hamsim {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

std::vector<std::size_t> descending_order(const std::vector<double> &v) {
    std::vector<std::size_t> idx(v.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(),
                     [&v](std::size_t a, std::size_t b) { return v[a] > v[b]; });
    return idx;
}

double abs_scale(const std::vector<double> &x, const std::vector<double> &y) {
    double s = 1.0;
    for (double v : x) s = std::max(s, std::abs(v));
    for (double v : y) s = std::max(s, std::abs(v));
    return s;
}

// Augmenting-path step of the bipartite matching.
bool augment(std::size_t row, const std::vector<std::vector<std::size_t>> &adj,
             std::vector<bool> &seen, std::vector<std::size_t> &owner) {
    for (std::size_t col : adj[row]) {
        if (seen[col]) continue;
        seen[col] = true;
        if (owner[col] == kNone || augment(owner[col], adj, seen, owner)) {
            owner[col] = row;
            return true;
        }
    }
    return false;
}

// Perfect matching on the positive support of d; perm[i] = matched column.
std::vector<std::size_t> support_matching(const RealMat &d, double support_tol) {
    std::size_t n = d.rows();
    std::vector<std::vector<std::size_t>> adj(n);
    for (std::size_t r = 0; r < n; r++) {
        for (std::size_t c = 0; c < n; c++) {
            if (d(r, c) > support_tol) adj[r].push_back(c);
        }
    }
    std::vector<std::size_t> owner(n, kNone);
    for (std::size_t r = 0; r < n; r++) {
        std::vector<bool> seen(n, false);
        if (!augment(r, adj, seen, owner)) {
            throw ValidationError(
                "no permutation fits the positive entries; matrix is not doubly "
                "stochastic within tolerance");
        }
    }
    std::vector<std::size_t> perm(n, kNone);
    for (std::size_t c = 0; c < n; c++) perm[owner[c]] = c;
    return perm;
}

// Drops terms until at most (n-1)^2 + 1 remain. More terms than that are
// affinely dependent: a null vector z of the stacked [vec(P_t); 1] columns
// has sum zero, so shifting the weights along z keeps the reconstruction and
// the total while zeroing at least one weight.
void caratheodory_prune(std::vector<BirkhoffTerm> &terms, std::size_t n) {
    std::size_t bound = (n - 1) * (n - 1) + 1;
    while (terms.size() > bound) {
        std::size_t m = terms.size();
        RealMat gram(m, m);
        for (std::size_t s = 0; s < m; s++) {
            for (std::size_t t = s; t < m; t++) {
                double agree = 0.0;
                for (std::size_t i = 0; i < n; i++) {
                    if (terms[s].perm[i] == terms[t].perm[i]) agree += 1.0;
                }
                gram(s, t) = agree + 1.0;
                gram(t, s) = agree + 1.0;
            }
        }
        auto eig = symmetric_eig(gram);
        if (eig.values.back() > 1e-8 * eig.values.front()) {
            throw ToleranceError("permutation terms are unexpectedly independent");
        }
        std::vector<double> z(m);
        for (std::size_t t = 0; t < m; t++) z[t] = eig.vectors(t, m - 1);

        // z is sign-ambiguous; both orientations have positive entries since
        // the entries sum to zero. Pick the one that allows a shift.
        std::size_t drop = kNone;
        double theta = std::numeric_limits<double>::infinity();
        for (int pass = 0; pass < 2 && drop == kNone; pass++) {
            for (std::size_t t = 0; t < m; t++) {
                if (z[t] > 1e-10) {
                    double r = terms[t].p / z[t];
                    if (r < theta) {
                        theta = r;
                        drop = t;
                    }
                }
            }
            if (drop == kNone) {
                for (double &v : z) v = -v;
            }
        }
        if (drop == kNone) {
            throw ToleranceError("degenerate null vector while pruning permutations");
        }
        for (std::size_t t = 0; t < m; t++) terms[t].p -= theta * z[t];
        terms[drop].p = 0.0;
        std::erase_if(terms, [](const BirkhoffTerm &t) { return t.p <= 1e-14; });
    }
}

}  // namespace

bool is_majorized_by(const std::vector<double> &x, const std::vector<double> &y,
                     double tol) {
    if (x.size() != y.size()) return false;
    std::vector<double> xs = x;
    std::vector<double> ys = y;
    std::sort(xs.begin(), xs.end(), std::greater<>());
    std::sort(ys.begin(), ys.end(), std::greater<>());
    double px = 0.0;
    double py = 0.0;
    for (std::size_t k = 0; k < xs.size(); k++) {
        px += xs[k];
        py += ys[k];
        if (px > py + tol) return false;
    }
    return std::abs(px - py) <= tol;
}

RealMat majorization_transfer(const std::vector<double> &x,
                              const std::vector<double> &y) {
    std::size_t n = x.size();
    if (n == 0 || y.size() != n) {
        throw ValidationError("majorization transfer needs two vectors of equal "
                              "nonzero length");
    }
    double scale = abs_scale(x, y);
    if (!is_majorized_by(x, y, 1e-9 * scale)) {
        throw ValidationError("majorization transfer: x is not majorized by y");
    }

    auto ox = descending_order(x);
    auto oy = descending_order(y);
    std::vector<double> xs(n);
    std::vector<double> w(n);
    for (std::size_t i = 0; i < n; i++) {
        xs[i] = x[ox[i]];
        w[i] = y[oy[i]];
    }

    // Repeatedly average the outermost disagreeing pair (w_j too big, w_k too
    // small); every step pins at least one coordinate to xs exactly, so at
    // most n-1 steps fire.
    RealMat dsorted = RealMat::identity(n);
    double agree_tol = 1e-13 * scale;
    for (std::size_t step = 0; step < 2 * n + 2; step++) {
        std::size_t j = kNone;
        for (std::size_t i = n; i-- > 0;) {
            if (w[i] > xs[i] + agree_tol) {
                j = i;
                break;
            }
        }
        if (j == kNone) break;
        std::size_t k = kNone;
        for (std::size_t i = j + 1; i < n; i++) {
            if (w[i] < xs[i] - agree_tol) {
                k = i;
                break;
            }
        }
        if (k == kNone) break;

        double delta = std::min(w[j] - xs[j], xs[k] - w[k]);
        double lam = 1.0 - delta / (w[j] - w[k]);
        // Row mix: new row j = lam*row j + (1-lam)*row k, and symmetrically.
        for (std::size_t c = 0; c < n; c++) {
            double rj = dsorted(j, c);
            double rk = dsorted(k, c);
            dsorted(j, c) = lam * rj + (1.0 - lam) * rk;
            dsorted(k, c) = (1.0 - lam) * rj + lam * rk;
        }
        if (w[j] - xs[j] <= xs[k] - w[k]) {
            w[k] += delta;
            w[j] = xs[j];
        } else {
            w[j] -= delta;
            w[k] = xs[k];
        }
    }
    for (std::size_t i = 0; i < n; i++) {
        if (std::abs(w[i] - xs[i]) > 1e-9 * scale) {
            throw ToleranceError("majorization transfer failed to converge");
        }
    }

    // Undo the sorting: D = Sx^T * Dsorted * Sy with (Sx v)_i = v_{ox[i]}.
    RealMat out(n, n);
    for (std::size_t r = 0; r < n; r++) {
        for (std::size_t c = 0; c < n; c++) {
            out(ox[r], oy[c]) = dsorted(r, c);
        }
    }
    return out;
}

RealMat permutation_matrix(const std::vector<std::size_t> &perm) {
    RealMat p(perm.size(), perm.size());
    for (std::size_t i = 0; i < perm.size(); i++) p(i, perm[i]) = 1.0;
    return p;
}

RealMat BirkhoffDecomposition::reconstruct() const {
    RealMat acc(n, n);
    for (const auto &t : terms) {
        for (std::size_t i = 0; i < n; i++) acc(i, t.perm[i]) += t.p;
    }
    return acc;
}

BirkhoffDecomposition birkhoff_decompose(const RealMat &d) {
    std::size_t n = d.rows();
    if (n == 0 || d.cols() != n) {
        throw ValidationError("birkhoff decomposition needs a square matrix");
    }
    for (std::size_t r = 0; r < n; r++) {
        double rsum = 0.0;
        double csum = 0.0;
        for (std::size_t c = 0; c < n; c++) {
            if (d(r, c) < -1e-12) {
                throw ValidationError("matrix has a negative entry at row " +
                                      std::to_string(r));
            }
            rsum += d(r, c);
            csum += d(c, r);
        }
        if (std::abs(rsum - 1.0) > 1e-9 || std::abs(csum - 1.0) > 1e-9) {
            throw ValidationError("row/column sums are not 1; matrix is not "
                                  "doubly stochastic");
        }
    }

    BirkhoffDecomposition out;
    out.n = n;
    out.source = d;
    RealMat rem = d;
    double peeled = 0.0;
    while (peeled < 1.0 - 1e-11) {
        auto perm = support_matching(rem, 1e-12);
        double p = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < n; i++) p = std::min(p, rem(i, perm[i]));
        for (std::size_t i = 0; i < n; i++) {
            double v = rem(i, perm[i]) - p;
            rem(i, perm[i]) = v < 1e-14 ? 0.0 : v;
        }
        out.terms.push_back({p, std::move(perm)});
        peeled += p;
    }
    out.terms.back().p += 1.0 - peeled;  // exact unit total

    caratheodory_prune(out.terms, n);

    double err = (out.reconstruct() - d).max_abs();
    if (err > 1e-10) {
        throw ToleranceError("permutation decomposition drifted to " +
                             std::to_string(err));
    }
    return out;
}

}  // namespace hamsim
