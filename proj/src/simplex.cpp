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

#include "hamsim/simplex.hpp"

#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

#include "hamsim/errors.hpp"

namespace hamsim {

namespace {

constexpr double kPivotTol = 1e-9;
constexpr std::size_t kMaxPivots = 10000;

struct Tableau {
    std::size_t rows;
    std::size_t cols;              // original + artificial
    std::vector<double> body;      // rows x cols
    std::vector<double> rhs;       // length rows, kept >= 0
    std::vector<double> cost;      // reduced costs, length cols
    std::vector<std::size_t> basis;

    double &at(std::size_t r, std::size_t c) { return body[r * cols + c]; }

    void pivot(std::size_t pr, std::size_t pc) {
        double inv = 1.0 / at(pr, pc);
        for (std::size_t c = 0; c < cols; c++) at(pr, c) *= inv;
        rhs[pr] *= inv;
        at(pr, pc) = 1.0;
        for (std::size_t r = 0; r < rows; r++) {
            if (r == pr) continue;
            double f = at(r, pc);
            if (f == 0.0) continue;
            for (std::size_t c = 0; c < cols; c++) at(r, c) -= f * at(pr, c);
            at(r, pc) = 0.0;
            rhs[r] -= f * rhs[pr];
            if (rhs[r] < 0.0 && rhs[r] > -1e-11) rhs[r] = 0.0;
        }
        double f = cost[pc];
        if (f != 0.0) {
            for (std::size_t c = 0; c < cols; c++) cost[c] -= f * at(pr, c);
            cost[pc] = 0.0;
        }
        basis[pr] = pc;
    }

    // Bland: enter the lowest-index improving column, leave by ratio test
    // with ties broken toward the lowest basis index. enter_limit bounds the
    // candidate columns (used to lock artificials out in phase two).
    // Returns kOptimal or kUnbounded.
    LpStatus iterate(std::size_t enter_limit, std::size_t &pivots) {
        for (;;) {
            std::size_t enter = cols;
            for (std::size_t c = 0; c < enter_limit; c++) {
                if (cost[c] < -kPivotTol) {
                    enter = c;
                    break;
                }
            }
            if (enter == cols) return LpStatus::kOptimal;

            std::size_t leave = rows;
            double best = std::numeric_limits<double>::infinity();
            for (std::size_t r = 0; r < rows; r++) {
                double a = at(r, enter);
                if (a <= kPivotTol) continue;
                double ratio = rhs[r] / a;
                if (ratio < best - 1e-12 ||
                    (ratio < best + 1e-12 && (leave == rows || basis[r] < basis[leave]))) {
                    best = ratio;
                    leave = r;
                }
            }
            if (leave == rows) return LpStatus::kUnbounded;

            pivot(leave, enter);
            if (++pivots > kMaxPivots) {
                throw ToleranceError("simplex did not converge within " +
                                     std::to_string(kMaxPivots) + " pivots");
            }
        }
    }
};

}  // namespace

LpSolution solve_lp(const RealMat &a, const std::vector<double> &b,
                    const std::vector<double> &c) {
    std::size_t m = a.rows();
    std::size_t n = a.cols();
    if (b.size() != m || c.size() != n) {
        throw ValidationError("simplex input shapes disagree");
    }

    Tableau t;
    t.rows = m;
    t.cols = n + m;
    t.body.assign(m * t.cols, 0.0);
    t.rhs.resize(m);
    t.basis.resize(m);
    double bscale = 1.0;
    for (std::size_t r = 0; r < m; r++) {
        double sign = b[r] < 0.0 ? -1.0 : 1.0;
        for (std::size_t col = 0; col < n; col++) t.at(r, col) = sign * a(r, col);
        t.at(r, n + r) = 1.0;
        t.rhs[r] = sign * b[r];
        t.basis[r] = n + r;
        bscale = std::max(bscale, t.rhs[r]);
    }

    // Phase one: minimize the artificial total. Its reduced-cost row is
    // -(column sums of the body) for original columns, 0 for artificials.
    t.cost.assign(t.cols, 0.0);
    double phase1_obj = 0.0;
    for (std::size_t r = 0; r < m; r++) {
        for (std::size_t col = 0; col < n; col++) t.cost[col] -= t.at(r, col);
        phase1_obj += t.rhs[r];
    }
    std::size_t pivots = 0;
    LpStatus st = t.iterate(n, pivots);
    if (st == LpStatus::kUnbounded) {
        throw ToleranceError("phase-one simplex reported unbounded");
    }
    phase1_obj = 0.0;
    for (std::size_t r = 0; r < m; r++) {
        if (t.basis[r] >= n) phase1_obj += t.rhs[r];
    }
    LpSolution out;
    if (phase1_obj > 1e-9 * bscale) {
        out.status = LpStatus::kInfeasible;
        return out;
    }

    // Phase two over the real objective. Artificials may linger in the basis
    // at value zero (degenerate rows); they stay locked out of entering, so
    // they never regain weight.
    t.cost.assign(t.cols, 0.0);
    for (std::size_t col = 0; col < n; col++) t.cost[col] = c[col];
    for (std::size_t r = 0; r < m; r++) {
        std::size_t bc = t.basis[r];
        double cb = bc < n ? c[bc] : 0.0;
        if (cb == 0.0) continue;
        for (std::size_t col = 0; col < t.cols; col++) t.cost[col] -= cb * t.at(r, col);
    }
    for (std::size_t r = 0; r < m; r++) t.cost[t.basis[r]] = 0.0;

    st = t.iterate(n, pivots);
    if (st == LpStatus::kUnbounded) {
        out.status = LpStatus::kUnbounded;
        return out;
    }

    out.status = LpStatus::kOptimal;
    out.x.assign(n, 0.0);
    for (std::size_t r = 0; r < m; r++) {
        if (t.basis[r] < n) out.x[t.basis[r]] = std::max(0.0, t.rhs[r]);
    }
    out.objective = 0.0;
    for (std::size_t col = 0; col < n; col++) out.objective += c[col] * out.x[col];
    return out;
}

}  // namespace hamsim
