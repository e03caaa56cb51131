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

#include "hamsim/real_matrix.hpp"

#include <cmath>

#include "hamsim/eig.hpp"
#include "hamsim/errors.hpp"

namespace hamsim {

RealMat::RealMat(std::size_t rows, std::size_t cols, std::vector<double> entries)
    : rows_(rows), cols_(cols), a_(std::move(entries)) {
    if (a_.size() != rows * cols) {
        throw ValidationError("real matrix: wrong entry count");
    }
}

RealMat RealMat::identity(std::size_t n) {
    RealMat m(n, n);
    for (std::size_t i = 0; i < n; i++) {
        m(i, i) = 1.0;
    }
    return m;
}

RealMat RealMat::transpose() const {
    RealMat r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; i++) {
        for (std::size_t j = 0; j < cols_; j++) {
            r(j, i) = (*this)(i, j);
        }
    }
    return r;
}

double RealMat::fro_norm() const {
    double s = 0.0;
    for (double x : a_) {
        s += x * x;
    }
    return std::sqrt(s);
}

double RealMat::max_abs() const {
    double m = 0.0;
    for (double x : a_) {
        m = std::max(m, std::abs(x));
    }
    return m;
}

RealMat operator*(const RealMat &a, const RealMat &b) {
    if (a.cols() != b.rows()) {
        throw ValidationError("real matmul: dimension mismatch");
    }
    RealMat c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); i++) {
        for (std::size_t p = 0; p < a.cols(); p++) {
            double aip = a(i, p);
            if (aip == 0.0) {
                continue;
            }
            for (std::size_t j = 0; j < b.cols(); j++) {
                c(i, j) += aip * b(p, j);
            }
        }
    }
    return c;
}

RealMat operator+(RealMat a, const RealMat &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw ValidationError("real add: shape mismatch");
    }
    for (std::size_t i = 0; i < a.data().size(); i++) {
        a.data()[i] += b.data()[i];
    }
    return a;
}

RealMat operator-(RealMat a, const RealMat &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw ValidationError("real sub: shape mismatch");
    }
    for (std::size_t i = 0; i < a.data().size(); i++) {
        a.data()[i] -= b.data()[i];
    }
    return a;
}

RealMat operator*(double s, RealMat a) {
    for (double &x : a.data()) {
        x *= s;
    }
    return a;
}

std::vector<double> mat_vec(const RealMat &a, const std::vector<double> &x) {
    if (x.size() != a.cols()) {
        throw ValidationError("mat_vec: dimension mismatch");
    }
    std::vector<double> y(a.rows(), 0.0);
    for (std::size_t i = 0; i < a.rows(); i++) {
        double s = 0.0;
        for (std::size_t j = 0; j < a.cols(); j++) {
            s += a(i, j) * x[j];
        }
        y[i] = s;
    }
    return y;
}

std::vector<double> solve_min_norm(const RealMat &a, const std::vector<double> &b) {
    if (b.size() != a.rows()) {
        throw ValidationError("solve_min_norm: dimension mismatch");
    }
    const std::size_t m = a.rows();
    // Gram matrix AAᵀ, then a thresholded spectral pseudo-inverse. Sizes here
    // are (d²-1)² at most, well inside Jacobi territory.
    RealMat gram(m, m);
    for (std::size_t i = 0; i < m; i++) {
        for (std::size_t j = i; j < m; j++) {
            double s = 0.0;
            for (std::size_t k = 0; k < a.cols(); k++) {
                s += a(i, k) * a(j, k);
            }
            gram(i, j) = s;
            gram(j, i) = s;
        }
    }
    RealEigResult eig = symmetric_eig(gram);
    double lam_max = eig.values.empty() ? 0.0 : std::max(eig.values.front(), 0.0);
    double cut = 1e-10 * std::max(lam_max, 1e-300);

    std::vector<double> y(m, 0.0);
    for (std::size_t k = 0; k < m; k++) {
        if (eig.values[k] <= cut) {
            continue;
        }
        double proj = 0.0;
        for (std::size_t i = 0; i < m; i++) {
            proj += eig.vectors(i, k) * b[i];
        }
        proj /= eig.values[k];
        for (std::size_t i = 0; i < m; i++) {
            y[i] += proj * eig.vectors(i, k);
        }
    }
    std::vector<double> x(a.cols(), 0.0);
    for (std::size_t i = 0; i < m; i++) {
        if (y[i] == 0.0) {
            continue;
        }
        for (std::size_t j = 0; j < a.cols(); j++) {
            x[j] += a(i, j) * y[i];
        }
    }
    return x;
}

}  // namespace hamsim
