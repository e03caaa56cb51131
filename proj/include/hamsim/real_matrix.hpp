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

#include <cstddef>
#include <vector>

namespace hamsim {

// Rectangular dense real matrix, row-major. Used for adjoint representations,
// doubly stochastic matrices, LP tableaus and least-squares systems; kept
// deliberately small (the complex side carries the heavy arithmetic).
class RealMat {
  public:
    RealMat() = default;
    RealMat(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, 0.0) {}
    RealMat(std::size_t rows, std::size_t cols, std::vector<double> entries);

    static RealMat identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const std::vector<double> &data() const { return a_; }
    std::vector<double> &data() { return a_; }

    double &operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const double &operator()(std::size_t i, std::size_t j) const {
        return a_[i * cols_ + j];
    }

    RealMat transpose() const;
    double fro_norm() const;
    double max_abs() const;

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<double> a_;
};

RealMat operator*(const RealMat &a, const RealMat &b);
RealMat operator+(RealMat a, const RealMat &b);
RealMat operator-(RealMat a, const RealMat &b);
RealMat operator*(double s, RealMat a);

std::vector<double> mat_vec(const RealMat &a, const std::vector<double> &x);

// Minimum-norm solution of A x = b (A with full row rank after pseudo-inverse
// thresholding); returns x = Aᵀ(AAᵀ)⁺b.
std::vector<double> solve_min_norm(const RealMat &a, const std::vector<double> &b);

}  // namespace hamsim
