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

#include <complex>
#include <cstddef>
#include <vector>

namespace hamsim {

using cplx = std::complex<double>;

// Dense square complex matrix, row-major. The universal carrier for
// unitaries, Hamiltonians and their products.
class CMat {
  public:
    CMat() = default;
    explicit CMat(std::size_t d) : d_(d), a_(d * d, cplx{0.0, 0.0}) {}
    CMat(std::size_t d, std::vector<cplx> entries);

    static CMat identity(std::size_t d);

    std::size_t dim() const { return d_; }
    const std::vector<cplx> &data() const { return a_; }
    std::vector<cplx> &data() { return a_; }

    cplx &operator()(std::size_t i, std::size_t j) { return a_[i * d_ + j]; }
    const cplx &operator()(std::size_t i, std::size_t j) const { return a_[i * d_ + j]; }

    CMat &operator+=(const CMat &o);
    CMat &operator-=(const CMat &o);
    CMat &operator*=(cplx s);

    CMat adjoint() const;
    CMat transpose() const;
    CMat conj() const;

    cplx trace() const;
    double fro_norm() const;
    double max_abs() const;
    bool is_finite() const;

    // ||U†U - I||_F, cheap unitarity defect.
    double unitary_defect() const;
    // ||A - A†||_F.
    double hermitian_defect() const;

  private:
    std::size_t d_ = 0;
    std::vector<cplx> a_;
};

CMat operator+(CMat a, const CMat &b);
CMat operator-(CMat a, const CMat &b);
CMat operator*(cplx s, CMat a);
CMat operator*(const CMat &a, const CMat &b);

// tr(A†B)/d, the normalized trace inner product.
cplx trace_inner(const CMat &a, const CMat &b);

// U† H U.
CMat conjugate_by(const CMat &u, const CMat &h);

// System-first Kronecker product: (A⊗B)[(i,k),(j,l)] = A[i][j] * B[k][l].
CMat kron(const CMat &a, const CMat &b);

// Partial traces of a (dl*dr)-dimensional matrix over one factor.
CMat partial_trace_right(const CMat &m, std::size_t dl, std::size_t dr);
CMat partial_trace_left(const CMat &m, std::size_t dl, std::size_t dr);

bool approx_equal(const CMat &a, const CMat &b, double tol);

}  // namespace hamsim
