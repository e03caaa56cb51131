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

#include "hamsim/matrix.hpp"

#include <cmath>

#include "hamsim/errors.hpp"
#include "hamsim/kernels.hpp"

namespace hamsim {

namespace {
void require_same_dim(const CMat &a, const CMat &b, const char *what) {
    if (a.dim() != b.dim()) {
        throw ValidationError(std::string(what) + ": dimension mismatch (" +
                              std::to_string(a.dim()) + " vs " + std::to_string(b.dim()) +
                              ")");
    }
}
}  // namespace

CMat::CMat(std::size_t d, std::vector<cplx> entries) : d_(d), a_(std::move(entries)) {
    if (a_.size() != d * d) {
        throw ValidationError("matrix: expected " + std::to_string(d * d) +
                              " entries, got " + std::to_string(a_.size()));
    }
}

CMat CMat::identity(std::size_t d) {
    CMat m(d);
    for (std::size_t i = 0; i < d; i++) {
        m(i, i) = 1.0;
    }
    return m;
}

CMat &CMat::operator+=(const CMat &o) {
    require_same_dim(*this, o, "add");
    kernels::active_backend().caxpy(cplx{1.0, 0.0}, o.a_.data(), a_.data(), a_.size());
    return *this;
}

CMat &CMat::operator-=(const CMat &o) {
    require_same_dim(*this, o, "sub");
    kernels::active_backend().caxpy(cplx{-1.0, 0.0}, o.a_.data(), a_.data(), a_.size());
    return *this;
}

CMat &CMat::operator*=(cplx s) {
    kernels::active_backend().cscal(s, a_.data(), a_.size());
    return *this;
}

CMat CMat::adjoint() const {
    CMat r(d_);
    for (std::size_t i = 0; i < d_; i++) {
        for (std::size_t j = 0; j < d_; j++) {
            r(j, i) = std::conj((*this)(i, j));
        }
    }
    return r;
}

CMat CMat::transpose() const {
    CMat r(d_);
    for (std::size_t i = 0; i < d_; i++) {
        for (std::size_t j = 0; j < d_; j++) {
            r(j, i) = (*this)(i, j);
        }
    }
    return r;
}

CMat CMat::conj() const {
    CMat r(d_);
    for (std::size_t i = 0; i < a_.size(); i++) {
        r.a_[i] = std::conj(a_[i]);
    }
    return r;
}

cplx CMat::trace() const {
    cplx t{0.0, 0.0};
    for (std::size_t i = 0; i < d_; i++) {
        t += (*this)(i, i);
    }
    return t;
}

double CMat::fro_norm() const {
    // cdotc(a, a) is the squared Frobenius norm.
    cplx s = kernels::active_backend().cdotc(a_.data(), a_.data(), a_.size());
    return std::sqrt(std::abs(s.real()));
}

double CMat::max_abs() const {
    double m = 0.0;
    for (const cplx &z : a_) {
        m = std::max(m, std::abs(z));
    }
    return m;
}

bool CMat::is_finite() const {
    for (const cplx &z : a_) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            return false;
        }
    }
    return true;
}

double CMat::unitary_defect() const {
    CMat p = adjoint() * (*this);
    for (std::size_t i = 0; i < d_; i++) {
        p(i, i) -= 1.0;
    }
    return p.fro_norm();
}

double CMat::hermitian_defect() const {
    return (*this - adjoint()).fro_norm();
}

CMat operator+(CMat a, const CMat &b) {
    a += b;
    return a;
}

CMat operator-(CMat a, const CMat &b) {
    a -= b;
    return a;
}

CMat operator*(cplx s, CMat a) {
    a *= s;
    return a;
}

CMat operator*(const CMat &a, const CMat &b) {
    require_same_dim(a, b, "matmul");
    CMat c(a.dim());
    kernels::active_backend().cgemm(a.data().data(), b.data().data(), c.data().data(),
                                    a.dim(), a.dim(), a.dim());
    return c;
}

cplx trace_inner(const CMat &a, const CMat &b) {
    require_same_dim(a, b, "trace_inner");
    // tr(A†B) = sum_ij conj(A_ij) B_ij, so it's one cdotc over the buffers.
    cplx s = kernels::active_backend().cdotc(a.data().data(), b.data().data(),
                                             a.data().size());
    return s / static_cast<double>(a.dim());
}

CMat conjugate_by(const CMat &u, const CMat &h) {
    require_same_dim(u, h, "conjugate_by");
    return u.adjoint() * h * u;
}

CMat kron(const CMat &a, const CMat &b) {
    std::size_t da = a.dim(), db = b.dim();
    CMat r(da * db);
    for (std::size_t i = 0; i < da; i++) {
        for (std::size_t j = 0; j < da; j++) {
            cplx aij = a(i, j);
            if (aij == cplx{0.0, 0.0}) {
                continue;
            }
            for (std::size_t k = 0; k < db; k++) {
                for (std::size_t l = 0; l < db; l++) {
                    r(i * db + k, j * db + l) = aij * b(k, l);
                }
            }
        }
    }
    return r;
}

CMat partial_trace_right(const CMat &m, std::size_t dl, std::size_t dr) {
    if (m.dim() != dl * dr) {
        throw ValidationError("partial_trace: dimension does not factor as " +
                              std::to_string(dl) + "*" + std::to_string(dr));
    }
    CMat r(dl);
    for (std::size_t i = 0; i < dl; i++) {
        for (std::size_t j = 0; j < dl; j++) {
            cplx s{0.0, 0.0};
            for (std::size_t k = 0; k < dr; k++) {
                s += m(i * dr + k, j * dr + k);
            }
            r(i, j) = s;
        }
    }
    return r;
}

CMat partial_trace_left(const CMat &m, std::size_t dl, std::size_t dr) {
    if (m.dim() != dl * dr) {
        throw ValidationError("partial_trace: dimension does not factor as " +
                              std::to_string(dl) + "*" + std::to_string(dr));
    }
    CMat r(dr);
    for (std::size_t k = 0; k < dr; k++) {
        for (std::size_t l = 0; l < dr; l++) {
            cplx s{0.0, 0.0};
            for (std::size_t i = 0; i < dl; i++) {
                s += m(i * dr + k, i * dr + l);
            }
            r(k, l) = s;
        }
    }
    return r;
}

bool approx_equal(const CMat &a, const CMat &b, double tol) {
    if (a.dim() != b.dim()) {
        return false;
    }
    return (a - b).fro_norm() <= tol;
}

}  // namespace hamsim
