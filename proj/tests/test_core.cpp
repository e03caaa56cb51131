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
#include <complex>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "hamsim/eig.hpp"
#include "hamsim/errors.hpp"
#include "hamsim/expm.hpp"
#include "hamsim/hamiltonian.hpp"
#include "hamsim/kernels.hpp"
#include "hamsim/matrix.hpp"
#include "hamsim/real_matrix.hpp"
#include "hamsim/rng.hpp"
#include "hamsim/su_basis.hpp"
#include "test_helpers.hpp"

using namespace hamsim;
using namespace hamsim::testing;

namespace {

std::vector<cplx> random_buffer(std::size_t n, Rng &rng) {
    std::vector<cplx> v(n);
    for (auto &z : v) z = cplx{rng.gauss(), rng.gauss()};
    return v;
}

double buf_diff(const std::vector<cplx> &a, const std::vector<cplx> &b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

CMat random_cmat(std::size_t d, Rng &rng) {
    CMat m(d);
    for (auto &z : m.data()) z = cplx{rng.gauss(), rng.gauss()};
    return m;
}

}  // namespace

TEST_CASE("avx2 kernels match the scalar reference") {
    const kernels::Backend &ref = kernels::scalar_backend();
    const kernels::Backend *vec = kernels::avx2_backend();
    if (vec == nullptr) {
        MESSAGE("no AVX2 backend on this machine; skipping equivalence");
        return;
    }
    Rng rng(1234);
    for (std::size_t n : {1u, 2u, 3u, 4u, 5u, 7u, 8u, 16u, 33u}) {
        cplx alpha{rng.gauss(), rng.gauss()};
        auto x = random_buffer(n, rng);
        auto y = random_buffer(n, rng);

        auto y1 = y, y2 = y;
        ref.caxpy(alpha, x.data(), y1.data(), n);
        vec->caxpy(alpha, x.data(), y2.data(), n);
        CHECK(buf_diff(y1, y2) < 1e-12);

        auto s1 = x, s2 = x;
        ref.cscal(alpha, s1.data(), n);
        vec->cscal(alpha, s2.data(), n);
        CHECK(buf_diff(s1, s2) < 1e-12);

        cplx d1 = ref.cdotc(x.data(), y.data(), n);
        cplx d2 = vec->cdotc(x.data(), y.data(), n);
        CHECK(std::abs(d1 - d2) < 1e-11 * (1.0 + std::abs(d1)));

        auto a = random_buffer(n * n, rng);
        auto b = random_buffer(n * n, rng);
        std::vector<cplx> c1(n * n, cplx{0, 0}), c2(n * n, cplx{0, 0});
        ref.cgemm(a.data(), b.data(), c1.data(), n, n, n);
        vec->cgemm(a.data(), b.data(), c2.data(), n, n, n);
        CHECK(buf_diff(c1, c2) < 1e-10 * (1.0 + double(n)));
    }
    // Rectangular shapes too.
    auto a = random_buffer(3 * 5, rng);
    auto b = random_buffer(5 * 7, rng);
    std::vector<cplx> c1(3 * 7, cplx{0, 0}), c2(3 * 7, cplx{0, 0});
    ref.cgemm(a.data(), b.data(), c1.data(), 3, 5, 7);
    vec->cgemm(a.data(), b.data(), c2.data(), 3, 5, 7);
    CHECK(buf_diff(c1, c2) < 1e-11);
}

TEST_CASE("active backend honors HAMSIM_KERNELS") {
    // Whatever was selected must be one of the two known names.
    const kernels::Backend &active = kernels::active_backend();
    bool known = std::string(active.name) == "scalar" || std::string(active.name) == "avx2";
    CHECK(known);
}

TEST_CASE("matrix product and adjoint basics") {
    CMat x = pauli_x(), y = pauli_y(), z = pauli_z();
    // xy = iz
    CHECK(diff_norm(x * y, cplx{0, 1} * z) < 1e-15);
    CHECK(diff_norm(x * x, CMat::identity(2)) < 1e-15);
    CHECK(x.unitary_defect() < 1e-15);
    CHECK(y.hermitian_defect() < 1e-15);

    Rng rng(7);
    CMat a = random_cmat(4, rng), b = random_cmat(4, rng);
    CHECK(diff_norm((a * b).adjoint(), b.adjoint() * a.adjoint()) < 1e-12);
    CHECK(std::abs((a * b).trace() - (b * a).trace()) < 1e-12);
}

TEST_CASE("trace inner product is tr(a_dag b)/d") {
    CMat z = pauli_z();
    CHECK(std::abs(trace_inner(z, z) - cplx{1, 0}) < 1e-15);  // tr(z²)/2 = 1
    CHECK(std::abs(trace_inner(pauli_x(), z)) < 1e-15);
    CMat i2 = CMat::identity(2);
    CHECK(std::abs(trace_inner(i2, i2) - cplx{1, 0}) < 1e-15);
}

TEST_CASE("conjugate_by computes u_dag h u") {
    // Hadamard swaps x and z under conjugation.
    double s = 1.0 / std::sqrt(2.0);
    CMat h = make_mat(2, {s, s, s, -s});
    CHECK(diff_norm(conjugate_by(h, pauli_z()), pauli_x()) < 1e-14);
    CHECK(diff_norm(conjugate_by(h, pauli_x()), pauli_z()) < 1e-14);
}

TEST_CASE("kron is system-first") {
    CMat a = make_mat(2, {1, 2, 3, 4});
    CMat b = make_mat(2, {0, 5, 6, 7});
    CMat k = kron(a, b);
    REQUIRE(k.dim() == 4);
    // (A⊗B)[(i,k),(j,l)] = A[i][j]·B[k][l]; block (0,1) is 2·B.
    CHECK(std::abs(k(0, 2) - cplx{0, 0}) < 1e-15);
    CHECK(std::abs(k(0, 3) - cplx{10, 0}) < 1e-15);
    CHECK(std::abs(k(1, 2) - cplx{12, 0}) < 1e-15);
    CHECK(std::abs(k(3, 3) - cplx{28, 0}) < 1e-15);
    // Mixed-product property.
    Rng rng(11);
    CMat c = random_cmat(2, rng), d = random_cmat(3, rng), e = random_cmat(2, rng),
         f = random_cmat(3, rng);
    CHECK(diff_norm(kron(c, d) * kron(e, f), kron(c * e, d * f)) < 1e-12);
}

TEST_CASE("partial traces undo kron") {
    Rng rng(3);
    CMat a = random_cmat(2, rng), b = random_cmat(3, rng);
    CMat k = kron(a, b);
    CMat ta = partial_trace_right(k, 2, 3);  // = a * tr(b)
    CMat tb = partial_trace_left(k, 2, 3);   // = b * tr(a)
    CHECK(diff_norm(ta, b.trace() * a) < 1e-12);
    CHECK(diff_norm(tb, a.trace() * b) < 1e-12);
    // Traces compose: tr(ptrace(m)) = tr(m).
    CHECK(std::abs(ta.trace() - k.trace()) < 1e-12);
    CHECK(std::abs(tb.trace() - k.trace()) < 1e-12);
}

TEST_CASE("hermitian eigensolver reconstructs and orders") {
    EigResult px = hermitian_eig_matrix(pauli_x());
    CHECK(px.values[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(px.values[1] == doctest::Approx(-1.0).epsilon(1e-12));

    Rng rng(99);
    for (std::size_t d : {2u, 3u, 5u, 8u}) {
        Hamiltonian h = random_hamiltonian(d, rng);
        EigResult e = hermitian_eig_matrix(h.mat());
        REQUIRE(e.values.size() == d);
        for (std::size_t k = 0; k + 1 < d; ++k) CHECK(e.values[k] >= e.values[k + 1]);
        CHECK(e.vectors.unitary_defect() < 1e-10);
        CMat lam(d);
        for (std::size_t k = 0; k < d; ++k) lam(k, k) = e.values[k];
        CHECK(diff_norm(e.vectors * lam * e.vectors.adjoint(), h.mat()) <
              1e-10 * (1.0 + h.fro_norm()));
    }
}

TEST_CASE("real symmetric eigensolver") {
    RealMat s(2, 2, {2, 1, 1, 2});
    RealEigResult e = symmetric_eig(s);
    CHECK(std::abs(e.values[0] - 3.0) < 1e-12);
    CHECK(std::abs(e.values[1] - 1.0) < 1e-12);
    RealMat vt = e.vectors.transpose();
    RealMat recon = e.vectors * RealMat(2, 2, {e.values[0], 0, 0, e.values[1]}) * vt;
    CHECK((recon - s).max_abs() < 1e-12);
}

TEST_CASE("expm matches closed forms") {
    CHECK(diff_norm(expm(CMat(3)), CMat::identity(3)) < 1e-15);

    // exp(i θ σx) = cos θ I + i sin θ σx.
    double theta = 0.7;
    CMat a = cplx{0, theta} * pauli_x();
    CMat want = std::cos(theta) * CMat::identity(2) + cplx{0, std::sin(theta)} * pauli_x();
    CHECK(diff_norm(expm(a), want) < 1e-14);

    // Nilpotent: exp([[0,1],[0,0]]) = I + N.
    CMat n = make_mat(2, {0, 1, 0, 0});
    CHECK(diff_norm(expm(n), make_mat(2, {1, 1, 0, 1})) < 1e-15);

    // Diagonal.
    CMat dm = make_mat(2, {cplx{0, 1.5}, 0, 0, cplx{0, -2.0}});
    CMat de = make_mat(2, {std::polar(1.0, 1.5), 0, 0, std::polar(1.0, -2.0)});
    CHECK(diff_norm(expm(dm), de) < 1e-14);
}

TEST_CASE("expm properties on random hermitian generators") {
    Rng rng(5);
    for (std::size_t d : {2u, 4u, 6u}) {
        Hamiltonian h = random_hamiltonian(d, rng);
        CMat u = expm(cplx{0, -1} * h.mat());
        CHECK(u.unitary_defect() < 1e-12);
        // exp(2A) = exp(A)² exercises the squaring path consistency.
        CMat u2 = expm(cplx{0, -2} * h.mat());
        CHECK(diff_norm(u2, u * u) < 1e-11);
        // Inverse.
        CMat ui = expm(cplx{0, 1} * h.mat());
        CHECK(diff_norm(u * ui, CMat::identity(d)) < 1e-12);
    }
}

TEST_CASE("expm rejects huge norms instead of degrading") {
    CMat big(2);
    big(0, 0) = 1e4;
    big(1, 1) = -1e4;
    CHECK_THROWS_AS((void)expm(big), ValidationError);
}

TEST_CASE("su basis is orthonormal and complete") {
    for (std::size_t d : {2u, 3u, 4u}) {
        auto basis = su_basis(d);
        REQUIRE(basis.size() == d * d - 1);
        for (std::size_t i = 0; i < basis.size(); ++i) {
            CHECK(std::abs(basis[i].trace()) < 1e-14);
            CHECK(basis[i].hermitian_defect() < 1e-14);
            for (std::size_t j = 0; j < basis.size(); ++j) {
                cplx want = i == j ? cplx{1, 0} : cplx{0, 0};
                CHECK(std::abs(trace_inner(basis[i], basis[j]) - want) < 1e-13);
            }
        }
    }
}

TEST_CASE("vec_su round trips and is isometric") {
    Rng rng(21);
    for (std::size_t d : {2u, 3u, 5u}) {
        Hamiltonian h = random_hamiltonian(d, rng);
        auto x = vec_su(h.mat());
        REQUIRE(x.size() == d * d - 1);
        CHECK(diff_norm(unvec_su(x, d), h.mat()) < 1e-12);
        double norm2 = 0.0;
        for (double v : x) norm2 += v * v;
        // ||x||² = tr(H²)/d.
        CHECK(std::abs(norm2 - h.fro_norm() * h.fro_norm() / double(d)) < 1e-10);
    }
}

TEST_CASE("adjoint_matrix represents conjugation in su coordinates") {
    Rng rng(31);
    for (std::size_t d : {2u, 3u}) {
        CMat u = random_unitary(d, rng);
        Hamiltonian h = random_hamiltonian(d, rng);
        RealMat ad = adjoint_matrix(u);
        auto lhs = mat_vec(ad, vec_su(h.mat()));
        auto rhs = vec_su(conjugate_by(u, h.mat()));
        REQUIRE(lhs.size() == rhs.size());
        for (std::size_t i = 0; i < lhs.size(); ++i)
            CHECK(std::abs(lhs[i] - rhs[i]) < 1e-10);
        // Orthogonality of the representation.
        RealMat gram = ad.transpose() * ad;
        CHECK((gram - RealMat::identity(d * d - 1)).max_abs() < 1e-10);
    }
}

TEST_CASE("hamiltonian constructor validates") {
    CHECK_THROWS_AS(Hamiltonian(make_mat(2, {1, 0, 0, 1})), ValidationError);  // trace 2
    CHECK_THROWS_AS(Hamiltonian(make_mat(2, {1, 1, 0, -1})), ValidationError);  // not herm
    Hamiltonian ok(pauli_z());
    CHECK(ok.spectrum() == std::vector<double>{1.0, -1.0});
    CHECK(ok.fro_norm() == doctest::Approx(std::sqrt(2.0)));
    CHECK(!ok.is_zero());
    CHECK(Hamiltonian::zero(3).is_zero());
}

TEST_CASE("hamiltonian spectrum sums to zero and reconstructs") {
    Rng rng(77);
    Hamiltonian h = random_hamiltonian(5, rng);
    double sum = 0.0;
    for (double v : h.spectrum()) sum += v;
    CHECK(std::abs(sum) < 1e-10);
    CMat lam(5);
    for (std::size_t k = 0; k < 5; ++k) lam(k, k) = h.spectrum()[k];
    CHECK(diff_norm(h.eigenvectors() * lam * h.eigenvectors().adjoint(), h.mat()) < 1e-10);
}

TEST_CASE("random generators have the advertised structure") {
    Rng rng(13);
    Hamiltonian h = random_hamiltonian(4, rng);
    CHECK(h.mat().hermitian_defect() < 1e-12);
    CHECK(std::abs(h.mat().trace()) < 1e-12);

    CMat rho = random_density(3, rng);
    CHECK(rho.hermitian_defect() < 1e-12);
    CHECK(std::abs(rho.trace() - cplx{1, 0}) < 1e-12);

    CMat u = random_unitary(3, rng);
    CHECK(u.unitary_defect() < 1e-10);

    // Same seed, same stream.
    Rng r1(5), r2(5);
    CHECK(diff_norm(random_hamiltonian(3, r1).mat(), random_hamiltonian(3, r2).mat()) == 0.0);
}

TEST_CASE("min-norm least squares solves consistent systems") {
    // Underdetermined: x + y = 2 has min-norm solution (1,1).
    RealMat a(1, 2, {1, 1});
    auto x = solve_min_norm(a, {2.0});
    REQUIRE(x.size() == 2);
    CHECK(x[0] == doctest::Approx(1.0));
    CHECK(x[1] == doctest::Approx(1.0));
}
