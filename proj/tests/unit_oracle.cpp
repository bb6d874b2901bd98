/*
 * Copyright 2026 the picode authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <random>

#include "picode/examples.hpp"
#include "picode/oracle.hpp"

using namespace picode;

TEST_CASE("jacobi eigensolver on random hermitian matrices") {
    std::mt19937_64 rng(5);
    std::normal_distribution<double> gauss;
    for (int n : {1, 2, 3, 5, 8}) {
        CMat A(n, n);
        for (int i = 0; i < n; ++i) {
            A.at(i, i) = gauss(rng);
            for (int j = i + 1; j < n; ++j) {
                A.at(i, j) = Complex(gauss(rng), gauss(rng));
                A.at(j, i) = std::conj(A.at(i, j));
            }
        }
        HermitianEigen eig = jacobi_hermitian(A);
        CMat recon = hermitian_function(eig, [](double x) { return x; });
        CHECK((recon - A).frobenius_norm() < 1e-12 * (1 + A.frobenius_norm()));
        CMat vv = eig.vectors.adjoint() * eig.vectors;
        CHECK((vv - CMat::identity(n)).frobenius_norm() < 1e-12);
    }
}

TEST_CASE("dense dicke states") {
    DenseVector v = dense_dicke(WeightVector({2, 0}), 2, 2);
    CHECK(v.amp[0] == Complex(1.0));  // the string (0,0)
    CHECK(v.amp[1] == Complex(0.0));

    DenseVector w = dense_dicke(WeightVector({1, 1}), 2, 2);
    CHECK_THAT(w.amp[1].real(), Catch::Matchers::WithinAbs(1 / std::sqrt(2.0), 1e-14));
    CHECK_THAT(w.amp[2].real(), Catch::Matchers::WithinAbs(1 / std::sqrt(2.0), 1e-14));
    CHECK(w.amp[0] == Complex(0.0));

    CHECK(std::abs(inner(dense_dicke(WeightVector({1, 2}), 2, 3),
                         dense_dicke(WeightVector({2, 1}), 2, 3))) < 1e-12);
    CHECK_THROWS_AS(dense_dicke(WeightVector({15, 15}), 2, 30), Error);  // 2^30 over the cap
}

TEST_CASE("dense dicke orthonormality sweep") {
    for (int q = 2; q <= 3; ++q)
        for (int N = 1; N <= 5; ++N) {
            auto T = enumerate_compositions(N, q);
            std::vector<DenseVector> states;
            for (const auto& n : T) states.push_back(dense_dicke(n, q, N));
            for (size_t i = 0; i < states.size(); ++i)
                for (size_t j = i; j < states.size(); ++j) {
                    Complex ip = inner(states[i], states[j]);
                    CHECK(std::abs(ip - (i == j ? 1.0 : 0.0)) < 1e-12);
                }
        }
}

TEST_CASE("dense code vectors") {
    PICode code = build_gnu(3, 3, 9, 1);
    DenseVector zero = dense_code_vector(code, 0);
    DenseVector one = dense_code_vector(code, 1);
    CHECK_THAT(zero.norm(), Catch::Matchers::WithinAbs(1.0, 1e-12));
    CHECK_THAT(one.norm(), Catch::Matchers::WithinAbs(1.0, 1e-12));
    CHECK(std::abs(inner(zero, one)) < 1e-12);

    // Permutation invariance.
    std::mt19937_64 rng(17);
    std::vector<int> perm(9);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    DenseVector permuted = permute_qudits(zero, perm);
    double delta = 0;
    for (size_t i = 0; i < zero.amp.size(); ++i)
        delta = std::max(delta, std::abs(permuted.amp[i] - zero.amp[i]));
    CHECK(delta < 1e-12);
}

TEST_CASE("exact logical matrix elements match dense computation") {
    PICode code = build_type_b(examples::spec(3));  // 9 qubits, densifiable
    std::vector<DenseVector> psi{dense_code_vector(code, 0), dense_code_vector(code, 1)};
    auto T2 = enumerate_compositions(2, 2);
    for (const auto& a : T2)
        for (const auto& ap : T2) {
            MatrixUnitClass cls{2, a, ap};
            std::vector<int> s = detail::canonical_string(a);
            std::vector<int> sp = detail::canonical_string(ap);
            for (int x = 0; x < 2; ++x)
                for (int y = 0; y < 2; ++y) {
                    double exact = logical_matrix_element(code, x, y, cls).to_double();
                    Complex dense = detail::dense_unit_element(psi[static_cast<size_t>(x)],
                                                               psi[static_cast<size_t>(y)], s, sp);
                    CHECK(std::abs(dense - Complex(exact)) < 1e-9);
                }
        }
}

TEST_CASE("random channels are complete and seed-deterministic") {
    DenseChannel id = random_weight_t_channel(2, 4, 0, 3, 42);
    REQUIRE(id.kraus.size() == 1);
    CHECK(id.kraus[0].alpha == Complex(1.0));

    DenseChannel a = random_weight_t_channel(2, 6, 1, 4, 1234);
    DenseChannel b = random_weight_t_channel(2, 6, 1, 4, 1234);
    DenseChannel c = random_weight_t_channel(2, 6, 1, 4, 1235);
    CHECK(a.completeness_residual <= 1e-12);
    REQUIRE(a.kraus.size() == 4);
    REQUIRE(b.kraus.size() == 4);
    bool identical = true, differs_from_c = false;
    for (size_t i = 0; i < a.kraus.size(); ++i) {
        identical &= a.kraus[i].support == b.kraus[i].support;
        for (size_t j = 0; j < a.kraus[i].block.a.size(); ++j) {
            identical &= a.kraus[i].block.a[j] == b.kraus[i].block.a[j];
            differs_from_c |= a.kraus[i].block.a[j] != c.kraus[i].block.a[j];
        }
    }
    CHECK(identical);
    CHECK(differs_from_c);

    // Kraus support never exceeds the declared weight.
    for (const auto& op : a.kraus) CHECK(op.support.size() <= 1);
}

TEST_CASE("recovery inverts correctable channels") {
    PICode code = build_gnu(3, 3, 9, 1);
    std::mt19937_64 rng(99);

    SECTION("identity channel") {
        DenseChannel id = random_weight_t_channel(2, 9, 0, 1, 7);
        DenseChannel rec = recovery_channel(code, id);
        DenseVector psi = random_logical_state(code, rng);
        CHECK(recovery_fidelity(psi, id, rec) >= 1 - 1e-9);
        CHECK(rec.completeness_residual <= 1e-9);
    }

    SECTION("random weight-1 channels") {
        for (unsigned long long seed : {1ULL, 2ULL, 3ULL}) {
            DenseChannel noise = random_weight_t_channel(2, 9, 1, 4, seed);
            DenseChannel rec = recovery_channel(code, noise);
            CHECK(rec.completeness_residual <= 1e-9);
            for (int trial = 0; trial < 20; ++trial) {
                DenseVector psi = random_logical_state(code, rng);
                double fid = recovery_fidelity(psi, noise, rec);
                CHECK(fid >= 1 - 1e-9);
                CHECK(fid <= 1 + 1e-9);
            }
        }
    }

    SECTION("corrupted code degrades fidelity") {
        // Perturb one amplitude by 1/100. Normalized states in the corrupted
        // span still recover well (the induced Knill-Laflamme violation is
        // second order), but the descriptor's own logical vector is no longer
        // a unit vector and the fidelity formula on it drops far below 1.
        PICode bad = code;
        bad.logical[0][1].amplitude -= RadicalSum(Rational(1, 100));
        double min_fid = 1.0;
        for (unsigned long long seed : {1ULL, 2ULL, 3ULL}) {
            DenseChannel noise = random_weight_t_channel(2, 9, 1, 4, seed);
            DenseChannel rec = recovery_channel(bad, noise);
            for (int k = 0; k < bad.d; ++k) {
                DenseVector raw = dense_code_vector(bad, k);
                min_fid = std::min(min_fid, recovery_fidelity(raw, noise, rec));
            }
            for (int trial = 0; trial < 20; ++trial) {
                DenseVector psi = random_logical_state(bad, rng);
                double fid = recovery_fidelity(psi, noise, rec);
                min_fid = std::min(min_fid, fid);
                CHECK(fid < 1 + 1e-9);  // recovery stays a channel
            }
        }
        CHECK(min_fid < 1 - 1e-4);
    }
}

TEST_CASE("crosscheck of exact matrix elements against dense numerics") {
    CrosscheckReport r1 = crosscheck_matrix_elements(2, 6, 2, 200, 2024);
    CHECK(r1.max_abs_delta <= 1e-9);
    CHECK(r1.max_representative_delta <= 1e-12);

    CrosscheckReport r2 = crosscheck_matrix_elements(3, 5, 2, 200, 2025);
    CHECK(r2.max_abs_delta <= 1e-9);
    CHECK(r2.max_representative_delta <= 1e-12);

    CHECK_THROWS_AS(crosscheck_matrix_elements(3, 108, 2, 1, 1), Error);
}
