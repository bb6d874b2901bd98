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

#ifndef PICODE_KLVERIFY_HPP
#define PICODE_KLVERIFY_HPP

#include <atomic>
#include <cstdlib>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "picode/codegen.hpp"
#include "picode/combinatorics.hpp"
#include "picode/errors.hpp"
#include "picode/polynomial.hpp"
#include "picode/radical.hpp"

namespace picode {

// =========================================================================
// Exact Knill-Laflamme certification in the Dicke basis.
//
// A weight-w operator on a permutation-invariant code can be taken to act on
// the first w qudits: operators supported on any other w-subset are carried
// to the first positions by a permutation that fixes every code vector.
// Matrix units |s><s'| on those w qudits span all such operators, and for
// permutation-invariant states the matrix element depends on (s, s') only
// through the weight vectors (wt(s), wt(s')). Certification therefore runs
// over |T_{w,q}|^2 weight-class pairs instead of q^w x q^w matrix units.
// =========================================================================

// Equivalence class of matrix units |s><s'| on the first w qudits:
// a = wt(s) (ket side), a_prime = wt(s') (bra side).
struct MatrixUnitClass {
    int w = 0;
    WeightVector a, a_prime;

    std::string to_string() const {
        return "E[" + a.to_string() + "," + a_prime.to_string() + "]";
    }
};

// <D_n| (|s><s'| (x) I) |D_m>. Zero unless n - a = m - a' componentwise with
// all entries >= 0; otherwise multinomial(N-w, n-a) placed over
// sqrt(multinomial(N,n) * multinomial(N,m)), exact. The inverse square root
// is extracted from the prime factorization of the multinomials, so radicand
// sizes never force any integer factoring.
inline RadicalSum dicke_matrix_element(const WeightVector& n, const WeightVector& m,
                                       const MatrixUnitClass& cls, int N) {
    int q = n.num_parts();
    if (m.num_parts() != q || cls.a.num_parts() != q || cls.a_prime.num_parts() != q)
        throw Error(ErrorKind::PartitionMismatch, "weight vectors differ in q");
    if (n.sum() != N || m.sum() != N)
        throw Error(ErrorKind::PartitionMismatch, "weight vectors do not sum to N");
    if (cls.a.sum() != cls.w || cls.a_prime.sum() != cls.w || cls.w > N)
        throw Error(ErrorKind::PartitionMismatch, "class weights do not sum to w <= N");

    std::vector<int> rest(static_cast<size_t>(q));
    for (int i = 0; i < q; ++i) {
        int bi = n.parts[i] - cls.a.parts[i];
        if (bi < 0 || bi != m.parts[i] - cls.a_prime.parts[i]) return RadicalSum();
        rest[static_cast<size_t>(i)] = bi;
    }
    BigInt surviving = multinomial(N - cls.w, WeightVector(rest));

    std::map<long long, long long> exps = multinomial_prime_exponents(N, n);
    for (const auto& [p, e] : multinomial_prime_exponents(N, m)) exps[p] += e;
    for (auto& [p, e] : exps) e = -e;
    return RadicalSum(Rational(surviving)) * sqrt_of_factored(exps);
}

// <psi_a| (|s><s'| (x) I) |psi_b> expanded over the codes' Dicke supports.
inline RadicalSum logical_matrix_element(const PICode& code, int a_idx, int b_idx,
                                         const MatrixUnitClass& cls) {
    const LogicalVector& bra = code.logical.at(static_cast<size_t>(a_idx));
    const LogicalVector& ket = code.logical.at(static_cast<size_t>(b_idx));
    RadicalSum acc;
    for (const auto& bt : bra)
        for (const auto& kt : ket) {
            RadicalSum elem = dicke_matrix_element(bt.weight, kt.weight, cls, code.N);
            if (!elem.is_zero()) acc += bt.amplitude * kt.amplitude * elem;
        }
    return acc;
}

struct KLViolation {
    MatrixUnitClass cls;
    int a = 0, b = 0;   // logical pair; a == b flags a non-deformation failure
    RadicalSum value;   // offending element (a != b) or difference from g (a == b)
};

struct KLCertificate {
    std::string code_id;
    int w = 0;
    bool ok = true;
    std::vector<KLViolation> violations;
    // Common diagonal value per class (lexicographic class order); taken from
    // logical 0 when the diagonal is inconsistent.
    std::vector<std::pair<MatrixUnitClass, RadicalSum>> gram_diag;
};

inline int default_thread_count() {
    if (const char* env = std::getenv("PICODE_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

namespace detail {

// Checks every matrix-unit class of weight exactly w. Parallel over class
// pairs; per-pair results land in an index-addressed vector and merge in
// lexicographic order, so certificates do not depend on the thread count.
inline KLCertificate check_weight_classes(const PICode& code, int w, int threads) {
    std::vector<WeightVector> T = enumerate_compositions(w, code.q);
    size_t pairs = T.size() * T.size();

    struct PairResult {
        std::vector<KLViolation> violations;
        RadicalSum diag0;
    };
    std::vector<PairResult> results(pairs);

    auto work = [&](size_t idx) {
        MatrixUnitClass cls{w, T[idx / T.size()], T[idx % T.size()]};
        PairResult& out = results[idx];
        out.diag0 = logical_matrix_element(code, 0, 0, cls);
        for (int k = 1; k < code.d; ++k) {
            RadicalSum diag = logical_matrix_element(code, k, k, cls);
            if (diag != out.diag0) out.violations.push_back({cls, 0, k, diag - out.diag0});
        }
        for (int a = 0; a < code.d; ++a)
            for (int b = a + 1; b < code.d; ++b) {
                RadicalSum off = logical_matrix_element(code, a, b, cls);
                if (!off.is_zero()) out.violations.push_back({cls, a, b, off});
            }
    };

    int nthreads = std::min<int>(threads, static_cast<int>(pairs));
    if (nthreads <= 1) {
        for (size_t i = 0; i < pairs; ++i) work(i);
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(static_cast<size_t>(nthreads));
        for (int ti = 0; ti < nthreads; ++ti)
            pool.emplace_back([&] {
                for (size_t i = next.fetch_add(1); i < pairs; i = next.fetch_add(1)) work(i);
            });
        for (auto& th : pool) th.join();
    }

    KLCertificate cert;
    cert.code_id = code.construction;
    cert.w = w;
    for (size_t idx = 0; idx < pairs; ++idx) {
        MatrixUnitClass cls{w, T[idx / T.size()], T[idx % T.size()]};
        for (auto& v : results[idx].violations) cert.violations.push_back(std::move(v));
        cert.gram_diag.emplace_back(std::move(cls), std::move(results[idx].diag0));
    }
    cert.ok = cert.violations.empty();
    return cert;
}

}  // namespace detail

// Certifies that the code corrects t errors: every matrix-unit class on the
// first 2t qudits must be orthogonality-clean and non-deforming. Lower
// weights embed as classes fixing extra qudits, so w = 2t covers them.
inline KLCertificate kl_certify(const PICode& code, int t, int threads = 0) {
    if (2 * t > code.N)
        throw Error(ErrorKind::ParameterBoundViolated,
                    "2t = " + std::to_string(2 * t) + " exceeds N = " + std::to_string(code.N));
    return detail::check_weight_classes(code, 2 * t, threads ? threads : default_thread_count());
}

struct DistanceReport {
    bool violation_found = false;
    int distance = 0;       // exact distance when violation_found
    int w_max = 0;          // otherwise: distance > w_max
    std::vector<KLViolation> witnesses;  // violations at the failing weight
};

// Sweeps w = 1, 2, ..., w_max. The first weight with a violation is the
// exact distance: the violating matrix unit is itself a weight-w operator.
inline DistanceReport certify_distance(const PICode& code, int w_max, int threads = 0) {
    if (w_max > code.N)
        throw Error(ErrorKind::ParameterBoundViolated, "w_max exceeds N");
    DistanceReport rep;
    rep.w_max = w_max;
    for (int w = 1; w <= w_max; ++w) {
        KLCertificate cert =
            detail::check_weight_classes(code, w, threads ? threads : default_thread_count());
        if (!cert.ok) {
            rep.violation_found = true;
            rep.distance = w;
            rep.witnesses = std::move(cert.violations);
            return rep;
        }
    }
    return rep;
}

struct PolynomialityReport {
    std::vector<Rational> values;  // z = 0 .. range_end
    int degree_bound = 0;          // w * theta
    bool pass = false;
};

// Lemma-3 style check: the per-orbit sum
//   U(z) = sum_{a in T_{w,q}} multinomial(N-w, p(z)-a) / multinomial(N, p(z))
// must agree with a polynomial of degree <= w*theta. Interpolates the first
// w*theta + 1 points in exact Lagrange form and requires the remaining
// points to lie on the interpolant.
inline PolynomialityReport polynomiality_check(const PartitionPolynomialTuple& p,
                                               const MatrixUnitClass& cls, int N) {
    PartitionPolynomialTuple tuple{p.polys, N, p.range_end};
    ValidatedTuple validated = validate_partition_tuple(tuple);
    int w = cls.w;
    int degree_bound = w * validated.theta;
    if (p.range_end < degree_bound + 1)
        throw Error(ErrorKind::InsufficientPoints,
                    "need evaluation range past z = " + std::to_string(degree_bound));

    std::vector<WeightVector> units = enumerate_compositions(w, static_cast<int>(p.polys.size()));
    PolynomialityReport rep;
    rep.degree_bound = degree_bound;
    for (const WeightVector& pz : validated.weights) {
        Rational total(0);
        Rational denom(multinomial(N, pz));
        for (const WeightVector& a : units) {
            std::vector<int> rest(pz.parts.size());
            bool feasible = true;
            for (size_t i = 0; i < rest.size(); ++i) {
                rest[i] = pz.parts[i] - a.parts[i];
                if (rest[i] < 0) feasible = false;
            }
            if (feasible) total += Rational(multinomial(N - w, WeightVector(rest))) / denom;
        }
        rep.values.push_back(total);
    }

    // Exact Lagrange evaluation through nodes z = 0..degree_bound.
    auto interpolant_at = [&](int target) {
        Rational acc(0);
        for (int i = 0; i <= degree_bound; ++i) {
            Rational basis(1);
            for (int j = 0; j <= degree_bound; ++j) {
                if (j == i) continue;
                basis *= Rational(target - j, i - j);
            }
            acc += rep.values[static_cast<size_t>(i)] * basis;
        }
        return acc;
    };
    rep.pass = true;
    for (int z = degree_bound + 1; z <= p.range_end; ++z)
        if (interpolant_at(z) != rep.values[static_cast<size_t>(z)]) rep.pass = false;
    return rep;
}

}  // namespace picode

#endif
