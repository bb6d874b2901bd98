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

#ifndef PICODE_CODEGEN_HPP
#define PICODE_CODEGEN_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "picode/combinatorics.hpp"
#include "picode/errors.hpp"
#include "picode/polynomial.hpp"
#include "picode/radical.hpp"

namespace picode {

// =========================================================================
// Code construction from polynomial data
//
// Type A: f(x) = (x-1)^m g(x); logical 0/1 split by coefficient sign, with
//         amplitude^2 = 2|f_z| / sum|f_z| on the Dicke state of weight p(z).
// Type B: f(x) = (1+x+...+x^{d-1})^m g(x) with non-negative coefficients;
//         logical k collects z = k (mod d), amplitude^2 = d f_z / sum f_z.
// Both need the orbit set {p(z)} separated by >= 2t+1 and deg p_i bounded by
// 2t * theta <= m - 1.
// =========================================================================

enum class Construction { TypeA, TypeB, Theta, GNU };

struct CodeSpec {
    int q = 2;   // local dimension
    int N = 0;   // number of qudits
    int d = 2;   // logical dimension
    int t = 1;   // target correctable errors
    int m = 1;   // declared root multiplicity
    RationalPolynomial f;
    PartitionPolynomialTuple p;  // polys only; N and range are set by builders
    Construction construction = Construction::TypeA;
    Rational theta_sq;  // Theta: sin^2(theta)
    int gnu_g = 0, gnu_n = 0;
};

struct LogicalTerm {
    WeightVector weight;
    RadicalSum amplitude;
};

using LogicalVector = std::vector<LogicalTerm>;

struct PICode {
    int q = 2, N = 0, d = 2, t = 1;
    std::string construction;
    RationalPolynomial f;                     // empty for GNU codes
    std::vector<RationalPolynomial> p_polys;  // empty for GNU codes
    std::vector<LogicalVector> logical;

    std::vector<WeightVector> support() const {
        std::vector<WeightVector> out;
        for (const auto& vec : logical)
            for (const auto& term : vec) out.push_back(term.weight);
        return out;
    }

    // Exact structural invariants: unit norms, nonzero amplitudes, and
    // pairwise disjoint supports. Throws on violation.
    void check_invariants() const {
        std::map<WeightVector, int> owner;
        for (size_t k = 0; k < logical.size(); ++k) {
            RadicalSum norm;
            for (const auto& term : logical[k]) {
                if (term.amplitude.is_zero())
                    throw Error(ErrorKind::ParameterBoundViolated,
                                "zero amplitude stored on " + term.weight.to_string());
                auto [it, fresh] = owner.emplace(term.weight, static_cast<int>(k));
                if (!fresh)
                    throw Error(ErrorKind::DistanceTooSmall,
                                "weight " + term.weight.to_string() + " appears in logical " +
                                    std::to_string(it->second) + " and " + std::to_string(k));
                norm += term.amplitude * term.amplitude;
            }
            if (norm != RadicalSum(Rational(1)))
                throw Error(ErrorKind::SumMismatch,
                            "logical " + std::to_string(k) + " has norm^2 " + norm.to_string());
        }
    }
};

namespace detail {

// Shared precondition checks: p(z) valid on 0..n, support map injective
// where f_z != 0, orbit set separated by >= 2t+1, and 2t*theta <= m-1.
inline ValidatedTuple prepare_tuple(const CodeSpec& spec, const char* kind) {
    if (spec.q < 2 || spec.N < 1 || spec.d < 2 || spec.t < 1 || spec.m < 1)
        throw Error(ErrorKind::ParameterBoundViolated,
                    std::string(kind) + " needs q >= 2, N >= 1, d >= 2, t >= 1, m >= 1");
    if (spec.f.is_zero())
        throw Error(ErrorKind::ParameterBoundViolated, "f is the zero polynomial");
    if (static_cast<int>(spec.p.polys.size()) != spec.q)
        throw Error(ErrorKind::PartitionMismatch,
                    "expected " + std::to_string(spec.q) + " partition polynomials, got " +
                        std::to_string(spec.p.polys.size()));

    PartitionPolynomialTuple tuple{spec.p.polys, spec.N, spec.f.degree()};
    ValidatedTuple validated = validate_partition_tuple(tuple);

    // Distinct z in the support of f must land on distinct orbits.
    std::map<WeightVector, int> seen;
    for (int z = 0; z <= spec.f.degree(); ++z) {
        if (spec.f.coeff(z).is_zero()) continue;
        auto [it, fresh] = seen.emplace(validated.weights[static_cast<size_t>(z)], z);
        if (!fresh)
            throw Error(ErrorKind::DistanceTooSmall,
                        "p(" + std::to_string(it->second) + ") = p(" + std::to_string(z) +
                            ") = " + it->first.to_string() + "; orbit distance 0 < " +
                            std::to_string(2 * spec.t + 1));
    }

    int delta = set_min_distance(validated.weights);
    if (delta < 2 * spec.t + 1) {
        // Name one violating pair for the report.
        std::string pair;
        const auto& ws = validated.weights;
        for (size_t i = 0; i < ws.size() && pair.empty(); ++i)
            for (size_t j = i + 1; j < ws.size(); ++j)
                if (ws[i] != ws[j] && orbit_min_distance(ws[i], ws[j]) == delta) {
                    pair = ws[i].to_string() + " vs " + ws[j].to_string();
                    break;
                }
        throw Error(ErrorKind::DistanceTooSmall,
                    "orbit set distance " + std::to_string(delta) + " < " +
                        std::to_string(2 * spec.t + 1) + " (" + pair + ")");
    }

    if (2 * spec.t * validated.theta > spec.m - 1)
        throw Error(ErrorKind::DegreeBoundViolated,
                    "2t*theta = " + std::to_string(2 * spec.t * validated.theta) + " exceeds m-1 = " +
                        std::to_string(spec.m - 1));
    return validated;
}

}  // namespace detail

inline PICode build_type_a(const CodeSpec& spec) {
    if (!spec.f.divisible_by(RationalPolynomial::x_minus_one().pow(spec.m)))
        throw Error(ErrorKind::NotDivisible,
                    "f is not divisible by (x-1)^" + std::to_string(spec.m));
    ValidatedTuple validated = detail::prepare_tuple(spec, "type-A");

    Rational abs_sum(0);
    for (const Rational& c : spec.f.coeffs()) abs_sum += c.abs();

    PICode code{spec.q, spec.N, 2, spec.t, "TypeA", spec.f, spec.p.polys, {{}, {}}};
    for (int z = 0; z <= spec.f.degree(); ++z) {
        Rational fz = spec.f.coeff(z);
        if (fz.is_zero()) continue;
        RadicalSum amp = sqrt_of_rational(Rational(2) * fz.abs() / abs_sum);
        code.logical[fz.is_negative() ? 1 : 0].push_back(
            {validated.weights[static_cast<size_t>(z)], amp});
    }
    code.check_invariants();  // unit norm is forced by f(1) = 0
    return code;
}

inline PICode build_type_b(const CodeSpec& spec) {
    if (!spec.f.divisible_by(RationalPolynomial::all_ones(spec.d).pow(spec.m)))
        throw Error(ErrorKind::NotDivisible, "f is not divisible by (1+x+...+x^" +
                                                 std::to_string(spec.d - 1) + ")^" +
                                                 std::to_string(spec.m));
    for (const Rational& c : spec.f.coeffs())
        if (c.is_negative())
            throw Error(ErrorKind::NegativeCoefficient, "type-B f has a negative coefficient");

    ValidatedTuple validated = detail::prepare_tuple(spec, "type-B");

    Rational total = spec.f.eval(Rational(1));
    // Lemma-forced balance: every residue class carries sum(f)/d.
    std::vector<Rational> class_sums(static_cast<size_t>(spec.d), Rational(0));
    for (int z = 0; z <= spec.f.degree(); ++z)
        class_sums[static_cast<size_t>(z % spec.d)] += spec.f.coeff(z);
    for (int k = 0; k < spec.d; ++k)
        if (class_sums[static_cast<size_t>(k)] * Rational(spec.d) != total)
            throw Error(ErrorKind::ClassSumMismatch,
                        "residue class " + std::to_string(k) + " sums to " +
                            class_sums[static_cast<size_t>(k)].to_string() + ", expected " +
                            (total / Rational(spec.d)).to_string());

    PICode code{spec.q, spec.N, spec.d, spec.t, "TypeB", spec.f, spec.p.polys, {}};
    code.logical.resize(static_cast<size_t>(spec.d));
    for (int z = 0; z <= spec.f.degree(); ++z) {
        Rational fz = spec.f.coeff(z);
        if (fz.is_zero()) continue;
        RadicalSum amp = sqrt_of_rational(Rational(spec.d) * fz / total);
        code.logical[static_cast<size_t>(z % spec.d)].push_back(
            {validated.weights[static_cast<size_t>(z)], amp});
    }
    code.check_invariants();
    return code;
}

// One member of the uncountable family: f_theta = (1+...+x^{d-1})^m *
// ((1 - s) + s x) with s = sin^2(theta) rational, run through the type-B
// builder. sum f_z = d^m exactly.
inline PICode build_theta_family(int m, int d, const Rational& theta_sq,
                                 const PartitionPolynomialTuple& p, int q, int N, int t) {
    if (theta_sq.is_negative() || theta_sq > Rational(1))
        throw Error(ErrorKind::ParameterBoundViolated,
                    "sin^2(theta) must lie in [0,1], got " + theta_sq.to_string());
    RationalPolynomial g({Rational(1) - theta_sq, theta_sq});
    CodeSpec spec;
    spec.q = q;
    spec.N = N;
    spec.d = d;
    spec.t = t;
    spec.m = m;
    spec.f = make_type_b_f(g, m, d, /*strict=*/true).f;
    spec.p = p;
    spec.construction = Construction::Theta;
    PICode code = build_type_b(spec);
    code.construction = "Theta(" + theta_sq.to_string() + ")";
    return code;
}

// Prior-art family on qubits: amplitudes sqrt(binom(n,j)/2^{n-1}) on Dicke
// weights (g j, N - g j), even j in logical 0 and odd j in logical 1.
inline PICode build_gnu(int g, int n, int N, int t) {
    if (g < 2 * t + 1 || n < 2 * t + 1 || N < g * n)
        throw Error(ErrorKind::ParameterBoundViolated,
                    "need g, n >= 2t+1 and N >= g*n; got g=" + std::to_string(g) +
                        ", n=" + std::to_string(n) + ", N=" + std::to_string(N) +
                        ", t=" + std::to_string(t));
    Rational denom(BigInt(1) << static_cast<unsigned>(n - 1));
    PICode code{2, N, 2, t, "GNU(" + std::to_string(g) + "," + std::to_string(n) + ")",
                RationalPolynomial(), {}, {{}, {}}};
    for (int j = 0; j <= n; ++j) {
        RadicalSum amp = sqrt_of_rational(Rational(binomial(n, j)) / denom);
        code.logical[static_cast<size_t>(j % 2)].push_back(
            {WeightVector({g * j, N - g * j}), amp});
    }
    code.check_invariants();
    return code;
}

inline PICode build_code(const CodeSpec& spec) {
    switch (spec.construction) {
        case Construction::TypeA: return build_type_a(spec);
        case Construction::TypeB: return build_type_b(spec);
        case Construction::Theta:
            return build_theta_family(spec.m, spec.d, spec.theta_sq, spec.p, spec.q, spec.N,
                                      spec.t);
        case Construction::GNU: return build_gnu(spec.gnu_g, spec.gnu_n, spec.N, spec.t);
    }
    throw Error(ErrorKind::ParseError, "unknown construction");
}

// Exact inner product of two logical vectors (all amplitudes are real).
inline RadicalSum logical_overlap(const LogicalVector& v, const LogicalVector& w) {
    std::map<WeightVector, RadicalSum> lhs;
    for (const auto& term : v) lhs[term.weight] = term.amplitude;
    RadicalSum acc;
    for (const auto& term : w) {
        if (!v.empty() && (term.weight.num_parts() != v.front().weight.num_parts() ||
                           term.weight.sum() != v.front().weight.sum()))
            throw Error(ErrorKind::DimensionMismatch,
                        "logical vectors live on different (N, q) systems");
        auto it = lhs.find(term.weight);
        if (it != lhs.end()) acc += it->second * term.amplitude;
    }
    return acc;
}

}  // namespace picode

#endif
