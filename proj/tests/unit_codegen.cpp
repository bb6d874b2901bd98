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

#include "picode/codegen.hpp"
#include "picode/examples.hpp"

using namespace picode;

namespace {

RadicalSum amp_sqrt(long long num, long long den) {
    return sqrt_of_rational(Rational(num, den));
}

void check_term(const LogicalTerm& term, const WeightVector& w, const RadicalSum& amp) {
    CHECK(term.weight == w);
    CHECK(term.amplitude == amp);
}

}  // namespace

TEST_CASE("19-qubit type-A code") {
    PICode code = build_type_a(examples::spec(1));
    REQUIRE(code.d == 2);
    REQUIRE(code.logical[0].size() == 3);
    REQUIRE(code.logical[1].size() == 3);

    check_term(code.logical[0][0], WeightVector({15, 4}), amp_sqrt(4, 10));
    check_term(code.logical[0][1], WeightVector({6, 13}), amp_sqrt(5, 10));
    check_term(code.logical[0][2], WeightVector({0, 19}), amp_sqrt(1, 10));
    check_term(code.logical[1][0], WeightVector({18, 1}), amp_sqrt(1, 10));
    check_term(code.logical[1][1], WeightVector({12, 7}), amp_sqrt(5, 10));
    check_term(code.logical[1][2], WeightVector({3, 16}), amp_sqrt(4, 10));

    code.check_invariants();
    CHECK(logical_overlap(code.logical[0], code.logical[1]).is_zero());
    CHECK(logical_overlap(code.logical[0], code.logical[0]) == RadicalSum(Rational(1)));
}

TEST_CASE("108-qutrit type-A code") {
    PICode code = build_type_a(examples::spec(2));
    REQUIRE(code.q == 3);
    check_term(code.logical[0][0], WeightVector({105, 3, 0}), amp_sqrt(4, 10));
    check_term(code.logical[0][1], WeightVector({60, 48, 0}), amp_sqrt(5, 10));
    check_term(code.logical[0][2], WeightVector({0, 108, 0}), amp_sqrt(1, 10));
    check_term(code.logical[1][0], WeightVector({108, 0, 0}), amp_sqrt(1, 10));
    check_term(code.logical[1][1], WeightVector({96, 12, 0}), amp_sqrt(5, 10));
    check_term(code.logical[1][2], WeightVector({33, 75, 0}), amp_sqrt(4, 10));
    code.check_invariants();
}

TEST_CASE("type-A rejects under-separated orbits") {
    CodeSpec spec = examples::spec(1);
    spec.p.polys = {RationalPolynomial({19, -1}), RationalPolynomial({0, 1})};
    CHECK_THROWS_MATCHES(build_type_a(spec), Error,
                         Catch::Matchers::MessageMatches(
                             Catch::Matchers::ContainsSubstring("DistanceTooSmall")));
}

TEST_CASE("type-A rejects a wrong multiplicity claim") {
    CodeSpec spec = examples::spec(1);
    spec.m = 6;  // f only has a root of multiplicity 5 at x = 1
    CHECK_THROWS_MATCHES(build_type_a(spec), Error,
                         Catch::Matchers::MessageMatches(
                             Catch::Matchers::ContainsSubstring("NotDivisible")));
}

TEST_CASE("type-A degree bound") {
    // theta = 2 with m = 5, t = 1 passes (4 <= 4); t = 2 must fail (8 > 4).
    CodeSpec spec = examples::spec(2);
    spec.t = 2;
    CHECK_THROWS_AS(build_type_a(spec), Error);
}

TEST_CASE("18-qubit qutrit-logical type-B code") {
    PICode code = build_type_b(examples::spec(4));
    REQUIRE(code.d == 3);
    REQUIRE(code.logical[0].size() == 3);
    REQUIRE(code.logical[1].size() == 2);
    REQUIRE(code.logical[2].size() == 2);

    check_term(code.logical[0][0], WeightVector({0, 18}), amp_sqrt(1, 9));
    check_term(code.logical[0][1], WeightVector({9, 9}), amp_sqrt(7, 9));
    check_term(code.logical[0][2], WeightVector({18, 0}), amp_sqrt(1, 9));
    check_term(code.logical[1][0], WeightVector({3, 15}), amp_sqrt(3, 9));
    check_term(code.logical[1][1], WeightVector({12, 6}), amp_sqrt(6, 9));
    check_term(code.logical[2][0], WeightVector({6, 12}), amp_sqrt(6, 9));
    check_term(code.logical[2][1], WeightVector({15, 3}), amp_sqrt(3, 9));
    code.check_invariants();
    for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b)
            CHECK(logical_overlap(code.logical[a], code.logical[b]).is_zero());
}

TEST_CASE("27-qubit 4-level type-B code") {
    PICode code = build_type_b(examples::spec(5));
    REQUIRE(code.d == 4);
    check_term(code.logical[0][0], WeightVector({0, 27}), amp_sqrt(1, 16));
    check_term(code.logical[0][1], WeightVector({12, 15}), amp_sqrt(12, 16));
    check_term(code.logical[0][2], WeightVector({24, 3}), amp_sqrt(3, 16));
    check_term(code.logical[1][0], WeightVector({3, 24}), amp_sqrt(3, 16));
    check_term(code.logical[1][1], WeightVector({15, 12}), amp_sqrt(12, 16));
    check_term(code.logical[1][2], WeightVector({27, 0}), amp_sqrt(1, 16));
    check_term(code.logical[2][0], WeightVector({6, 21}), amp_sqrt(6, 16));
    check_term(code.logical[2][1], WeightVector({18, 9}), amp_sqrt(10, 16));
    check_term(code.logical[3][0], WeightVector({9, 18}), amp_sqrt(10, 16));
    check_term(code.logical[3][1], WeightVector({21, 6}), amp_sqrt(6, 16));
    code.check_invariants();
}

TEST_CASE("36-qubit 5-level type-B code") {
    PICode code = build_type_b(examples::spec(6));
    REQUIRE(code.d == 5);
    check_term(code.logical[0][0], WeightVector({0, 36}), amp_sqrt(1, 25));
    check_term(code.logical[0][1], WeightVector({15, 21}), amp_sqrt(18, 25));
    check_term(code.logical[0][2], WeightVector({30, 6}), amp_sqrt(6, 25));
    check_term(code.logical[1][0], WeightVector({3, 33}), amp_sqrt(3, 25));
    check_term(code.logical[1][1], WeightVector({18, 18}), amp_sqrt(19, 25));
    check_term(code.logical[1][2], WeightVector({33, 3}), amp_sqrt(3, 25));
    check_term(code.logical[2][0], WeightVector({6, 30}), amp_sqrt(6, 25));
    check_term(code.logical[2][1], WeightVector({21, 15}), amp_sqrt(18, 25));
    check_term(code.logical[2][2], WeightVector({36, 0}), amp_sqrt(1, 25));
    check_term(code.logical[3][0], WeightVector({9, 27}), amp_sqrt(10, 25));
    check_term(code.logical[3][1], WeightVector({24, 12}), amp_sqrt(15, 25));
    check_term(code.logical[4][0], WeightVector({12, 24}), amp_sqrt(15, 25));
    check_term(code.logical[4][1], WeightVector({27, 9}), amp_sqrt(10, 25));
    code.check_invariants();
}

TEST_CASE("type-B sign and class-sum gates") {
    CodeSpec spec = examples::spec(4);
    spec.f = RationalPolynomial({1, -1}) * spec.f;
    spec.m = 1;
    CHECK_THROWS_MATCHES(build_type_b(spec), Error,
                         Catch::Matchers::MessageMatches(
                             Catch::Matchers::ContainsSubstring("NegativeCoefficient")));
}

TEST_CASE("type-A sign classes balance exactly") {
    for (const CodeSpec& spec : {examples::spec(1), examples::spec(2)}) {
        Rational pos(0), neg(0);
        for (int z = 0; z <= spec.f.degree(); ++z) {
            Rational c = spec.f.coeff(z);
            (c.is_negative() ? neg : pos) += c.abs();
        }
        CHECK(pos == neg);
    }
}

TEST_CASE("theta family boundaries") {
    PartitionPolynomialTuple p{{RationalPolynomial({0, 3}), RationalPolynomial({12, -3})}, 12, 0};

    PICode base = build_theta_family(3, 2, Rational(0), p, 2, 12, 1);
    // sin^2(theta) = 0 reduces to g = 1: f = (1+x)^3.
    CodeSpec plain;
    plain.q = 2;
    plain.N = 12;
    plain.d = 2;
    plain.t = 1;
    plain.m = 3;
    plain.f = make_type_b_f(RationalPolynomial::constant(Rational(1)), 3, 2).f;
    plain.p = p;
    PICode same = build_type_b(plain);
    REQUIRE(base.logical.size() == same.logical.size());
    for (size_t k = 0; k < base.logical.size(); ++k) {
        REQUIRE(base.logical[k].size() == same.logical[k].size());
        for (size_t i = 0; i < base.logical[k].size(); ++i) {
            CHECK(base.logical[k][i].weight == same.logical[k][i].weight);
            CHECK(base.logical[k][i].amplitude == same.logical[k][i].amplitude);
        }
    }

    // sin^2(theta) = 1 is the same code shifted by one in z.
    PICode shifted = build_theta_family(3, 2, Rational(1), p, 2, 12, 1);
    for (int k = 0; k < 2; ++k) {
        const auto& src = base.logical[static_cast<size_t>(k)];
        const auto& dst = shifted.logical[static_cast<size_t>((k + 1) % 2)];
        REQUIRE(src.size() == dst.size());
        for (size_t i = 0; i < src.size(); ++i) {
            CHECK(src[i].amplitude == dst[i].amplitude);
            // Weight moves from p(z) to p(z+1): first part grows by 3.
            CHECK(dst[i].weight.parts[0] == src[i].weight.parts[0] + 3);
        }
    }
}

TEST_CASE("theta family interior point") {
    PartitionPolynomialTuple p{{RationalPolynomial({0, 3}), RationalPolynomial({12, -3})}, 12, 0};
    PICode code = build_theta_family(3, 2, Rational(1, 3), p, 2, 12, 1);
    // f = (1+x)^3 (2/3 + x/3): both residue class sums equal 4.
    Rational even(0), odd(0);
    for (int z = 0; z <= code.f.degree(); ++z)
        (z % 2 ? odd : even) += code.f.coeff(z);
    CHECK(even == Rational(4));
    CHECK(odd == Rational(4));
    check_term(code.logical[0][0], WeightVector({0, 12}), amp_sqrt(1, 6));
    check_term(code.logical[0][1], WeightVector({6, 6}), amp_sqrt(3, 4));
    check_term(code.logical[0][2], WeightVector({12, 0}), amp_sqrt(1, 12));
    code.check_invariants();

    CHECK_THROWS_AS(build_theta_family(3, 2, Rational(3, 2), p, 2, 12, 1), Error);
}

TEST_CASE("theta family overlaps stay strictly inside [0, 1)") {
    PartitionPolynomialTuple p{{RationalPolynomial({0, 3}), RationalPolynomial({12, -3})}, 12, 0};
    PICode a = build_theta_family(3, 2, Rational(0), p, 2, 12, 1);
    PICode b = build_theta_family(3, 2, Rational(1, 2), p, 2, 12, 1);

    RadicalSum overlap = logical_overlap(a.logical[0], b.logical[0]);
    // Frozen from the exact expansion: f_0 = (1+x)^3, f_{1/2} = (1+x)^4 / 2;
    // overlap = sqrt(1/4 * 1/8) + sqrt(3/4 * 3/4) = 3/4 + sqrt(2)/8.
    CHECK(overlap == RadicalSum(Rational(3, 4)) + RadicalSum::term(Rational(1, 8), BigInt(2)));

    // Strictness: squared overlap differs from 1 exactly, and every term of
    // the overlap is non-negative.
    CHECK(overlap * overlap != RadicalSum(Rational(1)));
    for (const auto& [rad, coeff] : overlap.terms()) CHECK(!coeff.is_negative());
}

TEST_CASE("gnu prior-art code") {
    PICode code = build_gnu(3, 3, 9, 1);
    REQUIRE(code.logical[0].size() == 2);
    check_term(code.logical[0][0], WeightVector({0, 9}), amp_sqrt(1, 4));
    check_term(code.logical[0][1], WeightVector({6, 3}), amp_sqrt(3, 4));
    check_term(code.logical[1][0], WeightVector({3, 6}), amp_sqrt(3, 4));
    check_term(code.logical[1][1], WeightVector({9, 0}), amp_sqrt(1, 4));
    code.check_invariants();

    CHECK_NOTHROW(build_gnu(3, 3, 10, 1));  // N > gn allowed
    CHECK_THROWS_MATCHES(build_gnu(2, 3, 9, 1), Error,
                         Catch::Matchers::MessageMatches(
                             Catch::Matchers::ContainsSubstring("ParameterBoundViolated")));
}

TEST_CASE("logical_overlap rejects mismatched systems") {
    PICode a = build_gnu(3, 3, 9, 1);
    PICode b = build_gnu(3, 3, 10, 1);
    CHECK_THROWS_AS(logical_overlap(a.logical[0], b.logical[0]), Error);
}
