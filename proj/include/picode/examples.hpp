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

#ifndef PICODE_EXAMPLES_HPP
#define PICODE_EXAMPLES_HPP

#include "picode/codegen.hpp"
#include "picode/errors.hpp"
#include "picode/polynomial.hpp"

namespace picode::examples {

// The six built-in demonstration codes emitted by `picode examples`.
//
//   1  19-qubit type-A code, f = (1+x)(x-1)^5, p = (18-3z, 1+3z)
//   2  108-qutrit type-A code, same f, p = (108-3z^2, 3z^2, 0)
//   3  9-qubit type-B code (d = 2 instance of the d-level family with
//      t = 1; coincides with the GNU(3,3,9) code)
//   4  18-qubit type-B code encoding a 3-level system
//   5  27-qubit type-B code encoding a 4-level system
//   6  36-qubit type-B code encoding a 5-level system
//
// All correct one error.

inline constexpr int count = 6;

inline CodeSpec spec(int index) {
    auto one = RationalPolynomial::constant(Rational(1));
    auto one_plus_x = RationalPolynomial({1, 1});
    CodeSpec s;
    s.t = 1;
    switch (index) {
        case 1:
            s.q = 2; s.N = 19; s.d = 2; s.m = 5;
            s.construction = Construction::TypeA;
            s.f = make_type_a_f(one_plus_x, 5);
            s.p.polys = {RationalPolynomial({18, -3}), RationalPolynomial({1, 3})};
            break;
        case 2:
            s.q = 3; s.N = 108; s.d = 2; s.m = 5;
            s.construction = Construction::TypeA;
            s.f = make_type_a_f(one_plus_x, 5);
            s.p.polys = {RationalPolynomial({108, 0, -3}), RationalPolynomial({0, 0, 3}),
                         RationalPolynomial()};
            break;
        case 3:
            s.q = 2; s.N = 9; s.d = 2; s.m = 3;
            s.construction = Construction::TypeB;
            s.f = make_type_b_f(one, 3, 2).f;
            s.p.polys = {RationalPolynomial({0, 3}), RationalPolynomial({9, -3})};
            break;
        case 4:
            s.q = 2; s.N = 18; s.d = 3; s.m = 3;
            s.construction = Construction::TypeB;
            s.f = make_type_b_f(one, 3, 3).f;
            s.p.polys = {RationalPolynomial({0, 3}), RationalPolynomial({18, -3})};
            break;
        case 5:
            s.q = 2; s.N = 27; s.d = 4; s.m = 3;
            s.construction = Construction::TypeB;
            s.f = make_type_b_f(one, 3, 4).f;
            s.p.polys = {RationalPolynomial({0, 3}), RationalPolynomial({27, -3})};
            break;
        case 6:
            s.q = 2; s.N = 36; s.d = 5; s.m = 3;
            s.construction = Construction::TypeB;
            s.f = make_type_b_f(one, 3, 5).f;
            s.p.polys = {RationalPolynomial({0, 3}), RationalPolynomial({36, -3})};
            break;
        default:
            throw Error(ErrorKind::ParameterBoundViolated,
                        "example index must be 1..6, got " + std::to_string(index));
    }
    s.p.N = s.N;
    s.p.range_end = s.f.degree();
    return s;
}

}  // namespace picode::examples

#endif
