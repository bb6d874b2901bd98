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

#ifndef PICODE_POLYNOMIAL_HPP
#define PICODE_POLYNOMIAL_HPP

#include <string>
#include <utility>
#include <vector>

#include "picode/combinatorics.hpp"
#include "picode/errors.hpp"
#include "picode/rational.hpp"

namespace picode {

// Dense univariate polynomial over Q; coefficient of x^z at index z. The
// zero polynomial is the empty list, otherwise the last entry is nonzero.
class RationalPolynomial {
   public:
    RationalPolynomial() = default;
    RationalPolynomial(std::initializer_list<Rational> l) : coeffs_(l) { trim(); }
    explicit RationalPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
        trim();
    }

    static RationalPolynomial constant(const Rational& c) {
        return RationalPolynomial(std::vector<Rational>{c});
    }
    // x - 1, 1 + x, 1 + x + ... + x^{d-1}
    static RationalPolynomial x_minus_one() { return RationalPolynomial({-1, 1}); }
    static RationalPolynomial all_ones(int d) {
        return RationalPolynomial(std::vector<Rational>(static_cast<size_t>(d), Rational(1)));
    }

    const std::vector<Rational>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero

    Rational coeff(int z) const {
        if (z < 0 || z >= static_cast<int>(coeffs_.size())) return Rational(0);
        return coeffs_[static_cast<size_t>(z)];
    }

    Rational eval(const Rational& x) const {
        Rational acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    friend RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b) {
        std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
        for (size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
        for (size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
        return RationalPolynomial(std::move(out));
    }
    friend RationalPolynomial operator-(const RationalPolynomial& a, const RationalPolynomial& b) {
        std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
        for (size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
        for (size_t i = 0; i < b.coeffs_.size(); ++i) out[i] -= b.coeffs_[i];
        return RationalPolynomial(std::move(out));
    }
    friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
        if (a.is_zero() || b.is_zero()) return RationalPolynomial();
        std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
        for (size_t i = 0; i < a.coeffs_.size(); ++i)
            for (size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return RationalPolynomial(std::move(out));
    }

    RationalPolynomial pow(int e) const {
        RationalPolynomial acc = constant(Rational(1));
        for (int i = 0; i < e; ++i) acc = acc * *this;
        return acc;
    }

    // Exact Euclidean division; returns {quotient, remainder}.
    std::pair<RationalPolynomial, RationalPolynomial> divmod(const RationalPolynomial& div) const {
        if (div.is_zero()) throw Error(ErrorKind::ParseError, "polynomial division by zero");
        std::vector<Rational> rem = coeffs_;
        std::vector<Rational> quot;
        int dd = div.degree();
        Rational lead = div.coeffs_.back();
        while (static_cast<int>(rem.size()) - 1 >= dd && !rem.empty()) {
            if (rem.back().is_zero()) {
                rem.pop_back();
                continue;
            }
            int shift = static_cast<int>(rem.size()) - 1 - dd;
            Rational factor = rem.back() / lead;
            if (static_cast<int>(quot.size()) < shift + 1) quot.resize(static_cast<size_t>(shift) + 1, Rational(0));
            quot[static_cast<size_t>(shift)] = factor;
            for (int i = 0; i <= dd; ++i)
                rem[static_cast<size_t>(shift + i)] -= factor * div.coeffs_[static_cast<size_t>(i)];
            rem.pop_back();  // leading term cancelled exactly
        }
        return {RationalPolynomial(std::move(quot)), RationalPolynomial(std::move(rem))};
    }

    bool divisible_by(const RationalPolynomial& div) const {
        return divmod(div).second.is_zero();
    }

    friend bool operator==(const RationalPolynomial& a, const RationalPolynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const RationalPolynomial& a, const RationalPolynomial& b) {
        return !(a == b);
    }

   private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }
    std::vector<Rational> coeffs_;
};

// f(x) = (x-1)^m g(x), the type-A generating polynomial.
inline RationalPolynomial make_type_a_f(const RationalPolynomial& g, int m) {
    return RationalPolynomial::x_minus_one().pow(m) * g;
}

struct TypeBPolynomial {
    RationalPolynomial f;
    bool all_nonnegative;
};

// f(x) = (1 + x + ... + x^{d-1})^m g(x), the type-B generating polynomial.
// Strict mode rejects any negative coefficient (required by the type-B
// construction).
inline TypeBPolynomial make_type_b_f(const RationalPolynomial& g, int m, int d,
                                     bool strict = false) {
    TypeBPolynomial out{RationalPolynomial::all_ones(d).pow(m) * g, true};
    for (const Rational& c : out.f.coeffs())
        if (c.is_negative()) {
            out.all_nonnegative = false;
            if (strict)
                throw Error(ErrorKind::NegativeCoefficient,
                            "type-B polynomial has a negative coefficient");
        }
    return out;
}

struct MomentReport {
    std::vector<Rational> sums;  // sum_z f_z z^c for c = 0..m-1
    bool pass;                   // all sums zero
};

// Power-moment identities: sum_z f_z z^c = 0 for c = 0..m-1. Guaranteed
// when (x-1)^m divides f; computed definitionally for arbitrary f.
inline MomentReport check_moment_identities(const RationalPolynomial& f, int m) {
    MomentReport rep{{}, true};
    for (int c = 0; c < m; ++c) {
        Rational sum(0);
        BigInt zc;
        for (int z = 0; z <= f.degree(); ++z) {
            zc = (c == 0) ? BigInt(1) : boost::multiprecision::pow(BigInt(z), static_cast<unsigned>(c));
            sum += f.coeff(z) * Rational(zc);
        }
        if (!sum.is_zero()) rep.pass = false;
        rep.sums.push_back(sum);
    }
    return rep;
}

struct RootReport {
    // class_sums[c][r] = sum of f_z z^c over z = r (mod d), for c = 0..m-1.
    std::vector<std::vector<Rational>> class_sums;
    bool pass;
};

// Root-of-unity identities: sum_z f_z w^{kz} z^c = 0 for all k = 1..d-1 and
// c = 0..m-1, checked without complex arithmetic. Grouping by residue class
// gives sum_z f_z w^{kz} z^c = sum_r w^{kr} S_{c,r}; the DFT of the class-sum
// vector (S_{c,0..d-1}) vanishes at every k != 0 iff the vector is constant.
inline RootReport check_root_identities(const RationalPolynomial& f, int d, int m) {
    RootReport rep{{}, true};
    for (int c = 0; c < m; ++c) {
        std::vector<Rational> sums(static_cast<size_t>(d), Rational(0));
        for (int z = 0; z <= f.degree(); ++z) {
            BigInt zc = (c == 0) ? BigInt(1)
                                 : boost::multiprecision::pow(BigInt(z), static_cast<unsigned>(c));
            sums[static_cast<size_t>(z % d)] += f.coeff(z) * Rational(zc);
        }
        for (int r = 1; r < d; ++r)
            if (sums[static_cast<size_t>(r)] != sums[0]) rep.pass = false;
        rep.class_sums.push_back(std::move(sums));
    }
    return rep;
}

// The tuple p(z) = (p_1(z), ..., p_q(z)) that must be an ordered partition
// of N for every z in 0..range_end.
struct PartitionPolynomialTuple {
    std::vector<RationalPolynomial> polys;
    int N = 0;
    int range_end = 0;  // evaluate at z = 0..range_end
};

struct ValidatedTuple {
    std::vector<WeightVector> weights;  // p(0), ..., p(range_end)
    int theta;                          // max_i deg p_i (0 for constant/zero polys)
};

// Evaluates the tuple on its range and confirms each value is an ordered
// partition of N: integral, non-negative, summing to N.
inline ValidatedTuple validate_partition_tuple(const PartitionPolynomialTuple& p) {
    ValidatedTuple out{{}, 0};
    for (const auto& poly : p.polys)
        out.theta = std::max(out.theta, std::max(poly.degree(), 0));
    for (int z = 0; z <= p.range_end; ++z) {
        std::vector<int> parts;
        long long total = 0;
        for (size_t i = 0; i < p.polys.size(); ++i) {
            Rational v = p.polys[i].eval(Rational(z));
            std::string at = "p_" + std::to_string(i + 1) + "(" + std::to_string(z) + ")";
            if (!v.is_integer())
                throw Error(ErrorKind::NotAnInteger, at + " = " + v.to_string());
            if (v.is_negative())
                throw Error(ErrorKind::NegativePart, at + " = " + v.to_string());
            parts.push_back(static_cast<int>(v.numerator().convert_to<long long>()));
            total += parts.back();
        }
        if (total != p.N)
            throw Error(ErrorKind::SumMismatch,
                        "p(" + std::to_string(z) + ") sums to " + std::to_string(total) +
                            ", expected " + std::to_string(p.N));
        out.weights.push_back(WeightVector(std::move(parts)));
    }
    return out;
}

}  // namespace picode

#endif
