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

#ifndef PICODE_RADICAL_HPP
#define PICODE_RADICAL_HPP

#include <cmath>
#include <map>
#include <string>
#include <utility>

#include "picode/errors.hpp"
#include "picode/rational.hpp"

namespace picode {

// Finite sum  sum_r c_r * sqrt(r)  with rational c_r and squarefree positive
// integer radicands r. Square roots of distinct squarefree integers are
// linearly independent over Q, so the canonical term map makes equality of
// values the same as equality of maps. The rational part sits at radicand 1.
class RadicalSum {
   public:
    using TermMap = std::map<BigInt, Rational>;

    RadicalSum() = default;
    RadicalSum(const Rational& x) {  // NOLINT: implicit by design
        if (!x.is_zero()) terms_[1] = x;
    }
    RadicalSum(long long n) : RadicalSum(Rational(n)) {}  // NOLINT

    // One term c * sqrt(r); r must already be squarefree.
    static RadicalSum term(const Rational& coeff, const BigInt& radicand) {
        RadicalSum s;
        if (!coeff.is_zero()) s.terms_[radicand] = coeff;
        return s;
    }

    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }

    // True when the value lies in Q (zero or a single radicand-1 term).
    bool is_rational() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1);
    }
    Rational rational_part() const {
        auto it = terms_.find(BigInt(1));
        return it == terms_.end() ? Rational(0) : it->second;
    }

    RadicalSum operator-() const {
        RadicalSum r;
        for (const auto& [rad, c] : terms_) r.terms_[rad] = -c;
        return r;
    }

    RadicalSum& operator+=(const RadicalSum& o) {
        for (const auto& [rad, c] : o.terms_) {
            auto it = terms_.find(rad);
            if (it == terms_.end()) {
                terms_[rad] = c;
            } else {
                it->second += c;
                if (it->second.is_zero()) terms_.erase(it);
            }
        }
        return *this;
    }
    RadicalSum& operator-=(const RadicalSum& o) { return *this += -o; }

    friend RadicalSum operator+(RadicalSum a, const RadicalSum& b) { return a += b; }
    friend RadicalSum operator-(RadicalSum a, const RadicalSum& b) { return a -= b; }

    // sqrt(r)*sqrt(s) = g*sqrt(r/g * s/g) with g = gcd(r, s); the product
    // radicand is squarefree because r/g and s/g are coprime and squarefree.
    friend RadicalSum operator*(const RadicalSum& a, const RadicalSum& b) {
        RadicalSum out;
        for (const auto& [ra, ca] : a.terms_) {
            for (const auto& [rb, cb] : b.terms_) {
                BigInt g = boost::multiprecision::gcd(ra, rb);
                BigInt rad = (ra / g) * (rb / g);
                Rational coeff = ca * cb * Rational(g);
                auto it = out.terms_.find(rad);
                if (it == out.terms_.end()) {
                    if (!coeff.is_zero()) out.terms_[rad] = coeff;
                } else {
                    it->second += coeff;
                    if (it->second.is_zero()) out.terms_.erase(it);
                }
            }
        }
        return out;
    }
    RadicalSum& operator*=(const RadicalSum& o) { return *this = *this * o; }

    friend bool operator==(const RadicalSum& a, const RadicalSum& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const RadicalSum& a, const RadicalSum& b) { return !(a == b); }

    // Relative error <= 2^-50 per term for radicands below 2^60.
    double to_double() const {
        double acc = 0.0;
        for (const auto& [rad, c] : terms_)
            acc += c.to_double() * std::sqrt(rad.convert_to<double>());
        return acc;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [rad, c] : terms_) {
            if (!out.empty()) out += " + ";
            out += c.to_string();
            if (rad != 1) out += "*sqrt(" + rad.str() + ")";
        }
        return out;
    }

   private:
    TermMap terms_;
};

namespace detail {

// n = s^2 * r with r squarefree. Trial division up to cbrt(n); the leftover
// is then 1, p, p^2 or pq, and a perfect-square test settles which.
inline std::pair<BigInt, BigInt> squarefree_decompose(BigInt n) {
    BigInt square_part = 1, free_part = 1;
    for (BigInt p = 2; p * p * p <= n; ++p) {
        if (n % p != 0) continue;
        long long e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        for (long long i = 0; i < e / 2; ++i) square_part *= p;
        if (e % 2) free_part *= p;
    }
    if (n > 1) {
        BigInt root = boost::multiprecision::sqrt(n);
        if (root * root == n)
            square_part *= root;
        else
            free_part *= n;
    }
    return {square_part, free_part};
}

inline bool is_squarefree(const BigInt& n) {
    return n > 0 && squarefree_decompose(n).first == 1;
}

}  // namespace detail

// Factoring ceiling for sqrt_of_rational. Radicands from code amplitudes
// stay tiny; anything larger must arrive pre-factored via sqrt_of_factored.
inline BigInt& sqrt_radicand_ceiling() {
    static BigInt ceiling = BigInt(1) << 64;
    return ceiling;
}

// Canonical sqrt of x = a/b >= 0:  sqrt(a/b) = sqrt(ab)/b = (s/b)*sqrt(r).
inline RadicalSum sqrt_of_rational(const Rational& x) {
    if (x.is_negative())
        throw Error(ErrorKind::NegativeRadicand, "sqrt of negative rational " + x.to_string());
    if (x.is_zero()) return RadicalSum();
    BigInt ab = x.numerator() * x.denominator();
    if (ab > sqrt_radicand_ceiling())
        throw Error(ErrorKind::RadicandTooLarge,
                    "radicand " + ab.str() + " exceeds the factoring ceiling");
    auto [s, r] = detail::squarefree_decompose(ab);
    return RadicalSum::term(Rational(s, x.denominator()), r);
}

// sqrt of a number given by its prime factorization prod p^e (e may be
// negative). Avoids refactoring huge multinomial products: e = 2k + b with
// b in {0,1} puts p^k in the coefficient and p^b in the radicand.
inline RadicalSum sqrt_of_factored(const std::map<long long, long long>& prime_exponents) {
    Rational coeff(1);
    BigInt radicand = 1;
    for (const auto& [p, e] : prime_exponents) {
        if (e == 0) continue;
        long long k = e >= 0 ? e / 2 : -((-e + 1) / 2);  // floor(e/2)
        long long b = e - 2 * k;                         // 0 or 1
        BigInt pk = boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(k >= 0 ? k : -k));
        coeff *= (k >= 0) ? Rational(pk) : Rational(BigInt(1), pk);
        if (b) radicand *= p;
    }
    return RadicalSum::term(coeff, radicand);
}

}  // namespace picode

#endif
