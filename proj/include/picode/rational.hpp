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

#ifndef PICODE_RATIONAL_HPP
#define PICODE_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <utility>

#include "picode/errors.hpp"

namespace picode {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// Arbitrary-precision rational in canonical form: gcd(|num|, den) = 1,
// den > 0, zero is 0/1. Canonicalization is maintained by the backing
// boost::multiprecision::cpp_rational.
class Rational {
   public:
    Rational() : v_(0) {}
    Rational(long long n) : v_(n) {}  // NOLINT: implicit by design
    Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}
    Rational(const BigInt& num, const BigInt& den) {
        if (den == 0) throw Error(ErrorKind::ParseError, "rational with zero denominator");
        v_ = BigRational(num);
        v_ /= BigRational(den);  // canonicalizes sign and gcd
    }
    explicit Rational(const BigInt& n) : v_(n) {}
    explicit Rational(BigRational v) : v_(std::move(v)) {}

    BigInt numerator() const { return boost::multiprecision::numerator(v_); }
    BigInt denominator() const { return boost::multiprecision::denominator(v_); }

    bool is_zero() const { return v_.is_zero(); }
    bool is_integer() const { return denominator() == 1; }
    bool is_negative() const { return v_ < 0; }
    int sign() const { return v_.sign(); }

    Rational operator-() const { return Rational(BigRational(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw Error(ErrorKind::ParseError, "division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational abs() const { return v_ < 0 ? -*this : *this; }

    double to_double() const { return v_.convert_to<double>(); }

    // Canonical wire form, always "p/q" (e.g. "-1/10", "0/1", "3/1").
    std::string to_string() const {
        return numerator().str() + "/" + denominator().str();
    }

    // Accepts "p/q" or a bare integer "p".
    static Rational parse(const std::string& s) {
        auto slash = s.find('/');
        try {
            if (slash == std::string::npos) return Rational(BigInt(s));
            BigInt num(s.substr(0, slash));
            BigInt den(s.substr(slash + 1));
            return Rational(num, den);
        } catch (const std::exception& e) {
            throw Error(ErrorKind::ParseError, "bad rational literal '" + s + "'");
        }
    }

   private:
    BigRational v_;
};

}  // namespace picode

#endif
