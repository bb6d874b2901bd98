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

#ifndef PICODE_COMBINATORICS_HPP
#define PICODE_COMBINATORICS_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "picode/errors.hpp"
#include "picode/rational.hpp"

namespace picode {

// Ordered partition (composition) of N into q non-negative parts. Labels a
// permutation orbit of strings and hence a Dicke state.
struct WeightVector {
    std::vector<int> parts;

    WeightVector() = default;
    WeightVector(std::initializer_list<int> l) : parts(l) {}
    explicit WeightVector(std::vector<int> p) : parts(std::move(p)) {}

    int num_parts() const { return static_cast<int>(parts.size()); }
    int sum() const { return std::accumulate(parts.begin(), parts.end(), 0); }

    friend bool operator==(const WeightVector& a, const WeightVector& b) {
        return a.parts == b.parts;
    }
    friend bool operator!=(const WeightVector& a, const WeightVector& b) {
        return a.parts != b.parts;
    }
    friend bool operator<(const WeightVector& a, const WeightVector& b) {
        return a.parts < b.parts;
    }

    std::string to_string() const {
        std::string out = "(";
        for (size_t i = 0; i < parts.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(parts[i]);
        }
        return out + ")";
    }
};

inline BigInt binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

// N! / (n_1! ... n_q!), computed as a product of binomials so intermediates
// never exceed the result.
inline BigInt multinomial(int N, const WeightVector& n) {
    if (n.sum() != N)
        throw Error(ErrorKind::PartitionMismatch,
                    "parts of " + n.to_string() + " do not sum to " + std::to_string(N));
    BigInt r = 1;
    long long rest = N;
    for (int part : n.parts) {
        if (part < 0) throw Error(ErrorKind::PartitionMismatch, "negative part");
        r *= binomial(rest, part);
        rest -= part;
    }
    return r;
}

// Falling factorial (z)_j = z (z-1) ... (z-j+1), (z)_0 = 1.
inline BigInt falling_factorial(long long z, int j) {
    BigInt r = 1;
    for (int k = 1; k <= j; ++k) r *= z - k + 1;
    return r;
}

// Stirling numbers of the second kind via S(c,j) = j S(c-1,j) + S(c-1,j-1).
inline BigInt stirling2(int c, int j) {
    if (c == 0 && j == 0) return 1;
    if (c == 0 || j == 0 || j > c) return 0;
    std::vector<BigInt> row(static_cast<size_t>(j) + 1, 0);
    row[0] = 1;  // S(0,0)
    for (int cc = 1; cc <= c; ++cc) {
        for (int jj = std::min(cc, j); jj >= 1; --jj) row[jj] = jj * row[jj] + row[jj - 1];
        row[0] = 0;
    }
    return row[j];
}

// All of T_{w,q} in lexicographic order; |T_{w,q}| = binomial(w+q-1, q-1).
inline std::vector<WeightVector> enumerate_compositions(int w, int q) {
    std::vector<WeightVector> out;
    std::vector<int> cur(static_cast<size_t>(q), 0);
    // Recursion-free odometer over the first q-1 parts.
    auto emit = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == q - 1) {
            cur[pos] = remaining;
            out.push_back(WeightVector(cur));
            return;
        }
        for (int v = 0; v <= remaining; ++v) {
            cur[pos] = v;
            self(self, pos + 1, remaining - v);
        }
    };
    emit(emit, 0, w);
    return out;
}

// Minimum Hamming distance between the orbits C_n and C_u. The closed form
// (1/2) sum |n_i - u_i| is validated against the definitional brute force in
// the test suite (all N <= 8, q <= 3).
inline int orbit_min_distance(const WeightVector& n, const WeightVector& u) {
    if (n.num_parts() != u.num_parts() || n.sum() != u.sum())
        throw Error(ErrorKind::PartitionMismatch,
                    n.to_string() + " and " + u.to_string() + " are not partitions of the same N, q");
    int total = 0;
    for (int i = 0; i < n.num_parts(); ++i) total += std::abs(n.parts[i] - u.parts[i]);
    return total / 2;
}

// Minimum orbit distance over distinct weight vectors; duplicates collapse.
inline int set_min_distance(const std::vector<WeightVector>& T) {
    std::vector<WeightVector> distinct = T;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    if (distinct.size() < 2)
        throw Error(ErrorKind::TooFewOrbits, "need at least 2 distinct weight vectors");
    int best = -1;
    for (size_t i = 0; i < distinct.size(); ++i)
        for (size_t j = i + 1; j < distinct.size(); ++j) {
            int d = orbit_min_distance(distinct[i], distinct[j]);
            if (best < 0 || d < best) best = d;
        }
    return best;
}

inline std::vector<int> primes_up_to(int n) {
    std::vector<bool> sieve(static_cast<size_t>(std::max(n + 1, 2)), true);
    std::vector<int> out;
    for (int p = 2; p <= n; ++p) {
        if (!sieve[p]) continue;
        out.push_back(p);
        for (int k = 2 * p; k <= n; k += p) sieve[k] = false;
    }
    return out;
}

// Prime factorization of N! / (n_1! ... n_q!) via Legendre's formula.
// Exponent of p in N! is sum_k floor(N / p^k). All primes are <= N, which
// keeps square-root extraction of huge multinomials exact and cheap.
inline std::map<long long, long long> multinomial_prime_exponents(int N, const WeightVector& n) {
    if (n.sum() != N)
        throw Error(ErrorKind::PartitionMismatch,
                    "parts of " + n.to_string() + " do not sum to " + std::to_string(N));
    auto legendre = [](long long m, long long p) {
        long long e = 0;
        for (long long pk = p; pk <= m; pk *= p) {
            e += m / pk;
            if (pk > m / p) break;  // avoid pk overflow
        }
        return e;
    };
    std::map<long long, long long> out;
    for (int p : primes_up_to(N)) {
        long long e = legendre(N, p);
        for (int part : n.parts) e -= legendre(part, p);
        if (e != 0) out[p] = e;
    }
    return out;
}

}  // namespace picode

#endif
