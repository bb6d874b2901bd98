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

#ifndef PICODE_ORACLE_HPP
#define PICODE_ORACLE_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "picode/codegen.hpp"
#include "picode/combinatorics.hpp"
#include "picode/errors.hpp"
#include "picode/klverify.hpp"

namespace picode {

// =========================================================================
// Small-scale dense floating-point simulator. Builds code vectors in the
// full q^N space (capped at 2^20), cross-checks the exact matrix-element
// engine, and runs the recovery channel end to end.
// =========================================================================

using Complex = std::complex<double>;

inline long long dense_dimension(int q, int N) {
    long long dim = 1;
    for (int i = 0; i < N; ++i) {
        dim *= q;
        if (dim > (1LL << 20))
            throw Error(ErrorKind::DimensionCap,
                        "q^N exceeds the dense cap 2^20 (q=" + std::to_string(q) +
                            ", N=" + std::to_string(N) + ")");
    }
    return dim;
}

// ------------------------------------------------------------------------
// Dense complex matrices (row-major) and a cyclic Jacobi eigensolver for
// Hermitian matrices. Everything here stays tiny (d x d Grams, local Kraus
// blocks, K x K channel Grams), so no external linear algebra is pulled in.
// ------------------------------------------------------------------------

struct CMat {
    int rows = 0, cols = 0;
    std::vector<Complex> a;

    CMat() = default;
    CMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * static_cast<size_t>(c)) {}

    Complex& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const Complex& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    static CMat identity(int n) {
        CMat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
        return m;
    }

    CMat adjoint() const {
        CMat m(cols, rows);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) m.at(j, i) = std::conj(at(i, j));
        return m;
    }

    friend CMat operator*(const CMat& x, const CMat& y) {
        CMat m(x.rows, y.cols);
        for (int i = 0; i < x.rows; ++i)
            for (int k = 0; k < x.cols; ++k) {
                Complex v = x.at(i, k);
                if (v == Complex{}) continue;
                for (int j = 0; j < y.cols; ++j) m.at(i, j) += v * y.at(k, j);
            }
        return m;
    }
    friend CMat operator-(const CMat& x, const CMat& y) {
        CMat m = x;
        for (size_t i = 0; i < m.a.size(); ++i) m.a[i] -= y.a[i];
        return m;
    }
    friend CMat operator+(const CMat& x, const CMat& y) {
        CMat m = x;
        for (size_t i = 0; i < m.a.size(); ++i) m.a[i] += y.a[i];
        return m;
    }

    double frobenius_norm() const {
        double s = 0;
        for (const Complex& v : a) s += std::norm(v);
        return std::sqrt(s);
    }
};

struct HermitianEigen {
    std::vector<double> values;
    CMat vectors;  // columns are eigenvectors: A = V diag(values) V^dagger
};

// Cyclic Jacobi with complex rotations; fine for the <= ~40 x 40 Hermitian
// matrices that appear here.
inline HermitianEigen jacobi_hermitian(CMat A) {
    int n = A.rows;
    CMat V = CMat::identity(n);
    double scale = A.frobenius_norm();
    if (scale == 0) return {std::vector<double>(static_cast<size_t>(n), 0.0), V};
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off += std::norm(A.at(p, q));
        if (std::sqrt(off) < 1e-15 * scale) break;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) {
                Complex apq = A.at(p, q);
                double mag = std::abs(apq);
                if (mag < 1e-18 * scale) continue;
                Complex phase = apq / mag;  // apq = |apq| e^{i phi}
                double app = A.at(p, p).real(), aqq = A.at(q, q).real();
                double tau = (aqq - app) / (2 * mag);
                double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1 + tau * tau));
                double c = 1.0 / std::sqrt(1 + t * t), s = t * c;
                // Unitary U: U(p,p)=c, U(p,q)=s*phase, U(q,p)=-s*conj(phase)... columns mix p,q.
                // Apply A <- U^dagger A U and V <- V U with
                // U = [[c, s*phase], [-s*conj(phase), c]] acting on (p, q).
                for (int k = 0; k < n; ++k) {  // right multiplication: columns p, q
                    Complex akp = A.at(k, p), akq = A.at(k, q);
                    A.at(k, p) = c * akp - s * std::conj(phase) * akq;
                    A.at(k, q) = s * phase * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {  // left multiplication by U^dagger: rows p, q
                    Complex apk = A.at(p, k), aqk = A.at(q, k);
                    A.at(p, k) = c * apk - s * phase * aqk;
                    A.at(q, k) = s * std::conj(phase) * apk + c * aqk;
                }
                for (int k = 0; k < n; ++k) {
                    Complex vkp = V.at(k, p), vkq = V.at(k, q);
                    V.at(k, p) = c * vkp - s * std::conj(phase) * vkq;
                    V.at(k, q) = s * phase * vkp + c * vkq;
                }
            }
    }
    std::vector<double> vals(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) vals[static_cast<size_t>(i)] = A.at(i, i).real();
    return {std::move(vals), std::move(V)};
}

// V f(diag) V^dagger for a spectral function f.
template <typename F>
inline CMat hermitian_function(const HermitianEigen& eig, F&& f) {
    int n = eig.vectors.rows;
    CMat out(n, n);
    for (int k = 0; k < n; ++k) {
        double fv = f(eig.values[static_cast<size_t>(k)]);
        if (fv == 0) continue;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                out.at(i, j) += fv * eig.vectors.at(i, k) * std::conj(eig.vectors.at(j, k));
    }
    return out;
}

// ------------------------------------------------------------------------
// Dense state vectors. Index encodes the string (c_1, ..., c_N) base q with
// c_1 most significant; letters run 0..q-1.
// ------------------------------------------------------------------------

struct DenseVector {
    int q = 2, N = 0;
    std::vector<Complex> amp;

    DenseVector() = default;
    DenseVector(int q_, int N_) : q(q_), N(N_), amp(static_cast<size_t>(dense_dimension(q_, N_))) {}

    long long dim() const { return static_cast<long long>(amp.size()); }

    double norm() const {
        double s = 0;
        for (const Complex& v : amp) s += std::norm(v);
        return std::sqrt(s);
    }

    friend Complex inner(const DenseVector& x, const DenseVector& y) {
        Complex s = 0;
        for (size_t i = 0; i < x.amp.size(); ++i) s += std::conj(x.amp[i]) * y.amp[i];
        return s;
    }
};

inline DenseVector dense_dicke(const WeightVector& n, int q, int N) {
    if (n.num_parts() != q || n.sum() != N)
        throw Error(ErrorKind::PartitionMismatch,
                    n.to_string() + " is not an ordered partition of " + std::to_string(N) +
                        " into " + std::to_string(q) + " parts");
    DenseVector v(q, N);
    std::vector<int> s;
    for (int letter = 0; letter < q; ++letter)
        s.insert(s.end(), static_cast<size_t>(n.parts[static_cast<size_t>(letter)]), letter);
    double amp = 1.0 / std::sqrt(multinomial(N, n).convert_to<double>());
    do {
        long long idx = 0;
        for (int c : s) idx = idx * q + c;
        v.amp[static_cast<size_t>(idx)] = amp;
    } while (std::next_permutation(s.begin(), s.end()));
    return v;
}

inline DenseVector dense_code_vector(const PICode& code, int k) {
    DenseVector v(code.q, code.N);
    for (const auto& term : code.logical.at(static_cast<size_t>(k))) {
        DenseVector d = dense_dicke(term.weight, code.q, code.N);
        double a = term.amplitude.to_double();
        for (size_t i = 0; i < v.amp.size(); ++i) v.amp[i] += a * d.amp[i];
    }
    return v;
}

// Relabel qudit positions: out[(c_{perm(1)}, ..., c_{perm(N)})] = in[c].
inline DenseVector permute_qudits(const DenseVector& v, const std::vector<int>& perm) {
    DenseVector out(v.q, v.N);
    std::vector<int> digits(static_cast<size_t>(v.N));
    for (long long idx = 0; idx < v.dim(); ++idx) {
        long long rest = idx;
        for (int i = v.N - 1; i >= 0; --i) {
            digits[static_cast<size_t>(i)] = static_cast<int>(rest % v.q);
            rest /= v.q;
        }
        long long target = 0;
        for (int i = 0; i < v.N; ++i)
            target = target * v.q + digits[static_cast<size_t>(perm[static_cast<size_t>(i)])];
        out.amp[static_cast<size_t>(target)] = v.amp[static_cast<size_t>(idx)];
    }
    return out;
}

// ------------------------------------------------------------------------
// Kraus operators and channels. A Kraus operator is either a local block on
// a small support, or a global operator in the factored form
// alpha*I + left * right^dagger; recovery operators are rank <= d and never
// materialize dim x dim matrices.
// ------------------------------------------------------------------------

struct KrausOp {
    std::vector<int> support;  // non-empty: local block on these positions
    CMat block;                // q^s x q^s when local

    Complex alpha{0.0, 0.0};  // global form: alpha*I + left*right^dagger
    CMat left, right;         // dim x r

    bool is_local() const { return !support.empty() || (left.cols == 0 && alpha == Complex{}); }

    DenseVector apply(const DenseVector& v) const {
        if (!support.empty()) return apply_local(v);
        DenseVector out(v.q, v.N);
        if (alpha != Complex{})
            for (size_t i = 0; i < v.amp.size(); ++i) out.amp[i] = alpha * v.amp[i];
        for (int c = 0; c < left.cols; ++c) {
            Complex coeff = 0;
            for (long long i = 0; i < v.dim(); ++i)
                coeff += std::conj(right.at(static_cast<int>(i), c)) * v.amp[static_cast<size_t>(i)];
            if (coeff == Complex{}) continue;
            for (long long i = 0; i < v.dim(); ++i)
                out.amp[static_cast<size_t>(i)] += left.at(static_cast<int>(i), c) * coeff;
        }
        return out;
    }

   private:
    DenseVector apply_local(const DenseVector& v) const {
        int s = static_cast<int>(support.size());
        long long sub_dim = 1;
        for (int i = 0; i < s; ++i) sub_dim *= v.q;
        // Strides of the supported positions (position 0 = most significant).
        std::vector<long long> stride(static_cast<size_t>(s), 1);
        for (size_t i = 0; i < support.size(); ++i)
            for (int pos = support[i] + 1; pos < v.N; ++pos) stride[i] *= v.q;

        DenseVector out(v.q, v.N);
        for (long long idx = 0; idx < v.dim(); ++idx) {
            if (v.amp[static_cast<size_t>(idx)] == Complex{}) continue;
            long long col = 0, base = idx;
            for (int i = 0; i < s; ++i) {
                int digit = static_cast<int>((idx / stride[static_cast<size_t>(i)]) % v.q);
                col = col * v.q + digit;
                base -= digit * stride[static_cast<size_t>(i)];
            }
            for (long long row = 0; row < sub_dim; ++row) {
                Complex m = block.at(static_cast<int>(row), static_cast<int>(col));
                if (m == Complex{}) continue;
                long long target = base, r = row;
                for (int i = s - 1; i >= 0; --i) {
                    target += (r % v.q) * stride[static_cast<size_t>(i)];
                    r /= v.q;
                }
                out.amp[static_cast<size_t>(target)] += m * v.amp[static_cast<size_t>(idx)];
            }
        }
        return out;
    }
};

struct DenseChannel {
    int q = 2, N = 0;
    int weight_bound = 0;  // max Kraus support size
    std::vector<KrausOp> kraus;
    double completeness_residual = 0.0;
};

// Deterministic-from-seed channel: num_kraus Gaussian blocks on one random
// support of size <= t, renormalized so sum A^dagger A = I exactly in float.
inline DenseChannel random_weight_t_channel(int q, int N, int t, int num_kraus,
                                            unsigned long long seed) {
    dense_dimension(q, N);
    if (t > N) throw Error(ErrorKind::ParameterBoundViolated, "t exceeds N");
    DenseChannel ch{q, N, t, {}, 0.0};
    if (t == 0 || num_kraus < 1) {
        KrausOp id;
        id.alpha = 1.0;
        ch.kraus.push_back(std::move(id));
        return ch;
    }

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> size_pick(1, t);
    int s = size_pick(rng);
    std::vector<int> all(static_cast<size_t>(N));
    for (int i = 0; i < N; ++i) all[static_cast<size_t>(i)] = i;
    std::shuffle(all.begin(), all.end(), rng);
    std::vector<int> support(all.begin(), all.begin() + s);
    std::sort(support.begin(), support.end());

    int sub = 1;
    for (int i = 0; i < s; ++i) sub *= q;
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<CMat> blocks;
    CMat gram(sub, sub);
    for (int k = 0; k < num_kraus; ++k) {
        CMat b(sub, sub);
        for (auto& x : b.a) x = Complex(gauss(rng), gauss(rng));
        gram = gram + b.adjoint() * b;
        blocks.push_back(std::move(b));
    }
    CMat inv_sqrt = hermitian_function(jacobi_hermitian(gram),
                                       [](double x) { return x > 0 ? 1.0 / std::sqrt(x) : 0.0; });
    CMat check(sub, sub);
    for (auto& b : blocks) {
        b = b * inv_sqrt;
        check = check + b.adjoint() * b;
        KrausOp op;
        op.support = support;
        op.block = b;
        ch.kraus.push_back(std::move(op));
    }
    ch.completeness_residual = (check - CMat::identity(sub)).frobenius_norm();
    return ch;
}

// ------------------------------------------------------------------------
// Recovery channel. Per canonical Kraus F_k the recovery operator is
// R_k = Psi G_k^{-1/2} (F_k Psi)^dagger, the polar-decomposition inverse on
// the code space; a completion Kraus restores trace preservation.
//
// The given Kraus set is first rotated so that the code-space Gram
// g_ij = <psi|A_i^dagger A_j|psi> becomes diagonal. The rotated operators
// map the code space to mutually orthogonal subspaces, which is what makes
// the per-Kraus polar formula a valid (trace-nonincreasing) channel; the
// rotation leaves the channel itself unchanged.
// ------------------------------------------------------------------------

struct RecoveryThresholds {
    double gram_eigenvalue_cut = 1e-10;  // below this an A_i P direction is dropped
    double basis_cut = 1e-12;            // Gram-Schmidt column drop
};

inline DenseChannel recovery_channel(const PICode& code, const DenseChannel& channel,
                                     const RecoveryThresholds& thresholds = {}) {
    long long dim = dense_dimension(code.q, code.N);
    int d = code.d;
    int K = static_cast<int>(channel.kraus.size());

    // Orthonormal basis of the code span; for a certified code the stored
    // logical vectors already are one, so this is a float-level no-op. The
    // projector P = Psi Psi^dagger must not inherit norm defects from a
    // corrupted descriptor.
    CMat psi(static_cast<int>(dim), d);
    for (int k = 0; k < d; ++k) {
        DenseVector v = dense_code_vector(code, k);
        for (int prev = 0; prev < k; ++prev) {
            Complex ip = 0;
            for (long long i = 0; i < dim; ++i)
                ip += std::conj(psi.at(static_cast<int>(i), prev)) * v.amp[static_cast<size_t>(i)];
            for (long long i = 0; i < dim; ++i)
                v.amp[static_cast<size_t>(i)] -= ip * psi.at(static_cast<int>(i), prev);
        }
        double nrm = v.norm();
        for (long long i = 0; i < dim; ++i)
            psi.at(static_cast<int>(i), k) = v.amp[static_cast<size_t>(i)] / nrm;
    }

    // B_i = A_i Psi, column by column.
    std::vector<CMat> B(static_cast<size_t>(K), CMat(static_cast<int>(dim), d));
    for (int i = 0; i < K; ++i)
        for (int k = 0; k < d; ++k) {
            DenseVector col(code.q, code.N);
            for (long long r = 0; r < dim; ++r) col.amp[static_cast<size_t>(r)] = psi.at(static_cast<int>(r), k);
            DenseVector out = channel.kraus[static_cast<size_t>(i)].apply(col);
            for (long long r = 0; r < dim; ++r) B[static_cast<size_t>(i)].at(static_cast<int>(r), k) = out.amp[static_cast<size_t>(r)];
        }

    // Code-space Gram g_ij = (1/d) tr(B_i^dagger B_j) and its diagonalizing
    // rotation F_k = sum_i V_ik A_i.
    CMat g(K, K);
    for (int i = 0; i < K; ++i)
        for (int j = 0; j < K; ++j) {
            Complex s = 0;
            for (int k = 0; k < d; ++k)
                for (long long r = 0; r < dim; ++r)
                    s += std::conj(B[static_cast<size_t>(i)].at(static_cast<int>(r), k)) *
                         B[static_cast<size_t>(j)].at(static_cast<int>(r), k);
            g.at(i, j) = s / static_cast<double>(d);
        }
    HermitianEigen geig = jacobi_hermitian(g);

    DenseChannel rec{code.q, code.N, code.N, {}, 0.0};
    std::vector<CMat> kept;  // Bc_k = F_k Psi for retained directions
    std::vector<CMat> kept_inv_sqrt, kept_inv;
    for (int k = 0; k < K; ++k) {
        if (geig.values[static_cast<size_t>(k)] <= thresholds.gram_eigenvalue_cut) continue;
        CMat bc(static_cast<int>(dim), d);
        for (int i = 0; i < K; ++i) {
            Complex w = geig.vectors.at(i, k);
            if (w == Complex{}) continue;
            for (long long r = 0; r < dim; ++r)
                for (int c = 0; c < d; ++c)
                    bc.at(static_cast<int>(r), c) += w * B[static_cast<size_t>(i)].at(static_cast<int>(r), c);
        }
        HermitianEigen gk = jacobi_hermitian(bc.adjoint() * bc);
        auto cut = thresholds.gram_eigenvalue_cut;
        kept_inv_sqrt.push_back(
            hermitian_function(gk, [cut](double x) { return x > cut ? 1.0 / std::sqrt(x) : 0.0; }));
        kept_inv.push_back(
            hermitian_function(gk, [cut](double x) { return x > cut ? 1.0 / x : 0.0; }));
        kept.push_back(std::move(bc));
    }

    // sum_k R_k^dagger R_k is a sum of projectors onto the ranges of the
    // B_k. For a certified code those ranges are orthogonal and the sum is
    // itself a projector; in general it can exceed I (the images of a
    // corrupted code overlap), so the family is whitened on the right by
    // S^{-1/2}: R_k <- R_k W S^{-1/2} W^dagger, with S the sum expressed in
    // an orthonormal basis W of the joint range. After whitening the sum is
    // exactly a projector, the completion Kraus is the complementary
    // projector, and on a certified code nothing changes (S is already a
    // projector there).
    std::vector<std::vector<Complex>> W;
    for (const CMat& bc : kept)
        for (int c = 0; c < bc.cols; ++c) {
            std::vector<Complex> col(static_cast<size_t>(dim));
            double original = 0;
            for (long long r = 0; r < dim; ++r) {
                col[static_cast<size_t>(r)] = bc.at(static_cast<int>(r), c);
                original += std::norm(col[static_cast<size_t>(r)]);
            }
            for (const auto& w : W) {
                Complex ip = 0;
                for (size_t r = 0; r < col.size(); ++r) ip += std::conj(w[r]) * col[r];
                for (size_t r = 0; r < col.size(); ++r) col[r] -= ip * w[r];
            }
            double nrm = 0;
            for (const Complex& x : col) nrm += std::norm(x);
            nrm = std::sqrt(nrm);
            if (nrm < thresholds.basis_cut * (1 + std::sqrt(original))) continue;
            for (Complex& x : col) x /= nrm;
            W.push_back(std::move(col));
        }
    int r = static_cast<int>(W.size());
    if (r == 0) {
        KrausOp completion;
        completion.alpha = 1.0;
        rec.kraus.push_back(std::move(completion));
        return rec;
    }

    CMat Wm(static_cast<int>(dim), r);
    for (int c = 0; c < r; ++c)
        for (long long i = 0; i < dim; ++i)
            Wm.at(static_cast<int>(i), c) = W[static_cast<size_t>(c)][static_cast<size_t>(i)];
    std::vector<CMat> X;  // X_k = W^dagger B_k
    CMat S(r, r);
    for (size_t k = 0; k < kept.size(); ++k) {
        X.push_back(Wm.adjoint() * kept[k]);
        S = S + X.back() * kept_inv[k] * X.back().adjoint();
    }
    HermitianEigen seig = jacobi_hermitian(S);
    auto cut = thresholds.gram_eigenvalue_cut;
    CMat s_inv_sqrt = hermitian_function(seig, [cut](double x) { return x > cut ? 1.0 / std::sqrt(x) : 0.0; });

    for (size_t k = 0; k < kept.size(); ++k) {
        KrausOp op;
        op.left = psi * kept_inv_sqrt[k];             // dim x d
        op.right = Wm * (s_inv_sqrt * X[k]);          // dim x d; K = left * right^dagger
        rec.kraus.push_back(std::move(op));
    }

    // Completion: I minus the projector onto range(S) inside span(W).
    int rank = 0;
    for (int i = 0; i < r; ++i) rank += seig.values[static_cast<size_t>(i)] > cut;
    CMat basis(r, rank);
    for (int i = 0, c = 0; i < r; ++i) {
        if (seig.values[static_cast<size_t>(i)] <= cut) continue;
        for (int row = 0; row < r; ++row) basis.at(row, c) = seig.vectors.at(row, i);
        ++c;
    }
    CMat WT = Wm * basis;
    KrausOp completion;
    completion.alpha = 1.0;
    CMat L = WT;
    for (auto& x : L.a) x = -x;
    completion.left = std::move(L);
    completion.right = WT;

    // Residual of sum K^dagger K - I in the W basis:
    // S^{-1/2} S S^{-1/2} - proj(range S), zero up to roundoff.
    CMat proj = hermitian_function(seig, [cut](double x) { return x > cut ? 1.0 : 0.0; });
    CMat resid = s_inv_sqrt * S * s_inv_sqrt - proj;
    rec.completeness_residual = resid.frobenius_norm();
    rec.kraus.push_back(std::move(completion));
    return rec;
}

// Fidelity <psi| R(N(|psi><psi|)) |psi> = sum_{i,j} |<psi| R_j A_i |psi>|^2,
// via vector operations only.
inline double recovery_fidelity(const DenseVector& psi, const DenseChannel& channel,
                                const DenseChannel& recovery) {
    double fid = 0;
    for (const auto& a : channel.kraus) {
        DenseVector mid = a.apply(psi);
        for (const auto& rkraus : recovery.kraus) {
            Complex amp = inner(psi, rkraus.apply(mid));
            fid += std::norm(amp);
        }
    }
    return fid;
}

// Haar-style random unit vector in the code span, deterministic per rng.
// The final vector is normalized, so this stays a valid state even when the
// stored logical vectors are not exactly unit norm.
inline DenseVector random_logical_state(const PICode& code, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    DenseVector out(code.q, code.N);
    for (int k = 0; k < code.d; ++k) {
        DenseVector v = dense_code_vector(code, k);
        Complex c(gauss(rng), gauss(rng));
        for (size_t i = 0; i < out.amp.size(); ++i) out.amp[i] += c * v.amp[i];
    }
    double nrm = out.norm();
    for (auto& x : out.amp) x /= nrm;
    return out;
}

// ------------------------------------------------------------------------
// Cross-check of the exact matrix-element engine against dense numerics.
// ------------------------------------------------------------------------

struct CrosscheckReport {
    int trials = 0;
    unsigned long long seed = 0;
    double max_abs_delta = 0.0;        // exact vs dense
    double max_representative_delta = 0.0;  // between two strings of one class
};

namespace detail {

// <D_n| (|s><s'| (x) I) |D_m> densely, for concrete strings s, s' on the
// first w qudits.
inline Complex dense_unit_element(const DenseVector& dn, const DenseVector& dm,
                                  const std::vector<int>& s, const std::vector<int>& s_prime) {
    int q = dn.q, N = dn.N;
    long long rest_dim = 1;
    for (size_t i = s.size(); i < static_cast<size_t>(N); ++i) rest_dim *= q;
    long long s_idx = 0, sp_idx = 0;
    for (int c : s) s_idx = s_idx * q + c;
    for (int c : s_prime) sp_idx = sp_idx * q + c;
    Complex acc = 0;
    for (long long rest = 0; rest < rest_dim; ++rest)
        acc += std::conj(dn.amp[static_cast<size_t>(s_idx * rest_dim + rest)]) *
               dm.amp[static_cast<size_t>(sp_idx * rest_dim + rest)];
    return acc;
}

inline std::vector<int> canonical_string(const WeightVector& a) {
    std::vector<int> s;
    for (int letter = 0; letter < a.num_parts(); ++letter)
        s.insert(s.end(), static_cast<size_t>(a.parts[static_cast<size_t>(letter)]), letter);
    return s;
}

}  // namespace detail

inline CrosscheckReport crosscheck_matrix_elements(int q, int N, int w, int trials,
                                                   unsigned long long seed) {
    dense_dimension(q, N);
    if (w > N) throw Error(ErrorKind::ParameterBoundViolated, "w exceeds N");
    std::mt19937_64 rng(seed);
    auto TN = enumerate_compositions(N, q);
    auto Tw = enumerate_compositions(w, q);
    std::uniform_int_distribution<size_t> pickN(0, TN.size() - 1), pickw(0, Tw.size() - 1);

    CrosscheckReport rep{trials, seed, 0.0, 0.0};
    for (int trial = 0; trial < trials; ++trial) {
        const WeightVector &n = TN[pickN(rng)], &m = TN[pickN(rng)];
        const WeightVector &a = Tw[pickw(rng)], &ap = Tw[pickw(rng)];
        MatrixUnitClass cls{w, a, ap};
        double exact = dicke_matrix_element(n, m, cls, N).to_double();

        DenseVector dn = dense_dicke(n, q, N), dm = dense_dicke(m, q, N);
        std::vector<int> s = detail::canonical_string(a), sp = detail::canonical_string(ap);
        Complex dense1 = detail::dense_unit_element(dn, dm, s, sp);
        std::shuffle(s.begin(), s.end(), rng);
        std::shuffle(sp.begin(), sp.end(), rng);
        Complex dense2 = detail::dense_unit_element(dn, dm, s, sp);

        rep.max_abs_delta = std::max(rep.max_abs_delta, std::abs(dense1 - Complex(exact, 0)));
        rep.max_representative_delta =
            std::max(rep.max_representative_delta, std::abs(dense1 - dense2));
    }
    return rep;
}

}  // namespace picode

#endif
