/*
 * Copyright 2026 The hamsym Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "hamsym/scheme.hpp"

#include <algorithm>
#include <string>

#include "hamsym/errors.hpp"
#include "hamsym/kraw.hpp"

namespace hamsym {

SchemeInstance build_scheme(int n, int q, long long cap) {
    if (n < 1 || q < 2) throw DomainError("build_scheme: need n >= 1 and q >= 2");
    long long N = 1;
    for (int j = 0; j < n; ++j) {
        N *= q;
        if (N > cap) throw TooLargeError("build_scheme: q^n exceeds cap " + std::to_string(cap));
    }

    SchemeInstance s;
    s.n = n;
    s.q = q;
    s.N = N;
    s.Nint = ipow(Int(q), static_cast<unsigned>(n));

    // words in index order (base-q big-endian)
    std::vector<std::vector<int>> words(N, std::vector<int>(n));
    for (long long v = 0; v < N; ++v) {
        long long idx = v;
        for (int j = n - 1; j >= 0; --j) {
            words[v][j] = static_cast<int>(idx % q);
            idx /= q;
        }
    }

    s.dist.assign(static_cast<std::size_t>(N) * N, 0);
    s.rel.assign(n + 1, std::vector<DynBitset>(N, DynBitset(static_cast<int>(N))));
    for (int u = 0; u < N; ++u) {
        s.rel[0][u].set(u);
        for (int v = u + 1; v < N; ++v) {
            int dd = 0;
            for (int j = 0; j < n; ++j) dd += (words[u][j] != words[v][j]);
            s.dist[static_cast<std::size_t>(u) * N + v] = static_cast<std::uint8_t>(dd);
            s.dist[static_cast<std::size_t>(v) * N + u] = static_cast<std::uint8_t>(dd);
            s.rel[dd][u].set(v);
            s.rel[dd][v].set(u);
        }
    }

    s.kraw_table.assign(n + 1, std::vector<Int>(n + 1));
    for (int k = 0; k <= n; ++k)
        for (int i = 0; i <= n; ++i) s.kraw_table[k][i] = kraw_eval(k, i, n, q);
    return s;
}

bool verify_partition(const SchemeInstance& s) {
    for (int u = 0; u < s.N; ++u) {
        if (!s.rel[0][u].test(u) || s.rel[0][u].count() != 1) return false;
        int total = 0;
        for (int i = 0; i <= s.n; ++i) total += s.rel[i][u].count();
        if (total != s.N) return false;
    }
    return true;
}

bool verify_idempotents(const SchemeInstance& s) {
    const long long N = s.N;
    // sum_k E_k = I holds iff sum_k K_k(i) equals q^n at i = 0 and 0 else;
    // entries of the numerator matrices are literally K_k(dist), so the
    // distance-level check is complete.
    for (int i = 0; i <= s.n; ++i) {
        Int colsum = 0;
        for (int k = 0; k <= s.n; ++k) colsum += s.kraw_table[k][i];
        if (colsum != (i == 0 ? s.Nint : Int(0))) return false;
    }
    // E_i E_j = delta_ij E_i over the common denominator q^n:
    // M_i M_j == delta_ij * q^n * M_i as full integer matrices. The entry at
    // (u,v) is sum over distance pairs (a,b) of #{z : d(u,z)=a, d(z,v)=b}
    // times K_i(a) K_j(b); the histogram is shared across all (i,j).
    const int n = s.n;
    std::vector<Int> prod((n + 1) * (n + 1) * (n + 1) * (n + 1));
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j)
            for (int a = 0; a <= n; ++a)
                for (int b = 0; b <= n; ++b)
                    prod[((i * (n + 1) + j) * (n + 1) + a) * (n + 1) + b] =
                        s.kraw_table[i][a] * s.kraw_table[j][b];

    std::vector<long long> hist((n + 1) * (n + 1));
    for (int u = 0; u < N; ++u) {
        const std::uint8_t* du = &s.dist[static_cast<std::size_t>(u) * N];
        for (int v = 0; v < N; ++v) {
            const std::uint8_t* dv = &s.dist[static_cast<std::size_t>(v) * N];
            std::fill(hist.begin(), hist.end(), 0);
            for (int z = 0; z < N; ++z) ++hist[du[z] * (n + 1) + dv[z]];
            for (int i = 0; i <= n; ++i) {
                for (int j = i; j <= n; ++j) {
                    Int acc = 0;
                    const Int* pij = &prod[(i * (n + 1) + j) * (n + 1) * (n + 1)];
                    for (int ab = 0; ab < (n + 1) * (n + 1); ++ab)
                        if (hist[ab] != 0) acc += pij[ab] * hist[ab];
                    const Int expect = (i == j) ? s.Nint * s.kraw_table[i][du[v]] : Int(0);
                    if (acc != expect) return false;
                }
            }
        }
    }
    return true;
}

bool verify_reconstruction(const SchemeInstance& s) {
    // A_i = sum_k K_i(k) E_k: over the denominator q^n the entry at distance
    // d is sum_k K_i(k) K_k(d), which must equal q^n [d == i].
    for (int i = 0; i <= s.n; ++i) {
        for (int d = 0; d <= s.n; ++d) {
            Int acc = 0;
            for (int k = 0; k <= s.n; ++k) acc += s.kraw_table[i][k] * s.kraw_table[k][d];
            if (acc != (d == i ? s.Nint : Int(0))) return false;
        }
    }
    return true;
}

std::vector<std::vector<std::vector<std::int64_t>>> intersection_table(const SchemeInstance& s) {
    const int n = s.n;
    const long long N = s.N;
    std::vector<std::vector<std::vector<std::int64_t>>> p(
        n + 1, std::vector<std::vector<std::int64_t>>(n + 1, std::vector<std::int64_t>(n + 1, -1)));
    for (int i = 0; i <= n; ++i) {
        for (int j = 0; j <= n; ++j) {
            for (int u = 0; u < N; ++u) {
                for (int v = 0; v < N; ++v) {
                    const int k = s.distance(u, v);
                    const std::int64_t cnt = and_count(s.rel[i][u], s.rel[j][v]);
                    if (p[i][j][k] < 0)
                        p[i][j][k] = cnt;
                    else if (p[i][j][k] != cnt)
                        throw NotConstantError("intersection_table: p^" + std::to_string(k) + "_{" +
                                               std::to_string(i) + "," + std::to_string(j) +
                                               "} is not constant over the relation class");
                }
            }
        }
    }
    // commutativity p^k_{ij} = p^k_{ji}
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j)
            for (int k = 0; k <= n; ++k)
                if (p[i][j][k] != p[j][i][k])
                    throw NotConstantError("intersection_table: commutativity violated");
    return p;
}

std::int64_t intersection_numbers(const SchemeInstance& s, int i, int j, int k) {
    if (i < 0 || i > s.n || j < 0 || j > s.n || k < 0 || k > s.n)
        throw DomainError("intersection_numbers: indices out of range");
    std::int64_t value = -1;
    for (int u = 0; u < s.N; ++u) {
        for (int v = 0; v < s.N; ++v) {
            if (s.distance(u, v) != k) continue;
            const std::int64_t cnt = and_count(s.rel[i][u], s.rel[j][v]);
            if (value < 0)
                value = cnt;
            else if (value != cnt)
                throw NotConstantError("intersection_numbers: count varies over the class");
        }
    }
    if (value < 0) value = 0;  // empty relation class (e.g. k = n with n > diameter never occurs here)
    return value;
}

bool verify_idempotent_traces(const SchemeInstance& s) {
    // trace(E_k) = N * K_k(0)/q^n = K_k(0) = binom(n,k)(q-1)^k.
    for (int k = 0; k <= s.n; ++k) {
        const Int expect = binom(s.n, k) * ipow(Int(s.q - 1), static_cast<unsigned>(k));
        if (s.kraw_table[k][0] != expect) return false;
        // exact rational trace: N entries K_k(0)/q^n on the diagonal
        if (Rat(s.Nint * s.kraw_table[k][0], s.Nint) != Rat(expect)) return false;
    }
    return true;
}

bool pq_identity(int n, int q) {
    if (n < 1 || q < 2) throw DomainError("pq_identity: need n >= 1 and q >= 2");
    const Int qn = ipow(Int(q), static_cast<unsigned>(n));
    std::vector<std::vector<Int>> P(n + 1, std::vector<Int>(n + 1)), Q(n + 1, std::vector<Int>(n + 1));
    for (int i = 0; i <= n; ++i)
        for (int k = 0; k <= n; ++k) {
            P[i][k] = kraw_eval(i, k, n, q);
            Q[k][i] = kraw_eval(k, i, n, q);
        }
    for (int a = 0; a <= n; ++a)
        for (int b = 0; b <= n; ++b) {
            Int pq = 0, qp = 0;
            for (int c = 0; c <= n; ++c) {
                pq += P[a][c] * Q[c][b];
                qp += Q[a][c] * P[c][b];
            }
            const Int expect = (a == b) ? qn : Int(0);
            if (pq != expect || qp != expect) return false;
        }
    return true;
}

}  // namespace hamsym
