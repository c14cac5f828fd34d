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

#ifndef HAMSYM_SCHEME_HPP
#define HAMSYM_SCHEME_HPP

#include <cstdint>
#include <vector>

#include "hamsym/bitset.hpp"
#include "hamsym/ints.hpp"

namespace hamsym {

/// The Hamming association scheme H(n,q) on q^n points, materialized.
///
/// Distance matrices are stored as bitset rows (rel[i][u] = {v : d(u,v)=i});
/// the primitive idempotents E_k are exact rationals with the common
/// denominator q^n, represented through their integer numerator values
/// K_k(i; n, q) indexed by distance. Immutable after build.
struct SchemeInstance {
    int n = 0, q = 0;
    long long N = 0;
    Int Nint;  // q^n as an exact integer

    std::vector<std::uint8_t> dist;             // N*N distance matrix, row-major
    std::vector<std::vector<DynBitset>> rel;    // rel[i][u], i = 0..n
    std::vector<std::vector<Int>> kraw_table;   // kraw_table[k][i] = K_k(i; n, q)

    int distance(int u, int v) const { return dist[static_cast<std::size_t>(u) * N + v]; }

    /// Numerator of (E_k)_{u,v} over the common denominator q^n.
    const Int& idempotent_numer(int k, int u, int v) const { return kraw_table[k][distance(u, v)]; }
};

/// Materializes the scheme; TooLargeError if q^n > cap. Works for any
/// alphabet size q >= 2 and n >= 1 (no field structure involved).
SchemeInstance build_scheme(int n, int q, long long cap = 256);

/// Exact check that E_i E_j = delta_ij E_i for all i, j (full rational
/// matrix products over the common denominator) and that sum_k E_k = I.
bool verify_idempotents(const SchemeInstance& s);

/// Exact check that A_i = sum_k K_i(k; n, q) E_k reconstructs each distance
/// matrix (entries depend on distance only, so this is checked per class).
bool verify_reconstruction(const SchemeInstance& s);

/// p^k_{ij}: counts z with d(x,z) = i, d(z,y) = j for (x,y) at distance k,
/// verifying that the count is identical over every pair at distance k.
/// Throws NotConstantError if the scheme axiom were violated.
std::int64_t intersection_numbers(const SchemeInstance& s, int i, int j, int k);

/// Full intersection-number table p[i][j][k], with the constancy check over
/// all pairs (which simultaneously verifies A_i A_j = sum_k p^k_{ij} A_k)
/// and commutativity p^k_{ij} = p^k_{ji}.
std::vector<std::vector<std::vector<std::int64_t>>> intersection_table(const SchemeInstance& s);

/// Partition axiom: sum_i A_i = J and A_0 = I.
bool verify_partition(const SchemeInstance& s);

/// trace(E_k) = binom(n,k)(q-1)^k for all k (exact rational trace).
bool verify_idempotent_traces(const SchemeInstance& s);

/// P Q = Q P = q^n I for the (n+1)x(n+1) Krawtchouk eigenmatrices, checked
/// symbolically (no point set involved). P_{ik} = K_i(k), Q_{ki} = K_k(i).
bool pq_identity(int n, int q);

}  // namespace hamsym

#endif  // HAMSYM_SCHEME_HPP
