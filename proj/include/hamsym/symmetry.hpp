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

#ifndef HAMSYM_SYMMETRY_HPP
#define HAMSYM_SYMMETRY_HPP

#include <optional>
#include <string>
#include <vector>

#include "hamsym/hamming.hpp"
#include "hamsym/ints.hpp"

namespace hamsym {

/// Closed-form transitivity classification of a Gilbert graph and its
/// complement, with the clause of the classification that applies.
struct Classification {
    bool graph_edge_transitive = false;
    bool graph_distance_transitive = false;
    bool complement_edge_transitive = false;
    bool complement_distance_transitive = false;
    std::string graph_reason;          // "T1:d=2", "T1:(q,d)=(2,3)", "T1:(q,d)=(2,n)", "none"
    std::string complement_et_reason;  // "T2:1a", "T2:1b", "none"
    std::string complement_dt_reason;  // "T2:2a", "T2:2b", "none"
};

/// Pure predicate evaluation of the classification theorems. The Gilbert
/// graph is edge-transitive iff distance-transitive iff d = 2, (q,d) = (2,3)
/// or (q,d) = (2,n); the complement is edge-transitive iff (q,d) = (2,n-1)
/// with n even or d = n, and distance-transitive iff additionally q = 2 or
/// n = 2 in the d = n case.
Classification classify(const Params& params);

/// The edge invariants F(u1), F(u2), F(u3) of the neighbors
/// u1 = (1,0,...), u2 = (1,1,0,...), u3 = (1,1,1,0,...) of the zero word:
/// the number of neighbors of u_i outside the closed neighborhood of 0.
/// F3 is defined only for q = 2 and d >= 4 (u3 must be a neighbor of 0).
struct FInvariants {
    Int f1;
    Int f2;
    std::optional<Int> f3;
};

/// Closed forms; DomainError for d < 3. F1 = binom(n-1,d-1)(q-1)^(d-1),
/// F2 = (2q-3) binom(n-2,d-2)(q-1)^(d-2) + binom(n-2,d-1)(q-1)^(d-1)
/// (for q = 2 the leading factor is 1), F3 = 2 binom(n-3,d-2) + F1.
/// Internally re-derives that F2 - F1 vanishes exactly when (q-2)(1-d)
/// does, and that F3 - F1 = 2 binom(n-3, d-2).
FInvariants f_invariants(const Params& params);

/// Direct count |N(v) \ (N(0) u {0})| on a built graph, the brute-force
/// oracle for the closed forms (the closed forms count vertices outside the
/// closed neighborhood of 0; 0 itself is adjacent to every v in N(0)).
Int f_direct_count(const Graph& g, const Word& v);

enum class AutoKind {
    translation,             // x -> x + shift (additive group of GF(q)^n)
    negation,                // x -> -x
    coordinate_permutation,  // y[j] = x[perm[j]]
    complement_swap,         // swaps u<->v and their binary complements (q=2, d=n, gilbert)
    scaling,                 // x_j -> u_j^{-1} x_j v_j (field multiplication; all u_j, v_j nonzero)
    parity_append            // x -> (x_1..x_{n-1}, wt(x) mod 2) (q=2, d=n-1, n even, complement)
};

struct AutoMap {
    AutoKind kind;
    Word shift;             // translation
    std::vector<int> perm;  // coordinate permutation
    Word u, v;              // complement_swap / scaling
};

/// Instantiates the map as a vertex permutation and verifies exhaustively
/// that it is a bijection preserving adjacency. SpecInvalidError when the
/// parameters do not match the map's domain; NotAnAutomorphismError if the
/// verification fails (construction-bug sentinel).
std::vector<int> make_automorphism(const Graph& g, const AutoMap& spec);

/// Orbit data of the stabilizer of vertex 0 in Aut(g).
struct StabilizerGroup {
    std::vector<std::vector<int>> generators;          // permutations fixing 0, sorted
    std::vector<int> dist;                             // BFS distances from 0
    /// sphere_orbits[k] = orbits (sorted vertex lists) of the sphere at
    /// distance k+1; spheres at infinite distance are not listed.
    std::vector<std::vector<std::vector<int>>> sphere_orbits;

    const std::vector<std::vector<int>>& neighborhood_orbits() const { return sphere_orbits.front(); }
};

/// Computes generators of Aut(g)_0 by backtracking over vertex images with
/// iterated color refinement, seeded with the monomial maps (coordinate and
/// symbol permutations fixing 0). Orbits are exact: inequivalence is
/// established by exhausted search, never by the refinement alone.
/// BudgetExceededError if g has more than 256 vertices or the search budget
/// is exhausted.
StabilizerGroup stabilizer_generators(const Graph& g, long long node_budget = 20'000'000);

struct TransitivityCertificate {
    bool edge_transitive = false;
    bool distance_transitive = false;
    std::vector<int> orbit_counts_per_sphere;  // finite spheres, distance 1 upward
};

/// Brute-force certification: edge-transitive iff Aut(g)_0 has a single
/// orbit on N(0); distance-transitive iff it has a single orbit on every
/// finite-distance sphere around 0 (justified by vertex-transitivity).
TransitivityCertificate certify_transitivity(const Graph& g, const StabilizerGroup& stab);
TransitivityCertificate certify_transitivity(const Graph& g);

/// Explicit idempotent entries used to refute edge-transitivity:
/// (E1)_{0,x} = K_1(wt(x); n, q) / q^n and, for q = 2,
/// (En)_{0,x} = (-1)^wt(x) / 2^n. Verifies the displayed witness values
/// (E1)_{0,u} = -n/q^n for wt(u) = n, the difference 1/q^(n-1) between the
/// weight n-1 and n entries, and for q = 2 the (E1+En) difference 2^-(n-2)
/// between weights n-2 and n. DomainError outside 1 < d < n.
struct IdempotentWitness {
    Rat e1_weight_n;              // (E1)_{0,u}, wt(u) = n
    Rat e1_diff;                  // (E1)_{0,v} - (E1)_{0,u}, wt(v) = n-1
    std::optional<Rat> e1n_diff;  // q = 2 only: (E1+En) difference for weights n-2 vs n
    bool matches_closed_forms = false;
};

IdempotentWitness idempotent_entry_witness(const Params& params);

}  // namespace hamsym

#endif  // HAMSYM_SYMMETRY_HPP
