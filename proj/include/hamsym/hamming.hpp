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

#ifndef HAMSYM_HAMMING_HPP
#define HAMSYM_HAMMING_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "hamsym/bitset.hpp"
#include "hamsym/ints.hpp"

namespace hamsym {

constexpr long long kDefaultVertexCap = 4096;
constexpr long long kHardVertexCap = 16384;

/// Parameter triple (q, n, d) with the prime-power factorization q = p^m.
/// Gates every construction: q = p^m with p prime, n >= 2, 2 <= d <= n.
struct Params {
    int q, n, d;
    int p, m;

    Params(int q, int n, int d);

    long long order() const;  // q^n, guaranteed to fit once constructed
};

/// A vertex label: length-n vector over {0..q-1}.
using Word = std::vector<int>;

int hamming_weight(const Word& w);

/// Number of differing coordinates; LengthMismatchError on unequal lengths.
int hdist(const Word& u, const Word& v);

/// Base-q big-endian codec between vertex indices and words.
Word index_to_word(const Params& params, long long idx);
long long word_to_index(const Params& params, const Word& w);

enum class Variant { gilbert, complement };

std::string variant_name(Variant v);
Variant variant_from_name(const std::string& name);

/// Dense simple graph on q^n vertices; u ~ v iff 1 <= hdist(u,v) <= d-1
/// (gilbert) or hdist(u,v) >= d (complement). Immutable after build.
struct Graph {
    Params params;
    Variant variant;
    long long order = 0;
    std::vector<DynBitset> adj;
    Int degree;  // closed-form regular degree, verified against row popcounts

    bool adjacent(int u, int v) const { return adj[u].test(v); }
    long long edge_count() const;
};

/// Closed-form degrees: sum_{i=1}^{d-1} binom(n,i)(q-1)^i for the Gilbert
/// graph, sum_{i=d}^{n} binom(n,i)(q-1)^i for its complement.
Int gilbert_degree(const Params& params);
Int complement_degree(const Params& params);

/// Builds the graph; TooLargeError if q^n exceeds the vertex cap.
Graph build_graph(const Params& params, Variant variant, long long vertex_cap = kDefaultVertexCap);

/// Sentinel for unreachable vertices in distance vectors.
constexpr int kInfiniteDistance = -1;

/// BFS distances from source; unreachable vertices get kInfiniteDistance
/// (the d = n, q = 2 complement is disconnected).
std::vector<int> bfs_spheres(const Graph& g, int source);

/// DIMACS-like edge-list export: "p edge N M" header, "e u v" lines, 1-based.
void export_dimacs(const Graph& g, std::ostream& os);

}  // namespace hamsym

#endif  // HAMSYM_HAMMING_HPP
