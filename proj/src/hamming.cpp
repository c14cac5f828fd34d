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

#include "hamsym/hamming.hpp"

#include <deque>
#include <ostream>

#include "hamsym/errors.hpp"
#include "hamsym/kraw.hpp"

namespace hamsym {

Params::Params(int q_, int n_, int d_) : q(q_), n(n_), d(d_), p(0), m(0) {
    if (q < 2) throw DomainError("Params: q must be >= 2");
    if (n < 2) throw DomainError("Params: n must be >= 2");
    if (d < 2 || d > n) throw DomainError("Params: need 2 <= d <= n");
    // factor q = p^m with p prime
    int base = q;
    int sp = 2;
    while (sp * sp <= base && base % sp != 0) ++sp;
    if (sp * sp > base) sp = base;  // q itself prime
    int mm = 0;
    while (base % sp == 0) {
        base /= sp;
        ++mm;
    }
    if (base != 1) throw NotPrimeError("Params: q = " + std::to_string(q) + " is not a prime power");
    p = sp;
    m = mm;
}

long long Params::order() const {
    long long N = 1;
    for (int j = 0; j < n; ++j) {
        if (N > kHardVertexCap * 1024) return N;  // already far beyond any cap
        N *= q;
    }
    return N;
}

int hamming_weight(const Word& w) {
    int c = 0;
    for (int s : w) c += (s != 0);
    return c;
}

int hdist(const Word& u, const Word& v) {
    if (u.size() != v.size()) throw LengthMismatchError("hdist: words have different lengths");
    int c = 0;
    for (std::size_t j = 0; j < u.size(); ++j) c += (u[j] != v[j]);
    return c;
}

Word index_to_word(const Params& params, long long idx) {
    if (idx < 0 || idx >= params.order()) throw OutOfRangeError("index_to_word: index out of range");
    Word w(params.n);
    for (int j = params.n - 1; j >= 0; --j) {
        w[j] = static_cast<int>(idx % params.q);
        idx /= params.q;
    }
    return w;
}

long long word_to_index(const Params& params, const Word& w) {
    if (static_cast<int>(w.size()) != params.n) throw LengthMismatchError("word_to_index: wrong length");
    long long idx = 0;
    for (int j = 0; j < params.n; ++j) {
        if (w[j] < 0 || w[j] >= params.q) throw OutOfRangeError("word_to_index: symbol out of range");
        idx = idx * params.q + w[j];
    }
    return idx;
}

std::string variant_name(Variant v) { return v == Variant::gilbert ? "gilbert" : "complement"; }

Variant variant_from_name(const std::string& name) {
    if (name == "gilbert") return Variant::gilbert;
    if (name == "complement") return Variant::complement;
    throw DomainError("unknown variant: " + name);
}

Int gilbert_degree(const Params& params) {
    Int deg = 0;
    for (int i = 1; i <= params.d - 1; ++i)
        deg += binom(params.n, i) * ipow(Int(params.q - 1), static_cast<unsigned>(i));
    return deg;
}

Int complement_degree(const Params& params) {
    Int deg = 0;
    for (int i = params.d; i <= params.n; ++i)
        deg += binom(params.n, i) * ipow(Int(params.q - 1), static_cast<unsigned>(i));
    return deg;
}

long long Graph::edge_count() const {
    long long twice = 0;
    for (const DynBitset& row : adj) twice += row.count();
    return twice / 2;
}

Graph build_graph(const Params& params, Variant variant, long long vertex_cap) {
    const long long N = params.order();
    const long long cap = std::min(vertex_cap, kHardVertexCap);
    if (N > cap)
        throw TooLargeError("build_graph: q^n = " + std::to_string(N) + " exceeds vertex cap " +
                            std::to_string(cap));

    Graph g{params, variant, N, {}, 0};
    g.adj.assign(N, DynBitset(static_cast<int>(N)));

    std::vector<Word> words(N);
    for (long long v = 0; v < N; ++v) words[v] = index_to_word(params, v);

    for (int u = 0; u < N; ++u) {
        for (int v = u + 1; v < N; ++v) {
            const int dist = hdist(words[u], words[v]);
            const bool edge =
                variant == Variant::gilbert ? (dist >= 1 && dist <= params.d - 1) : (dist >= params.d);
            if (edge) {
                g.adj[u].set(v);
                g.adj[v].set(u);
            }
        }
    }

    g.degree = variant == Variant::gilbert ? gilbert_degree(params) : complement_degree(params);
    for (int u = 0; u < N; ++u)
        if (Int(g.adj[u].count()) != g.degree)
            throw AssertionFailureError("build_graph: row popcount disagrees with the closed-form degree");
    return g;
}

std::vector<int> bfs_spheres(const Graph& g, int source) {
    if (source < 0 || source >= g.order) throw OutOfRangeError("bfs_spheres: source out of range");
    std::vector<int> dist(g.order, kInfiniteDistance);
    std::deque<int> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
        const int u = queue.front();
        queue.pop_front();
        for (int v = g.adj[u].next_set(0); v >= 0; v = g.adj[u].next_set(v + 1)) {
            if (dist[v] == kInfiniteDistance) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    return dist;
}

void export_dimacs(const Graph& g, std::ostream& os) {
    os << "p edge " << g.order << " " << g.edge_count() << "\n";
    for (int u = 0; u < g.order; ++u)
        for (int v = g.adj[u].next_set(u + 1); v >= 0; v = g.adj[u].next_set(v + 1))
            os << "e " << (u + 1) << " " << (v + 1) << "\n";
}

}  // namespace hamsym
