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

#include "hamsym/symmetry.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <unordered_map>

#include "hamsym/errors.hpp"
#include "hamsym/field.hpp"
#include "hamsym/kraw.hpp"

namespace hamsym {

Classification classify(const Params& params) {
    const int q = params.q, n = params.n, d = params.d;
    Classification c;
    if (d == 2)
        c.graph_reason = "T1:d=2";
    else if (q == 2 && d == 3)
        c.graph_reason = "T1:(q,d)=(2,3)";
    else if (q == 2 && d == n)
        c.graph_reason = "T1:(q,d)=(2,n)";
    else
        c.graph_reason = "none";
    c.graph_edge_transitive = c.graph_reason != "none";
    c.graph_distance_transitive = c.graph_edge_transitive;

    if (q == 2 && d == n - 1 && n % 2 == 0)
        c.complement_et_reason = "T2:1a";
    else if (d == n)
        c.complement_et_reason = "T2:1b";
    else
        c.complement_et_reason = "none";
    c.complement_edge_transitive = c.complement_et_reason != "none";

    if (q == 2 && d == n - 1 && n % 2 == 0)
        c.complement_dt_reason = "T2:2a";
    else if (d == n && (q == 2 || n == 2))
        c.complement_dt_reason = "T2:2b";
    else
        c.complement_dt_reason = "none";
    c.complement_distance_transitive = c.complement_dt_reason != "none";
    return c;
}

FInvariants f_invariants(const Params& params) {
    const int q = params.q, n = params.n, d = params.d;
    if (d < 3) throw DomainError("f_invariants: u1, u2 are neighbors of 0 only for d >= 3");
    FInvariants f;
    f.f1 = binom(n - 1, d - 1) * ipow(Int(q - 1), static_cast<unsigned>(d - 1));
    // Weight-d neighbors of u2 = (1,1,0,...) outside N[0] start with (1,1),
    // (1,y) or (y,1) for a nonzero y != 1, giving the factor 2q-3; the
    // weight-(d+1) ones must start exactly with (1,1).
    f.f2 = Int(2 * q - 3) * binom(n - 2, d - 2) * ipow(Int(q - 1), static_cast<unsigned>(d - 2)) +
           binom(n - 2, d - 1) * ipow(Int(q - 1), static_cast<unsigned>(d - 1));
    // F2 - F1 = (q-2) binom(n-2,d-2) (q-1)^(d-2); it vanishes exactly when
    // (q-2)(1-d) does (d >= 3 keeps the second factor nonzero).
    if (f.f2 - f.f1 !=
        Int(q - 2) * binom(n - 2, d - 2) * ipow(Int(q - 1), static_cast<unsigned>(d - 2)))
        throw AssertionFailureError("f_invariants: F2-F1 difference form broken");
    if ((f.f2 == f.f1) != (q == 2))
        throw AssertionFailureError("f_invariants: F2-F1 factorization (q-2)(1-d) broken");
    if (q == 2 && d >= 4) {
        f.f3 = 2 * binom(n - 3, d - 2) + binom(n - 1, d - 1);
        if (*f.f3 - f.f1 != 2 * binom(n - 3, d - 2))
            throw AssertionFailureError("f_invariants: F3-F1 = 2 binom(n-3,d-2) broken");
    }
    return f;
}

Int f_direct_count(const Graph& g, const Word& v) {
    const int vi = static_cast<int>(word_to_index(g.params, v));
    if (!g.adjacent(0, vi)) throw DomainError("f_direct_count: v is not a neighbor of 0");
    int count = andnot_count(g.adj[vi], g.adj[0]);
    if (g.adj[vi].test(0)) --count;  // 0 itself is not counted by the closed forms
    return count;
}

namespace {

// Additive structure of GF(p^m) on symbol indices: digitwise mod-p.
int symbol_add(int p, int m, int a, int b) {
    int s = 0, mul = 1;
    for (int j = 0; j < m; ++j) {
        s += ((a % p) + (b % p)) % p * mul;
        a /= p;
        b /= p;
        mul *= p;
    }
    return s;
}

int symbol_neg(int p, int m, int a) {
    int s = 0, mul = 1;
    for (int j = 0; j < m; ++j) {
        s += (p - (a % p)) % p * mul;
        a /= p;
        mul *= p;
    }
    return s;
}

std::vector<int> word_map_to_permutation(const Graph& g, const std::function<Word(const Word&)>& f) {
    std::vector<int> perm(g.order);
    for (long long x = 0; x < g.order; ++x)
        perm[x] = static_cast<int>(word_to_index(g.params, f(index_to_word(g.params, x))));
    return perm;
}

void verify_automorphism(const Graph& g, const std::vector<int>& perm, const std::string& what) {
    const long long N = g.order;
    std::vector<char> seen(N, 0);
    for (long long x = 0; x < N; ++x) {
        if (perm[x] < 0 || perm[x] >= N || seen[perm[x]])
            throw NotAnAutomorphismError(what + ": not a bijection");
        seen[perm[x]] = 1;
    }
    for (int u = 0; u < N; ++u)
        for (int v = u + 1; v < N; ++v)
            if (g.adjacent(u, v) != g.adjacent(perm[u], perm[v]))
                throw NotAnAutomorphismError(what + ": adjacency not preserved at (" + std::to_string(u) +
                                             "," + std::to_string(v) + ")");
}

}  // namespace

std::vector<int> make_automorphism(const Graph& g, const AutoMap& spec) {
    const Params& P = g.params;
    std::vector<int> perm;
    switch (spec.kind) {
        case AutoKind::translation: {
            if (static_cast<int>(spec.shift.size()) != P.n)
                throw SpecInvalidError("translation: shift must have length n");
            perm = word_map_to_permutation(g, [&](const Word& x) {
                Word y(P.n);
                for (int j = 0; j < P.n; ++j) y[j] = symbol_add(P.p, P.m, x[j], spec.shift[j]);
                return y;
            });
            break;
        }
        case AutoKind::negation: {
            perm = word_map_to_permutation(g, [&](const Word& x) {
                Word y(P.n);
                for (int j = 0; j < P.n; ++j) y[j] = symbol_neg(P.p, P.m, x[j]);
                return y;
            });
            break;
        }
        case AutoKind::coordinate_permutation: {
            if (static_cast<int>(spec.perm.size()) != P.n)
                throw SpecInvalidError("coordinate_permutation: permutation must have length n");
            std::vector<int> sorted = spec.perm;
            std::sort(sorted.begin(), sorted.end());
            for (int j = 0; j < P.n; ++j)
                if (sorted[j] != j) throw SpecInvalidError("coordinate_permutation: not a permutation of 0..n-1");
            perm = word_map_to_permutation(g, [&](const Word& x) {
                Word y(P.n);
                for (int j = 0; j < P.n; ++j) y[j] = x[spec.perm[j]];
                return y;
            });
            break;
        }
        case AutoKind::complement_swap: {
            if (P.q != 2 || P.d != P.n || g.variant != Variant::gilbert)
                throw SpecInvalidError("complement_swap: requires the Gilbert variant with q = 2, d = n");
            if (static_cast<int>(spec.u.size()) != P.n || static_cast<int>(spec.v.size()) != P.n)
                throw SpecInvalidError("complement_swap: u, v must have length n");
            const long long ui = word_to_index(P, spec.u), vi = word_to_index(P, spec.v);
            Word ub(P.n), vb(P.n);
            for (int j = 0; j < P.n; ++j) {
                ub[j] = 1 - spec.u[j];
                vb[j] = 1 - spec.v[j];
            }
            const long long ubi = word_to_index(P, ub), vbi = word_to_index(P, vb);
            perm.resize(g.order);
            std::iota(perm.begin(), perm.end(), 0);
            perm[vi] = static_cast<int>(ui);
            perm[vbi] = static_cast<int>(ubi);
            perm[ui] = static_cast<int>(vi);
            perm[ubi] = static_cast<int>(vbi);
            break;
        }
        case AutoKind::scaling: {
            if (static_cast<int>(spec.u.size()) != P.n || static_cast<int>(spec.v.size()) != P.n)
                throw SpecInvalidError("scaling: u, v must have length n");
            for (int j = 0; j < P.n; ++j)
                if (spec.u[j] == 0 || spec.v[j] == 0)
                    throw SpecInvalidError("scaling: u and v must have all entries nonzero");
            const FieldSpec field = FieldSpec::build(P.p, P.m);
            perm = word_map_to_permutation(g, [&](const Word& x) {
                Word y(P.n);
                for (int j = 0; j < P.n; ++j)
                    y[j] = field.mul(field.mul(field.inv(spec.u[j]), x[j]), spec.v[j]);
                return y;
            });
            break;
        }
        case AutoKind::parity_append: {
            if (P.q != 2 || P.d != P.n - 1 || P.n % 2 != 0 || g.variant != Variant::complement)
                throw SpecInvalidError(
                    "parity_append: requires the complement variant with q = 2, d = n-1, n even");
            perm = word_map_to_permutation(g, [&](const Word& x) {
                Word y = x;
                y[P.n - 1] = hamming_weight(x) % 2;
                return y;
            });
            break;
        }
    }
    verify_automorphism(g, perm, "make_automorphism");
    return perm;
}

// ---------------------------------------------------------------------------
// Stabilizer search
// ---------------------------------------------------------------------------

namespace {

// Canonical iterated color refinement (1-WL) with individualized vertices.
// Color ids are ranks of sorted signatures, so two refinements of the same
// graph with symmetric individualizations assign comparable ids.
std::vector<int> refine_colors(const Graph& g, const std::vector<int>& dist,
                               const std::vector<int>& individualized) {
    const long long N = g.order;
    std::vector<std::vector<long long>> sig(N);
    for (int v = 0; v < N; ++v) {
        long long tag = 0;
        for (std::size_t k = 0; k < individualized.size(); ++k)
            if (individualized[k] == v) tag = static_cast<long long>(k) + 1;
        int sphere_deg = 0;
        for (int w = g.adj[v].next_set(0); w >= 0; w = g.adj[v].next_set(w + 1))
            sphere_deg += (dist[w] == dist[v]);
        sig[v] = {tag, dist[v], and_count(g.adj[v], g.adj[0]), sphere_deg};
    }

    std::vector<int> color(N, 0);
    int ncolors = 0;
    while (true) {
        std::map<std::vector<long long>, int> ids;
        for (int v = 0; v < N; ++v) ids.emplace(sig[v], 0);
        int next = 0;
        for (auto& kv : ids) kv.second = next++;
        for (int v = 0; v < N; ++v) color[v] = ids.at(sig[v]);
        if (next == ncolors) break;  // stable
        ncolors = next;
        for (int v = 0; v < N; ++v) {
            std::vector<long long> nb;
            for (int w = g.adj[v].next_set(0); w >= 0; w = g.adj[v].next_set(w + 1)) nb.push_back(color[w]);
            std::sort(nb.begin(), nb.end());
            sig[v].assign(1, color[v]);
            sig[v].insert(sig[v].end(), nb.begin(), nb.end());
        }
    }
    return color;
}

struct PairSearch {
    const Graph& g;
    const std::vector<int>& cu;  // colors with the source individualized
    const std::vector<int>& cv;  // colors with the target individualized
    std::vector<int> sigma, sigma_inv;
    std::vector<int> mapped;
    long long nodes = 0;
    long long budget;

    PairSearch(const Graph& g_, const std::vector<int>& cu_, const std::vector<int>& cv_, long long budget_)
        : g(g_), cu(cu_), cv(cv_), sigma(g_.order, -1), sigma_inv(g_.order, -1), budget(budget_) {
        mapped.reserve(g_.order);
    }

    bool consistent(int w, int z) const {
        for (int x : mapped)
            if (g.adjacent(w, x) != g.adjacent(z, sigma[x])) return false;
        return true;
    }

    void assign(int w, int z) {
        sigma[w] = z;
        sigma_inv[z] = w;
        mapped.push_back(w);
    }

    void unassign(int w) {
        sigma_inv[sigma[w]] = -1;
        sigma[w] = -1;
        mapped.pop_back();
    }

    bool dfs() {
        if (++nodes > budget) throw BudgetExceededError("stabilizer search: node budget exhausted");
        int w = -1;
        for (int k = 0; k < g.order; ++k)
            if (sigma[k] < 0) {
                w = k;
                break;
            }
        if (w < 0) return true;
        for (int z = 0; z < g.order; ++z) {
            if (sigma_inv[z] >= 0 || cu[w] != cv[z]) continue;
            if (!consistent(w, z)) continue;
            assign(w, z);
            if (dfs()) return true;
            unassign(w);
        }
        return false;
    }
};

// Complete decision: is there an automorphism fixing 0 with src -> dst?
std::optional<std::vector<int>> find_stabilizer_map(const Graph& g, const std::vector<int>& cu,
                                                    const std::vector<int>& cv, int src, int dst,
                                                    long long budget) {
    if (cu[src] != cv[dst]) return std::nullopt;
    std::vector<int> su = cu, sv = cv;
    std::sort(su.begin(), su.end());
    std::sort(sv.begin(), sv.end());
    if (su != sv) return std::nullopt;  // refinements are incompatible

    PairSearch search(g, cu, cv, budget);
    search.assign(0, 0);
    search.assign(src, dst);
    if (!search.consistent(src, dst) || !search.consistent(0, 0)) return std::nullopt;
    if (!search.dfs()) return std::nullopt;
    verify_automorphism(g, search.sigma, "stabilizer search");
    return search.sigma;
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Monomial maps fixing the zero word: coordinate transpositions and
// per-coordinate transpositions of nonzero symbols. These generate the
// stabilizer's "easy part" and keep the backtracking search for the few
// genuinely non-monomial generators (parity maps, complement swaps).
std::vector<std::vector<int>> monomial_seeds(const Graph& g) {
    const Params& P = g.params;
    std::vector<std::vector<int>> seeds;
    for (int j = 0; j + 1 < P.n; ++j) {
        seeds.push_back(word_map_to_permutation(g, [&](const Word& x) {
            Word y = x;
            std::swap(y[j], y[j + 1]);
            return y;
        }));
    }
    for (int j = 0; j < P.n; ++j) {
        for (int a = 1; a + 1 < P.q; ++a) {
            seeds.push_back(word_map_to_permutation(g, [&](const Word& x) {
                Word y = x;
                if (y[j] == a)
                    y[j] = a + 1;
                else if (y[j] == a + 1)
                    y[j] = a;
                return y;
            }));
        }
    }
    for (const std::vector<int>& s : seeds) verify_automorphism(g, s, "monomial seed");
    return seeds;
}

}  // namespace

StabilizerGroup stabilizer_generators(const Graph& g, long long node_budget) {
    const long long N = g.order;
    if (N > 256) throw BudgetExceededError("stabilizer_generators: graph larger than 256 vertices");

    StabilizerGroup out;
    out.dist = bfs_spheres(g, 0);
    const std::vector<int> base_colors = refine_colors(g, out.dist, {0});

    std::vector<std::vector<int>> gens = monomial_seeds(g);
    UnionFind uf(static_cast<int>(N));
    for (const std::vector<int>& s : gens)
        for (int x = 0; x < N; ++x) uf.unite(x, s[x]);

    int max_dist = 0;
    for (int v = 0; v < N; ++v) max_dist = std::max(max_dist, out.dist[v]);

    std::unordered_map<int, std::vector<int>> color_cache;  // vertex -> refinement with it individualized
    auto colors_with = [&](int v) -> const std::vector<int>& {
        auto it = color_cache.find(v);
        if (it == color_cache.end())
            it = color_cache.emplace(v, refine_colors(g, out.dist, {0, v})).first;
        return it->second;
    };

    for (int dd = 1; dd <= max_dist; ++dd) {
        std::vector<int> sphere;
        for (int v = 0; v < N; ++v)
            if (out.dist[v] == dd) sphere.push_back(v);

        std::vector<int> reps;
        for (int v : sphere) {
            bool merged = false;
            for (int r : reps)
                if (uf.find(r) == uf.find(v)) {
                    merged = true;
                    break;
                }
            if (merged) continue;
            for (int r : reps) {
                if (base_colors[r] != base_colors[v]) continue;
                auto perm = find_stabilizer_map(g, colors_with(r), colors_with(v), r, v, node_budget);
                if (perm) {
                    gens.push_back(*perm);
                    for (int x = 0; x < N; ++x) uf.unite(x, (*perm)[x]);
                    merged = true;
                    break;
                }
            }
            if (!merged) reps.push_back(v);
        }
    }

    // orbit partitions per finite sphere
    out.sphere_orbits.resize(max_dist);
    for (int dd = 1; dd <= max_dist; ++dd) {
        std::map<int, std::vector<int>> by_root;
        for (int v = 0; v < N; ++v)
            if (out.dist[v] == dd) by_root[uf.find(v)].push_back(v);
        for (auto& kv : by_root) out.sphere_orbits[dd - 1].push_back(std::move(kv.second));
        std::sort(out.sphere_orbits[dd - 1].begin(), out.sphere_orbits[dd - 1].end());
    }

    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    out.generators = std::move(gens);
    return out;
}

TransitivityCertificate certify_transitivity(const Graph& g, const StabilizerGroup& stab) {
    TransitivityCertificate cert;
    cert.orbit_counts_per_sphere.reserve(stab.sphere_orbits.size());
    for (const auto& orbits : stab.sphere_orbits)
        cert.orbit_counts_per_sphere.push_back(static_cast<int>(orbits.size()));
    cert.edge_transitive = !stab.sphere_orbits.empty() && stab.sphere_orbits[0].size() == 1;
    cert.distance_transitive = true;
    for (const auto& orbits : stab.sphere_orbits)
        if (orbits.size() != 1) cert.distance_transitive = false;

    // Common-neighbor counts of the d = n complement, checked against the
    // closed forms (q-2)(q-1)^(n-1) and (q-1)(q-2)^(n-1).
    const Params& P = g.params;
    if (g.variant == Variant::complement && P.d == P.n && P.q > 2 && P.n > 2) {
        Word u(P.n, 0), v(P.n, 1);
        u[0] = 1;
        v[0] = 0;
        const int ui = static_cast<int>(word_to_index(P, u));
        const int vi = static_cast<int>(word_to_index(P, v));
        const Int cu = and_count(g.adj[0], g.adj[ui]);
        const Int cv = and_count(g.adj[0], g.adj[vi]);
        const Int expect_u = Int(P.q - 2) * ipow(Int(P.q - 1), static_cast<unsigned>(P.n - 1));
        const Int expect_v = Int(P.q - 1) * ipow(Int(P.q - 2), static_cast<unsigned>(P.n - 1));
        if (cu != expect_u || cv != expect_v)
            throw AssertionFailureError("certify_transitivity: common-neighbor closed forms violated");
    }
    return cert;
}

TransitivityCertificate certify_transitivity(const Graph& g) {
    return certify_transitivity(g, stabilizer_generators(g));
}

IdempotentWitness idempotent_entry_witness(const Params& params) {
    const int q = params.q, n = params.n, d = params.d;
    if (!(1 < d && d < n)) throw DomainError("idempotent_entry_witness: requires 1 < d < n");
    const Int qn = ipow(Int(q), static_cast<unsigned>(n));
    auto e1_entry = [&](int wt) { return Rat(kraw_eval(1, wt, n, q), qn); };

    IdempotentWitness w;
    w.e1_weight_n = e1_entry(n);
    w.e1_diff = e1_entry(n - 1) - e1_entry(n);
    bool ok = w.e1_weight_n == Rat(Int(-n), qn);
    ok = ok && w.e1_diff == Rat(Int(1), ipow(Int(q), static_cast<unsigned>(n - 1)));
    if (q == 2) {
        auto en_entry = [&](int wt) { return Rat(Int(wt % 2 == 0 ? 1 : -1), qn); };
        const Rat a = e1_entry(n - 2) + en_entry(n - 2);
        const Rat b = e1_entry(n) + en_entry(n);
        w.e1n_diff = a - b;
        ok = ok && *w.e1n_diff == Rat(Int(1), ipow(Int(2), static_cast<unsigned>(n - 2)));
    }
    w.matches_closed_forms = ok;
    return w;
}

}  // namespace hamsym
