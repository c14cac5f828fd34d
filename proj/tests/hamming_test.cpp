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

#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <set>
#include <sstream>

#include "hamsym/errors.hpp"
#include "hamsym/hamming.hpp"
#include "hamsym/kraw.hpp"

using namespace hamsym;

TEST_SUITE("hamming") {
    TEST_CASE("Params validates the triple and factors q") {
        const Params p(9, 3, 2);
        CHECK(p.p == 3);
        CHECK(p.m == 2);
        CHECK(p.order() == 729);
        CHECK(Params(8, 2, 2).p == 2);
        CHECK(Params(8, 2, 2).m == 3);
        CHECK_THROWS_AS(Params(6, 3, 2), NotPrimeError);
        CHECK_THROWS_AS(Params(12, 2, 2), NotPrimeError);
        CHECK_THROWS_AS(Params(2, 1, 2), DomainError);
        CHECK_THROWS_AS(Params(2, 4, 1), DomainError);
        CHECK_THROWS_AS(Params(2, 4, 5), DomainError);
    }

    TEST_CASE("codec endpoints and round trip") {
        const Params p(3, 4, 2);
        CHECK(index_to_word(p, 0) == Word{0, 0, 0, 0});
        CHECK(index_to_word(p, 80) == Word{2, 2, 2, 2});
        CHECK(word_to_index(p, {0, 0, 1, 2}) == 5);
        for (long long idx = 0; idx < p.order(); ++idx) CHECK(word_to_index(p, index_to_word(p, idx)) == idx);
        CHECK_THROWS_AS(index_to_word(p, 81), OutOfRangeError);
        CHECK_THROWS_AS(index_to_word(p, -1), OutOfRangeError);
        CHECK_THROWS_AS(word_to_index(p, {0, 0, 3, 0}), OutOfRangeError);
        CHECK_THROWS_AS(word_to_index(p, {0, 0}), LengthMismatchError);

        // full round trip at the 4096 scale
        const Params big(2, 12, 2);
        for (long long idx = 0; idx < big.order(); ++idx)
            CHECK(word_to_index(big, index_to_word(big, idx)) == idx);
    }

    TEST_CASE("hdist basics and metric axioms") {
        CHECK(hdist({1, 2, 0}, {1, 2, 0}) == 0);
        CHECK(hdist({0, 0, 0, 0}, {1, 1, 1, 1}) == 4);
        CHECK_THROWS_AS(hdist({0, 1}, {0, 1, 0}), LengthMismatchError);

        const Params p(3, 4, 2);
        std::uint64_t state = 99;
        auto rnd = [&]() {
            state = state * 6364136223846793005ULL + 1442695040888963407ULL;
            return static_cast<long long>(state >> 33) % p.order();
        };
        for (int t = 0; t < 2000; ++t) {
            const Word a = index_to_word(p, rnd()), b = index_to_word(p, rnd()), c = index_to_word(p, rnd());
            CHECK(hdist(a, b) == hdist(b, a));
            CHECK(hdist(a, b) >= 0);
            CHECK((hdist(a, b) == 0) == (a == b));
            CHECK(hdist(a, c) <= hdist(a, b) + hdist(b, c));
        }
    }

    TEST_CASE("Gilbert(2,2,2) is the 4-cycle") {
        const Graph g = build_graph(Params(2, 2, 2), Variant::gilbert);
        CHECK(g.order == 4);
        CHECK(g.degree == 2);
        // vertices 0=(00) 1=(01) 2=(10) 3=(11); edges at Hamming distance 1
        CHECK(g.adjacent(0, 1));
        CHECK(g.adjacent(0, 2));
        CHECK(g.adjacent(1, 3));
        CHECK(g.adjacent(2, 3));
        CHECK(!g.adjacent(0, 3));
        CHECK(!g.adjacent(1, 2));
        CHECK(g.edge_count() == 4);
    }

    TEST_CASE("complement of Gilbert(2,n,n) is a perfect matching") {
        for (int n : {3, 4, 5}) {
            const Graph g = build_graph(Params(2, n, n), Variant::complement);
            CHECK(g.degree == 1);
            for (int u = 0; u < g.order; ++u) {
                const int v = g.adj[u].next_set(0);
                CHECK(g.adj[u].count() == 1);
                CHECK(hdist(index_to_word(g.params, u), index_to_word(g.params, v)) == n);
            }
        }
    }

    TEST_CASE("Gilbert(2,5,3) has 32 vertices of degree 15") {
        const Graph g = build_graph(Params(2, 5, 3), Variant::gilbert);
        CHECK(g.order == 32);
        CHECK(g.degree == 15);
        CHECK(gilbert_degree(g.params) == binom(5, 1) + binom(5, 2));
    }

    TEST_CASE("degrees split the nonzero weight enumerator") {
        for (auto [q, n, d] : {std::tuple{2, 5, 3}, {3, 3, 2}, {4, 3, 3}, {5, 2, 2}}) {
            const Params p(q, n, d);
            CHECK(gilbert_degree(p) + complement_degree(p) == ipow(Int(q), n) - 1);
        }
    }

    TEST_CASE("gilbert and complement edges partition all pairs") {
        for (auto [q, n, d] : {std::tuple{2, 4, 3}, {3, 3, 2}, {2, 6, 4}, {5, 2, 2}}) {
            const Params p(q, n, d);
            const Graph g = build_graph(p, Variant::gilbert);
            const Graph c = build_graph(p, Variant::complement);
            for (int u = 0; u < g.order; ++u)
                for (int v = 0; v < g.order; ++v) {
                    if (u == v) {
                        CHECK(!g.adjacent(u, v));
                        CHECK(!c.adjacent(u, v));
                    } else {
                        CHECK(g.adjacent(u, v) != c.adjacent(u, v));
                    }
                    CHECK(g.adjacent(u, v) == g.adjacent(v, u));
                }
        }
    }

    TEST_CASE("vertex cap rejects oversized builds") {
        CHECK_THROWS_AS(build_graph(Params(2, 13, 2), Variant::gilbert), TooLargeError);
        CHECK_THROWS_AS(build_graph(Params(2, 6, 2), Variant::gilbert, 32), TooLargeError);
    }

    TEST_CASE("bfs spheres: source, matching, and the (2,n-1) layer formula") {
        const Graph g = build_graph(Params(2, 4, 3), Variant::gilbert);
        const std::vector<int> dist = bfs_spheres(g, 5);
        CHECK(dist[5] == 0);

        // complement of Gilbert(2,4,4): one neighbor, everything else unreachable
        const Graph m = build_graph(Params(2, 4, 4), Variant::complement);
        const std::vector<int> md = bfs_spheres(m, 0);
        int at_one = 0, unreachable = 0;
        for (int v = 1; v < m.order; ++v) {
            if (md[v] == 1) ++at_one;
            if (md[v] == kInfiniteDistance) ++unreachable;
        }
        CHECK(at_one == 1);
        CHECK(unreachable == m.order - 2);

        // complement of Gilbert(2,6,5): sphere k is weights {n-k+1, n-k} for
        // odd k and {k-1, k} for even k
        const Graph c = build_graph(Params(2, 6, 5), Variant::complement);
        const std::vector<int> cd = bfs_spheres(c, 0);
        const int n = 6;
        int max_dist = 0;
        for (int v = 0; v < c.order; ++v) {
            const int wt = hamming_weight(index_to_word(c.params, v));
            max_dist = std::max(max_dist, cd[v]);
            if (v == 0) continue;
            const int k = cd[v];
            REQUIRE(k != kInfiniteDistance);
            std::set<int> expected = k % 2 == 1 ? std::set<int>{n - k + 1, n - k} : std::set<int>{k - 1, k};
            CHECK(expected.count(wt) == 1);
        }
        CHECK(max_dist == (n + 1) / 2);
    }

    TEST_CASE("DIMACS export of the 4-cycle") {
        const Graph g = build_graph(Params(2, 2, 2), Variant::gilbert);
        std::ostringstream os;
        export_dimacs(g, os);
        CHECK(os.str() == "p edge 4 4\ne 1 2\ne 1 3\ne 2 4\ne 3 4\n");
    }
}
