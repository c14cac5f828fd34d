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

#include <cmath>
#include <numbers>
#include <vector>

#include "hamsym/errors.hpp"
#include "hamsym/theta.hpp"

using namespace hamsym;

namespace {

std::vector<DynBitset> complete_adjacency(int N) {
    std::vector<DynBitset> adj(N, DynBitset(N));
    for (int u = 0; u < N; ++u)
        for (int v = 0; v < N; ++v)
            if (u != v) adj[u].set(v);
    return adj;
}

}  // namespace

TEST_SUITE("theta") {
    TEST_CASE("closed form for Gilbert(2,5,3): 16/3 and 6, product 32") {
        const auto t = theta_closed_form(Params(2, 5, 3));
        REQUIRE(t.has_value());
        CHECK(t->theta_graph == Rat(16, 3));
        CHECK(t->theta_complement == Rat(6));
        CHECK(t->theta_graph * t->theta_complement == Rat(32));
    }

    TEST_CASE("closed form for the 4-cycle: theta = 2") {
        const auto t = theta_closed_form(Params(2, 2, 2));
        REQUIRE(t.has_value());
        CHECK(t->theta_graph == Rat(2));
        CHECK(t->theta_complement == Rat(2));
    }

    TEST_CASE("no closed form when neither variant is edge-transitive") {
        CHECK(!theta_closed_form(Params(3, 4, 3)).has_value());
        CHECK(!theta_closed_form(Params(2, 6, 4)).has_value());
    }

    TEST_CASE("both clauses apply at (2,4,3) and agree: 8/3 and 6") {
        const auto t = theta_closed_form(Params(2, 4, 3));
        REQUIRE(t.has_value());
        CHECK(t->theta_graph == Rat(8, 3));
        CHECK(t->theta_complement == Rat(6));
    }

    TEST_CASE("product identity on every closed-form instance up to 4096 vertices") {
        for (int q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16})
            for (int n = 2; n <= 12; ++n) {
                if (ipow(Int(q), n) > 4096) continue;
                for (int d = 2; d <= n; ++d) {
                    const Params p(q, n, d);
                    const auto t = theta_closed_form(p);
                    if (!t) continue;
                    CHECK(t->theta_graph * t->theta_complement == Rat(ipow(Int(q), n)));
                    CHECK(t->theta_graph >= 1);
                    CHECK(t->theta_complement >= 1);
                }
            }
    }

    TEST_CASE("bounds collapse to 2 on the 4-cycle") {
        const ThetaBounds b = theta_bounds(Params(2, 2, 2), Variant::gilbert);
        CHECK(b.lower_graph == Rat(2));
        CHECK(b.upper_graph == Rat(2));
        CHECK(b.lower_complement == Rat(2));
        CHECK(b.upper_complement == Rat(2));
        CHECK(b.upper_graph_tight);
        CHECK(b.lower_graph_tight);
    }

    TEST_CASE("bound ordering holds on a grid, both variants") {
        for (int q : {2, 3, 4})
            for (int n = 2; n <= 6; ++n) {
                if (ipow(Int(q), n) > 1024) continue;
                for (int d = 2; d <= n; ++d)
                    for (Variant variant : {Variant::gilbert, Variant::complement}) {
                        const ThetaBounds b = theta_bounds(Params(q, n, d), variant);
                        CHECK(b.lower_graph <= b.upper_graph);
                        CHECK(b.lower_complement <= b.upper_complement);
                    }
            }
    }

    TEST_CASE("tight bounds reproduce the closed forms") {
        const Params p(2, 5, 3);
        const ThetaBounds b = theta_bounds(p, Variant::gilbert);
        const auto t = theta_closed_form(p);
        REQUIRE(t.has_value());
        CHECK(b.upper_graph_tight);
        CHECK(b.upper_graph == t->theta_graph);
        CHECK(!b.lower_graph_tight);  // the complement is not edge-transitive
        CHECK(b.lower_complement_tight);
        CHECK(b.lower_complement == t->theta_complement);
    }

    TEST_CASE("SDP oracle on the 4-cycle: 2 within 1e-3") {
        const Graph g = build_graph(Params(2, 2, 2), Variant::gilbert);
        const SdpResult r = theta_sdp(g);
        CHECK(r.certified);
        CHECK(std::abs(r.value - 2.0) < 2e-3 * 3);
    }

    TEST_CASE("SDP oracle on Gilbert(2,5,3) against 16/3") {
        const Graph g = build_graph(Params(2, 5, 3), Variant::gilbert);
        const SdpResult r = theta_sdp(g);
        CHECK(r.certified);
        CHECK(std::abs(r.value - 16.0 / 3.0) <= 5e-3 * (1 + 16.0 / 3.0));
    }

    TEST_CASE("SDP handles the complete and empty adjacency cases") {
        const SdpResult complete = theta_sdp_adjacency(complete_adjacency(6), 1e-3, std::nullopt);
        CHECK(std::abs(complete.value - 1.0) < 1e-6);  // M = I is immediately optimal
        const SdpResult empty = theta_sdp_adjacency(std::vector<DynBitset>(5, DynBitset(5)), 1e-3, std::nullopt);
        CHECK(empty.value == 5.0);
        CHECK(empty.certified);
    }

    TEST_CASE("SDP input validation") {
        CHECK_THROWS_AS(theta_sdp_adjacency(complete_adjacency(65), 1e-3, std::nullopt), TooLargeError);
        CHECK_THROWS_AS(theta_sdp_adjacency(complete_adjacency(4), 1e-7, std::nullopt), DomainError);
    }

    TEST_CASE("alpha by branch and bound") {
        CHECK(alpha_bruteforce(complete_adjacency(7)) == 1);
        CHECK(alpha_bruteforce(std::vector<DynBitset>(6, DynBitset(6))) == 6);
        const Graph c4 = build_graph(Params(2, 2, 2), Variant::gilbert);
        CHECK(alpha_bruteforce(c4) == 2);
        // alpha(Gilbert(2,5,3)) is the largest binary code of length 5 with
        // minimum distance 3
        const Graph g = build_graph(Params(2, 5, 3), Variant::gilbert);
        CHECK(alpha_bruteforce(g) == 4);
        CHECK_THROWS_AS(alpha_bruteforce(complete_adjacency(33)), BudgetExceededError);
    }

    TEST_CASE("sandwich alpha <= theta on closed-form instances up to 32 vertices") {
        for (auto [q, n, d] : {std::tuple{2, 4, 3}, {2, 5, 3}, {2, 5, 5}, {3, 3, 3}, {5, 2, 2}}) {
            const Params p(q, n, d);
            const auto t = theta_closed_form(p);
            REQUIRE(t.has_value());
            CHECK(Rat(alpha_bruteforce(build_graph(p, Variant::gilbert))) <= t->theta_graph);
            CHECK(Rat(alpha_bruteforce(build_graph(p, Variant::complement))) <= t->theta_complement);
        }
    }

    TEST_CASE("max-cut of the 4-cycle: mc = 4, surplus 2 >= 4/pi") {
        const Graph c4 = build_graph(Params(2, 2, 2), Variant::gilbert);
        const SurplusReport r = maxcut_surplus(c4);
        CHECK(r.maxcut == 4);
        CHECK(r.surplus == Rat(2));
        CHECK(r.theta_complement == Rat(2));
        CHECK(std::abs(r.bound - 4.0 / std::numbers::pi) < 1e-12);
    }

    TEST_CASE("bipartite graphs cut every edge") {
        // the complement of Gilbert(2,3,3) is a perfect matching on 8 vertices
        const Graph m = build_graph(Params(2, 3, 3), Variant::complement);
        const SurplusReport r = maxcut_surplus(m);
        CHECK(r.maxcut == m.edge_count());
        CHECK(r.surplus == Rat(Int(m.edge_count()), Int(2)));
    }

    TEST_CASE("surplus bound holds on all instances up to 16 vertices") {
        for (auto [q, n, d] :
             {std::tuple{2, 2, 2}, {2, 3, 2}, {2, 3, 3}, {2, 4, 2}, {2, 4, 3}, {2, 4, 4}, {3, 2, 2}, {4, 2, 2}}) {
            const Params p(q, n, d);
            for (Variant variant : {Variant::gilbert, Variant::complement})
                CHECK_NOTHROW(maxcut_surplus(build_graph(p, variant)));
        }
    }

    TEST_CASE("maxcut budget") {
        const Graph g = build_graph(Params(2, 5, 3), Variant::gilbert);  // 32 > 24
        CHECK_THROWS_AS(maxcut_surplus(g), BudgetExceededError);
    }
}
