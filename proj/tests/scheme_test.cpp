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

#include "hamsym/errors.hpp"
#include "hamsym/kraw.hpp"
#include "hamsym/scheme.hpp"

using namespace hamsym;

TEST_SUITE("scheme") {
    TEST_CASE("two-point scheme: A_0 = I, A_1 = J - I, E_0 = J/2, E_1 = I - J/2") {
        const SchemeInstance s = build_scheme(1, 2);
        CHECK(s.N == 2);
        CHECK(s.distance(0, 0) == 0);
        CHECK(s.distance(0, 1) == 1);
        // E_0 numerators over denominator 2: all ones; E_1: diag 1, off -1
        CHECK(s.idempotent_numer(0, 0, 0) == 1);
        CHECK(s.idempotent_numer(0, 0, 1) == 1);
        CHECK(s.idempotent_numer(1, 0, 0) == 1);
        CHECK(s.idempotent_numer(1, 0, 1) == -1);
        CHECK(verify_partition(s));
        CHECK(verify_idempotents(s));
        CHECK(verify_reconstruction(s));
        CHECK(verify_idempotent_traces(s));
    }

    TEST_CASE("PQ = q^n I for the 4-point binary scheme, explicit product") {
        const int n = 2, q = 2;
        // P = Q with entries K_a(b; 2, 2): rows (1,1,1... )
        Int P[3][3];
        for (int a = 0; a <= n; ++a)
            for (int b = 0; b <= n; ++b) P[a][b] = kraw_eval(a, b, n, q);
        for (int a = 0; a <= n; ++a)
            for (int b = 0; b <= n; ++b) {
                Int acc = 0;
                for (int c = 0; c <= n; ++c) acc += P[a][c] * P[c][b];
                CHECK(acc == (a == b ? Int(4) : Int(0)));
            }
        CHECK(pq_identity(2, 2));
    }

    TEST_CASE("scheme axioms on a small grid, q need not be a prime power") {
        for (auto [n, q] : {std::pair{1, 2}, {2, 2}, {3, 2}, {2, 3}, {1, 5}, {2, 6}}) {
            const SchemeInstance s = build_scheme(n, q);
            CHECK(verify_partition(s));
            CHECK(verify_idempotents(s));
            CHECK(verify_reconstruction(s));
            CHECK(verify_idempotent_traces(s));
            CHECK_NOTHROW(intersection_table(s));
        }
    }

    TEST_CASE("intersection numbers of the 4-cycle scheme") {
        const SchemeInstance s = build_scheme(2, 2);
        CHECK(intersection_numbers(s, 1, 1, 1) == 0);
        CHECK(intersection_numbers(s, 1, 1, 2) == 2);
        CHECK(intersection_numbers(s, 1, 1, 0) == 2);  // valency of R_1
        CHECK(intersection_numbers(s, 1, 2, 0) == 0);  // disjoint relations
        CHECK(intersection_numbers(s, 2, 2, 0) == 1);  // valency of R_2
    }

    TEST_CASE("valencies p^0_ii equal the shell sizes") {
        for (auto [n, q] : {std::pair{3, 2}, {2, 3}}) {
            const SchemeInstance s = build_scheme(n, q);
            for (int i = 0; i <= n; ++i)
                CHECK(Int(intersection_numbers(s, i, i, 0)) ==
                      binom(n, i) * ipow(Int(q - 1), static_cast<unsigned>(i)));
        }
    }

    TEST_CASE("A_i A_j expansion: product entries equal p^{dist}_{ij} everywhere") {
        const SchemeInstance s = build_scheme(2, 3);
        const auto p = intersection_table(s);
        for (int i = 0; i <= s.n; ++i)
            for (int j = 0; j <= s.n; ++j)
                for (int u = 0; u < s.N; ++u)
                    for (int v = 0; v < s.N; ++v)
                        CHECK(and_count(s.rel[i][u], s.rel[j][v]) == p[i][j][s.distance(u, v)]);
    }

    TEST_CASE("symbolic PQ identity for n <= 8") {
        for (int q : {2, 3, 4, 5, 7, 9})
            for (int n = 1; n <= 8; ++n) CHECK(pq_identity(n, q));
    }

    TEST_CASE("build_scheme enforces the cap and validates input") {
        CHECK_THROWS_AS(build_scheme(9, 2), TooLargeError);
        CHECK_THROWS_AS(build_scheme(0, 2), DomainError);
        CHECK_THROWS_AS(build_scheme(2, 1), DomainError);
        CHECK_NOTHROW(build_scheme(8, 2));
    }
}
