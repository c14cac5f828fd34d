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
#include <vector>

#include "hamsym/errors.hpp"
#include "hamsym/kraw.hpp"
#include "hamsym/spectra.hpp"

using namespace hamsym;

TEST_SUITE("spectra") {
    TEST_CASE("Gilbert(2,5,3): frozen spectrum") {
        const auto sp = gilbert_spectrum(Params(2, 5, 3));
        const std::vector<long long> values{15, 5, -1, -3, -1, 5};
        const std::vector<long long> mults{1, 5, 10, 10, 5, 1};
        REQUIRE(sp.size() == 6);
        for (int j = 0; j <= 5; ++j) {
            CHECK(sp[j].eigenvalue == values[j]);
            CHECK(sp[j].multiplicity == mults[j]);
        }
    }

    TEST_CASE("complement of Gilbert(2,5,3): frozen spectrum, gamma_1 = gamma_5") {
        const auto sp = complement_spectrum(Params(2, 5, 3));
        const std::vector<long long> values{16, -6, 0, 2, 0, -6};
        REQUIRE(sp.size() == 6);
        for (int j = 0; j <= 5; ++j) CHECK(sp[j].eigenvalue == values[j]);
        CHECK(sp[1].eigenvalue == sp[5].eigenvalue);
    }

    TEST_CASE("d = 2 reduces to the Hamming graph spectrum (q-1)n - qj") {
        for (auto [q, n] : {std::pair{3, 3}, {2, 6}, {4, 2}}) {
            const auto sp = gilbert_spectrum(Params(q, n, 2));
            for (int j = 0; j <= n; ++j) CHECK(sp[j].eigenvalue == Int(q - 1) * n - Int(q) * j);
        }
    }

    TEST_CASE("entry zero is the closed-form regular degree") {
        for (auto [q, n, d] : {std::tuple{2, 5, 3}, {3, 4, 3}, {5, 3, 2}, {2, 8, 8}}) {
            const Params p(q, n, d);
            CHECK(gilbert_spectrum(p)[0].eigenvalue == gilbert_degree(p));
            CHECK(complement_spectrum(p)[0].eigenvalue == complement_degree(p));
        }
    }

    TEST_CASE("gamma_1 and gamma_n closed forms") {
        for (auto [q, n, d] : {std::tuple{2, 5, 3}, {3, 4, 3}, {2, 6, 4}, {4, 3, 2}, {2, 7, 7}}) {
            const auto sp = complement_spectrum(Params(q, n, d));
            CHECK(sp[1].eigenvalue ==
                  -ipow(Int(q - 1), static_cast<unsigned>(d - 1)) * binom(n - 1, d - 1));
            CHECK(sp[n].eigenvalue == (d % 2 == 0 ? 1 : -1) * binom(n - 1, d - 1));
        }
    }

    TEST_CASE("zero trace and total multiplicity q^n on a full small grid") {
        for (int q : {2, 3, 4, 5})
            for (int n = 2; n <= 5; ++n) {
                if (ipow(Int(q), n) > 1024) continue;
                for (int d = 2; d <= n; ++d) {
                    const Params p(q, n, d);
                    for (Variant variant : {Variant::gilbert, Variant::complement}) {
                        Int trace = 0, total = 0;
                        for (const auto& e : spectrum(p, variant)) {
                            trace += e.eigenvalue * e.multiplicity;
                            total += e.multiplicity;
                        }
                        CHECK(trace == 0);
                        CHECK(total == ipow(Int(q), n));
                    }
                }
            }
    }

    TEST_CASE("complement coupling: gilbert_j = -1 - gamma_j and degree sum q^n - 1") {
        for (auto [q, n, d] : {std::tuple{2, 6, 4}, {3, 4, 2}, {5, 3, 3}, {2, 5, 5}}) {
            const Params p(q, n, d);
            const auto gs = gilbert_spectrum(p);
            const auto cs = complement_spectrum(p);
            for (int j = 1; j <= n; ++j) CHECK(gs[j].eigenvalue == -1 - cs[j].eigenvalue);
            CHECK(gs[0].eigenvalue + cs[0].eigenvalue == ipow(Int(q), n) - 1);
        }
    }

    TEST_CASE("spectral order checks: part 2 strict, part 3 biconditional") {
        const auto r1 = spectral_order_checks(Params(2, 5, 3));
        CHECK(r1.gamma1_equals_gamman);
        CHECK(r1.q2_and_d_odd);
        const auto r2 = spectral_order_checks(Params(2, 6, 4));
        CHECK(!r2.gamma1_equals_gamman);
        const auto r3 = spectral_order_checks(Params(3, 4, 3));
        CHECK(!r3.gamma1_equals_gamman);
        CHECK(r3.part2_strict);
    }

    TEST_CASE("jacobi: diagonal matrices are returned sorted") {
        const std::vector<double> a{3, 0, 0, 0, -1, 0, 0, 0, 7};
        const auto eig = jacobi_eigs(a, 3);
        CHECK(eig == std::vector<double>{7, 3, -1});
    }

    TEST_CASE("jacobi: 4-cycle eigenvalues are (2, 0, 0, -2)") {
        std::vector<double> a(16, 0.0);
        auto set = [&](int u, int v) { a[u * 4 + v] = a[v * 4 + u] = 1.0; };
        set(0, 1);
        set(1, 2);
        set(2, 3);
        set(3, 0);
        const auto eig = jacobi_eigs(a, 4);
        CHECK(std::abs(eig[0] - 2) < 1e-10);
        CHECK(std::abs(eig[1]) < 1e-10);
        CHECK(std::abs(eig[2]) < 1e-10);
        CHECK(std::abs(eig[3] + 2) < 1e-10);
    }

    TEST_CASE("jacobi input validation") {
        CHECK_THROWS_AS(jacobi_eigs({1, 2, 3}, 2), DomainError);           // wrong size
        CHECK_THROWS_AS(jacobi_eigs({1, 2, 3, 4}, 2), DomainError);        // asymmetric
        CHECK_THROWS_AS(jacobi_eigs({1, 2, 2, 4}, 2, -1.0), DomainError);  // bad tol
    }

    TEST_CASE("closed forms match the Jacobi oracle, both variants") {
        for (auto [q, n, d] : {std::tuple{2, 5, 3}, {2, 4, 4}, {3, 3, 3}, {3, 4, 3}, {4, 3, 2}, {2, 6, 5}}) {
            const Params p(q, n, d);
            for (Variant variant : {Variant::gilbert, Variant::complement})
                CHECK(spectrum_matches_oracle(build_graph(p, variant)));
        }
    }

    TEST_CASE("largest eigenvalue is simple when the complement is connected") {
        for (auto [q, n, d] : {std::tuple{2, 5, 3}, {3, 3, 3}, {2, 6, 4}}) {
            const Params p(q, n, d);
            const Graph c = build_graph(p, Variant::complement);
            const auto dist = bfs_spheres(c, 0);
            bool connected = true;
            for (int v = 0; v < c.order; ++v) connected = connected && dist[v] != kInfiniteDistance;
            if (!connected) continue;
            const auto sp = complement_spectrum(p);
            for (int j = 1; j <= n; ++j) CHECK(sp[j].eigenvalue < sp[0].eigenvalue);
        }
    }
}
