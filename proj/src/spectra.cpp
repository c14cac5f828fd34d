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

#include "hamsym/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hamsym/errors.hpp"
#include "hamsym/kraw.hpp"

namespace hamsym {

std::vector<SpectrumEntry> gilbert_spectrum(const Params& params) {
    std::vector<SpectrumEntry> out;
    out.reserve(params.n + 1);
    out.push_back({0, gilbert_degree(params), Int(1)});
    for (int j = 1; j <= params.n; ++j) {
        const Int lambda = kraw_eval(params.d - 1, j - 1, params.n - 1, params.q) - 1;
        const Int mult = binom(params.n, j) * ipow(Int(params.q - 1), static_cast<unsigned>(j));
        out.push_back({j, lambda, mult});
    }
    return out;
}

std::vector<SpectrumEntry> complement_spectrum(const Params& params) {
    std::vector<SpectrumEntry> out;
    out.reserve(params.n + 1);
    out.push_back({0, complement_degree(params), Int(1)});
    for (int j = 1; j <= params.n; ++j) {
        const Int lambda = -kraw_eval(params.d - 1, j - 1, params.n - 1, params.q);
        const Int mult = binom(params.n, j) * ipow(Int(params.q - 1), static_cast<unsigned>(j));
        out.push_back({j, lambda, mult});
    }
    return out;
}

std::vector<SpectrumEntry> spectrum(const Params& params, Variant variant) {
    return variant == Variant::gilbert ? gilbert_spectrum(params) : complement_spectrum(params);
}

SpectralOrderReport spectral_order_checks(const Params& params) {
    const std::vector<SpectrumEntry> gamma = complement_spectrum(params);
    SpectralOrderReport r;
    r.part2_strict = true;
    for (int m = 2; m <= params.n - 1; ++m) {
        if (!(gamma[1].eigenvalue < gamma[m].eigenvalue)) {
            throw AssertionFailureError("spectral_order_checks: gamma_1 < gamma_" + std::to_string(m) +
                                        " fails for (q,n,d) = (" + std::to_string(params.q) + "," +
                                        std::to_string(params.n) + "," + std::to_string(params.d) + ")");
        }
    }
    r.gamma1_equals_gamman = gamma[1].eigenvalue == gamma[params.n].eigenvalue;
    r.q2_and_d_odd = (params.q == 2 && params.d % 2 == 1);
    if (r.gamma1_equals_gamman != r.q2_and_d_odd)
        throw AssertionFailureError("spectral_order_checks: gamma_1 = gamma_n biconditional fails");
    r.clause = r.q2_and_d_odd ? "gamma1=gamman (q=2, d odd)" : "gamma1!=gamman";
    return r;
}

std::vector<double> jacobi_eigs(std::vector<double> a, int N, double tol) {
    if (N <= 0 || static_cast<long long>(N) * N != static_cast<long long>(a.size()))
        throw DomainError("jacobi_eigs: matrix size mismatch");
    if (N > 4096) throw TooLargeError("jacobi_eigs: N exceeds 4096");
    if (tol <= 0) throw DomainError("jacobi_eigs: tol must be positive");
    for (int u = 0; u < N; ++u)
        for (int v = u + 1; v < N; ++v)
            if (a[static_cast<std::size_t>(u) * N + v] != a[static_cast<std::size_t>(v) * N + u])
                throw DomainError("jacobi_eigs: input not symmetric");

    auto off_mass = [&]() {
        double s = 0;
        for (int u = 0; u < N; ++u)
            for (int v = u + 1; v < N; ++v) {
                const double x = a[static_cast<std::size_t>(u) * N + v];
                s += 2 * x * x;
            }
        return std::sqrt(s);
    };

    constexpr int kMaxSweeps = 100;
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        if (off_mass() < tol) {
            std::vector<double> eig(N);
            for (int u = 0; u < N; ++u) eig[u] = a[static_cast<std::size_t>(u) * N + u];
            std::sort(eig.begin(), eig.end(), std::greater<double>());
            return eig;
        }
        for (int p = 0; p < N - 1; ++p) {
            for (int q = p + 1; q < N; ++q) {
                const double apq = a[static_cast<std::size_t>(p) * N + q];
                if (apq == 0.0) continue;
                const double app = a[static_cast<std::size_t>(p) * N + p];
                const double aqq = a[static_cast<std::size_t>(q) * N + q];
                const double tau = (aqq - app) / (2 * apq);
                const double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1 + tau * tau));
                const double c = 1.0 / std::sqrt(1 + t * t);
                const double s = t * c;
                for (int k = 0; k < N; ++k) {
                    const double akp = a[static_cast<std::size_t>(k) * N + p];
                    const double akq = a[static_cast<std::size_t>(k) * N + q];
                    a[static_cast<std::size_t>(k) * N + p] = c * akp - s * akq;
                    a[static_cast<std::size_t>(k) * N + q] = s * akp + c * akq;
                }
                for (int k = 0; k < N; ++k) {
                    const double apk = a[static_cast<std::size_t>(p) * N + k];
                    const double aqk = a[static_cast<std::size_t>(q) * N + k];
                    a[static_cast<std::size_t>(p) * N + k] = c * apk - s * aqk;
                    a[static_cast<std::size_t>(q) * N + k] = s * apk + c * aqk;
                }
            }
        }
    }
    throw NoConvergenceError("jacobi_eigs: no convergence within 100 sweeps");
}

std::vector<double> expand_spectrum(const std::vector<SpectrumEntry>& entries) {
    std::vector<double> out;
    for (const SpectrumEntry& e : entries) {
        const long long mult = e.multiplicity.convert_to<long long>();
        const double lambda = to_double(e.eigenvalue);
        for (long long r = 0; r < mult; ++r) out.push_back(lambda);
    }
    std::sort(out.begin(), out.end(), std::greater<double>());
    return out;
}

std::vector<double> adjacency_matrix(const Graph& g) {
    const long long N = g.order;
    std::vector<double> a(static_cast<std::size_t>(N) * N, 0.0);
    for (int u = 0; u < N; ++u)
        for (int v = g.adj[u].next_set(0); v >= 0; v = g.adj[u].next_set(v + 1))
            a[static_cast<std::size_t>(u) * N + v] = 1.0;
    return a;
}

bool spectrum_matches_oracle(const Graph& g, double match_tol) {
    const std::vector<double> closed = expand_spectrum(spectrum(g.params, g.variant));
    const std::vector<double> numeric = jacobi_eigs(adjacency_matrix(g), static_cast<int>(g.order));
    if (closed.size() != numeric.size()) return false;
    for (std::size_t k = 0; k < closed.size(); ++k)
        if (std::abs(closed[k] - numeric[k]) > match_tol) return false;
    return true;
}

}  // namespace hamsym
