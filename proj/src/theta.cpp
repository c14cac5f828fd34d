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

#include "hamsym/theta.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>
#include <utility>

#include "hamsym/errors.hpp"
#include "hamsym/spectra.hpp"
#include "hamsym/symmetry.hpp"

namespace hamsym {

namespace {

struct SpectrumSummary {
    Int delta;    // regular degree (largest eigenvalue)
    Int lambda2;  // second largest
    Int lambdaN;  // smallest
};

SpectrumSummary summarize(const Params& params, Variant variant) {
    const std::vector<SpectrumEntry> sp = spectrum(params, variant);
    SpectrumSummary s{sp[0].eigenvalue, sp[1].eigenvalue, sp[1].eigenvalue};
    for (std::size_t j = 1; j < sp.size(); ++j) {
        s.lambda2 = std::max(s.lambda2, sp[j].eigenvalue);
        s.lambdaN = std::min(s.lambdaN, sp[j].eigenvalue);
    }
    return s;
}

}  // namespace

std::optional<ThetaPair> theta_closed_form(const Params& params) {
    const Classification cls = classify(params);
    if (!cls.graph_edge_transitive && !cls.complement_edge_transitive) return std::nullopt;

    const Int qn = ipow(Int(params.q), static_cast<unsigned>(params.n));
    const SpectrumSummary s = summarize(params, Variant::gilbert);

    std::optional<ThetaPair> case_a, case_b;
    if (cls.graph_edge_transitive) {
        ThetaPair t;
        t.theta_graph = make_rat(-qn * s.lambdaN, s.delta - s.lambdaN);
        t.theta_complement = Rat(1) - make_rat(s.delta, s.lambdaN);
        case_a = t;
    }
    if (cls.complement_edge_transitive) {
        ThetaPair t;
        t.theta_graph = make_rat(qn - s.delta + s.lambda2, 1 + s.lambda2);
        t.theta_complement = make_rat(qn * (1 + s.lambda2), qn - s.delta + s.lambda2);
        case_b = t;
    }
    if (case_a && case_b &&
        (case_a->theta_graph != case_b->theta_graph ||
         case_a->theta_complement != case_b->theta_complement))
        throw AssertionFailureError("theta_closed_form: the two closed-form clauses disagree");

    const ThetaPair out = case_a ? *case_a : *case_b;
    if (out.theta_graph * out.theta_complement != Rat(qn))
        throw AssertionFailureError("theta_closed_form: product identity theta*theta != q^n");
    return out;
}

ThetaBounds theta_bounds(const Params& params, Variant variant) {
    const Int N = ipow(Int(params.q), static_cast<unsigned>(params.n));
    const SpectrumSummary s = summarize(params, variant);
    if (s.delta == N - 1 || s.delta == 0)
        throw DegenerateGraphError("theta_bounds: graph is complete or empty");

    ThetaBounds b;
    b.lower_graph = make_rat(N - s.delta + s.lambda2, 1 + s.lambda2);
    b.upper_graph = make_rat(-N * s.lambdaN, s.delta - s.lambdaN);
    b.lower_complement = Rat(1) - make_rat(s.delta, s.lambdaN);
    b.upper_complement = make_rat(N * (1 + s.lambda2), N - s.delta + s.lambda2);

    const Classification cls = classify(params);
    const bool g_et = variant == Variant::gilbert ? cls.graph_edge_transitive : cls.complement_edge_transitive;
    const bool comp_et =
        variant == Variant::gilbert ? cls.complement_edge_transitive : cls.graph_edge_transitive;
    // both variants are vertex-transitive Cayley graphs
    b.upper_graph_tight = g_et;
    b.lower_graph_tight = comp_et;
    b.upper_complement_tight = comp_et;
    b.lower_complement_tight = g_et;
    return b;
}

namespace {

// Deterministic start vector for the power iteration (fixed LCG seed).
void seed_vector(std::vector<double>& v) {
    std::uint64_t state = 0x2545F4914F6CDD1DULL;
    double norm = 0;
    for (double& x : v) {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        x = 0.5 + static_cast<double>(state >> 11) / 9007199254740992.0;  // in (0.5, 1.5)
        norm += x * x;
    }
    norm = std::sqrt(norm);
    for (double& x : v) x /= norm;
}

struct EigEstimate {
    double lambda;    // Rayleigh quotient of M
    double residual;  // ||Mv - lambda v||
};

// Top eigenpair of symmetric M via shifted power iteration; v is the warm
// start and receives the new eigenvector. Restarts once from the fixed seed
// if the warm start stalls.
EigEstimate top_eigenpair(const std::vector<double>& m, int N, std::vector<double>& v, int max_iters,
                          double rel_tol) {
    double shift = 1.0;
    for (int u = 0; u < N; ++u) {
        double row = 0;
        for (int w = 0; w < N; ++w) row += std::abs(m[static_cast<std::size_t>(u) * N + w]);
        shift = std::max(shift, row + 1.0);
    }
    std::vector<double> w(N);
    auto iterate = [&](int iters) -> EigEstimate {
        EigEstimate est{0, 1e300};
        for (int it = 0; it < iters; ++it) {
            for (int u = 0; u < N; ++u) {
                double acc = shift * v[u];
                const double* row = &m[static_cast<std::size_t>(u) * N];
                for (int z = 0; z < N; ++z) acc += row[z] * v[z];
                w[u] = acc;
            }
            double rayleigh = 0, wnorm2 = 0;
            for (int u = 0; u < N; ++u) {
                rayleigh += v[u] * w[u];
                wnorm2 += w[u] * w[u];
            }
            const double res2 = std::max(0.0, wnorm2 - rayleigh * rayleigh);
            est.lambda = rayleigh - shift;
            est.residual = std::sqrt(res2);
            const double wnorm = std::sqrt(wnorm2);
            for (int u = 0; u < N; ++u) v[u] = w[u] / wnorm;
            if (est.residual <= rel_tol * (1.0 + std::abs(rayleigh))) break;
        }
        return est;
    };
    EigEstimate est = iterate(max_iters);
    if (est.residual > 1e-3 * (1.0 + std::abs(est.lambda + shift))) {
        seed_vector(v);  // safeguard against a start vector orthogonal to the top eigenspace
        est = iterate(max_iters);
    }
    return est;
}

}  // namespace

SdpResult theta_sdp(const Graph& g, double tol) {
    std::optional<double> target;
    const ThetaBounds b = theta_bounds(g.params, g.variant);
    if (b.upper_graph_tight)
        target = to_double(b.upper_graph);
    else if (b.lower_graph_tight)
        target = to_double(b.lower_graph);
    return theta_sdp_adjacency(g.adj, tol, target);
}

SdpResult theta_sdp_adjacency(const std::vector<DynBitset>& adj, double tol,
                              std::optional<double> certified_target) {
    const int N = static_cast<int>(adj.size());
    if (N > 64) throw TooLargeError("theta_sdp: N exceeds 64");
    if (tol < 1e-6) throw DomainError("theta_sdp: tol must be >= 1e-6");

    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < N; ++u)
        for (int v = adj[u].next_set(u + 1); v >= 0; v = adj[u].next_set(v + 1)) edges.emplace_back(u, v);

    // M = 1 on the diagonal and on non-edges; the edge entries are the
    // variables, started at 0.
    std::vector<double> m(static_cast<std::size_t>(N) * N, 1.0);
    for (const auto& [u, v] : edges) {
        m[static_cast<std::size_t>(u) * N + v] = 0.0;
        m[static_cast<std::size_t>(v) * N + u] = 0.0;
    }

    if (edges.empty()) return {static_cast<double>(N), true, 0};  // lambda_max(J) = N = theta(empty)

    const bool have_target = certified_target.has_value();
    const double target = certified_target.value_or(0.0);
    const double stop_gap = 0.3 * tol * (1.0 + std::abs(target));

    std::vector<double> v(N);
    seed_vector(v);

    constexpr long long kBudget = 50'000;
    SdpResult out;
    out.value = 1e300;
    for (long long t = 1; t <= kBudget; ++t) {
        const EigEstimate est = top_eigenpair(m, N, v, t == 1 ? 400 : 60, 1e-9);
        const double f = est.lambda + est.residual;  // upper-leaning estimate of lambda_max
        if (f < out.value) out.value = f;
        out.iterations = t;
        if (have_target && out.value <= target + stop_gap) {
            out.certified = true;
            return out;
        }

        // subgradient of lambda_max restricted to the edge entries
        double norm2 = 0;
        for (const auto& [eu, ev] : edges) {
            const double gcomp = 2.0 * v[eu] * v[ev];
            norm2 += gcomp * gcomp;
        }
        if (norm2 < 1e-24) break;  // eigenvector vanishes on every edge: stationary

        double step;
        if (have_target && est.lambda > target) {
            step = (est.lambda - target) / norm2;  // Polyak step toward the certified optimum
        } else {
            step = 1.0 / std::sqrt(static_cast<double>(t));
        }
        for (const auto& [eu, ev] : edges) {
            const double gcomp = 2.0 * v[eu] * v[ev];
            m[static_cast<std::size_t>(eu) * N + ev] -= step * gcomp;
            m[static_cast<std::size_t>(ev) * N + eu] -= step * gcomp;
        }
    }
    if (have_target && out.value > target + tol * (1.0 + std::abs(target)))
        throw NoConvergenceError("theta_sdp: certified target not reached within the iteration budget");
    return out;
}

int alpha_bruteforce(const std::vector<DynBitset>& adj) {
    const int N = static_cast<int>(adj.size());
    if (N > 32) throw BudgetExceededError("alpha_bruteforce: N exceeds 32");
    std::vector<std::uint32_t> nbr(N, 0);
    for (int u = 0; u < N; ++u)
        for (int v = 0; v < N; ++v)
            if (v != u && adj[u].test(v)) nbr[u] |= (1u << v);

    int best = 0;
    // branch and bound over the candidate set
    auto rec = [&](auto&& self, std::uint32_t cand, int size) -> void {
        if (cand == 0) {
            best = std::max(best, size);
            return;
        }
        if (size + std::popcount(cand) <= best) return;
        // branch on the candidate with the most candidate neighbors
        int pick = -1, pick_deg = -1;
        for (std::uint32_t rest = cand; rest != 0; rest &= rest - 1) {
            const int u = std::countr_zero(rest);
            const int deg = std::popcount(nbr[u] & cand);
            if (deg > pick_deg) {
                pick = u;
                pick_deg = deg;
            }
        }
        self(self, cand & ~nbr[pick] & ~(1u << pick), size + 1);  // take pick
        self(self, cand & ~(1u << pick), size);                   // skip pick
    };
    const std::uint32_t all = N == 32 ? ~0u : ((1u << N) - 1);
    rec(rec, all, 0);
    return best;
}

int alpha_bruteforce(const Graph& g) { return alpha_bruteforce(g.adj); }

long long maxcut_bruteforce(const std::vector<DynBitset>& adj) {
    const int N = static_cast<int>(adj.size());
    if (N > 24) throw BudgetExceededError("maxcut_bruteforce: N exceeds 24");
    std::vector<std::uint32_t> nbr(N, 0);
    for (int u = 0; u < N; ++u)
        for (int v = 0; v < N; ++v)
            if (v != u && adj[u].test(v)) nbr[u] |= (1u << v);

    long long best = 0;
    const std::uint32_t all = (N == 32 ? ~0u : ((1u << N) - 1));
    // vertex N-1 stays on the fixed side; sweep subsets of the rest
    const std::uint32_t limit = 1u << (N - 1);
    for (std::uint32_t side = 0; side < limit; ++side) {
        long long cut = 0;
        for (std::uint32_t rest = side; rest != 0; rest &= rest - 1) {
            const int u = std::countr_zero(rest);
            cut += std::popcount(nbr[u] & (all & ~side));
        }
        best = std::max(best, cut);
    }
    return best;
}

SurplusReport maxcut_surplus(const Graph& g) {
    const int N = static_cast<int>(g.order);
    if (N > 24) throw BudgetExceededError("maxcut_surplus: N exceeds 24");

    SurplusReport r;
    r.maxcut = maxcut_bruteforce(g.adj);
    const long long edges = g.edge_count();
    r.surplus = Rat(r.maxcut) - Rat(Int(edges), Int(2));

    const std::optional<ThetaPair> closed = theta_closed_form(g.params);
    if (closed) {
        r.theta_complement =
            g.variant == Variant::gilbert ? closed->theta_complement : closed->theta_graph;
    } else {
        const Variant other = g.variant == Variant::gilbert ? Variant::complement : Variant::gilbert;
        const SdpResult sdp = theta_sdp(build_graph(g.params, other), 1e-3);
        r.theta_complement = Rat(sdp.value);
    }
    r.bound = static_cast<double>(edges) / (std::numbers::pi * (to_double(r.theta_complement) - 1.0));
    if (to_double(r.surplus) < r.bound - 1e-9 * (1.0 + std::abs(r.bound)))
        throw AssertionFailureError("maxcut_surplus: surplus fell below the theta lower bound");
    return r;
}

}  // namespace hamsym
