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

#ifndef HAMSYM_THETA_HPP
#define HAMSYM_THETA_HPP

#include <optional>
#include <vector>

#include "hamsym/hamming.hpp"
#include "hamsym/ints.hpp"

namespace hamsym {

/// Exact Lovasz theta values of the Gilbert graph and its complement.
struct ThetaPair {
    Rat theta_graph;
    Rat theta_complement;
};

/// Closed forms, applicable exactly when the Gilbert graph or its complement
/// is edge-transitive:
///   graph ET:       theta(G) = -q^n lmin / (Delta - lmin),  theta(comp) = 1 - Delta/lmin
///   complement ET:  theta(G) = (q^n - Delta + l2) / (1 + l2),
///                   theta(comp) = q^n (1 + l2) / (q^n - Delta + l2)
/// with lmin, l2 the smallest / second largest Gilbert eigenvalue. When both
/// clauses apply their values are cross-checked (AssertionFailureError on
/// disagreement). Returns nullopt when neither clause holds.
std::optional<ThetaPair> theta_closed_form(const Params& params);

/// Eigenvalue bounds on theta for a regular graph g of order N with second
/// largest eigenvalue l2 and smallest eigenvalue lN:
///   (N - Delta + l2)/(1 + l2) <= theta(g) <= -N lN / (Delta - lN)
///   1 - Delta/lN <= theta(comp g) <= N (1 + l2)/(N - Delta + l2)
/// Tightness flags follow the equality conditions combined with classify().
/// DegenerateGraphError for complete or empty graphs.
struct ThetaBounds {
    Rat lower_graph, upper_graph;
    Rat lower_complement, upper_complement;
    bool upper_graph_tight = false;       // g edge-transitive
    bool lower_graph_tight = false;       // complement of g vertex- and edge-transitive
    bool upper_complement_tight = false;  // complement of g edge-transitive
    bool lower_complement_tight = false;  // g vertex- and edge-transitive
};

ThetaBounds theta_bounds(const Params& params, Variant variant);

/// Numeric SDP oracle: minimizes lambda_max(M) over symmetric M with
/// M_uv = 1 on the diagonal and on non-edges (entries free on edges), whose
/// optimum is theta(g). Projected subgradient descent on the edge entries
/// with a power-iteration eigensolver. When a tight eigenvalue bound
/// certifies the optimum, the iteration stops as soon as the value is within
/// tol*(1+theta); otherwise the result is an estimate after the full budget.
struct SdpResult {
    double value = 0;
    bool certified = false;
    long long iterations = 0;
};

SdpResult theta_sdp(const Graph& g, double tol = 1e-3);

/// Adjacency-level core; certified_target is the known optimum from a tight
/// eigenvalue bound (enables the early-stop certificate), nullopt otherwise.
SdpResult theta_sdp_adjacency(const std::vector<DynBitset>& adj, double tol,
                              std::optional<double> certified_target);

/// Maximum independent set size by branch and bound over bitsets (N <= 32).
int alpha_bruteforce(const Graph& g);
int alpha_bruteforce(const std::vector<DynBitset>& adj);

/// Exact max-cut by exhaustive bipartition sweep (N <= 24), the surplus
/// mc - |E|/2, and the lower bound |E| / (pi (theta(comp) - 1)).
/// Throws AssertionFailureError if the surplus ever fell below the bound.
struct SurplusReport {
    long long maxcut = 0;
    Rat surplus;
    double bound = 0;
    Rat theta_complement;  // value used in the bound
};

SurplusReport maxcut_surplus(const Graph& g);

long long maxcut_bruteforce(const std::vector<DynBitset>& adj);

}  // namespace hamsym

#endif  // HAMSYM_THETA_HPP
