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

#ifndef HAMSYM_SPECTRA_HPP
#define HAMSYM_SPECTRA_HPP

#include <string>
#include <vector>

#include "hamsym/hamming.hpp"
#include "hamsym/ints.hpp"

namespace hamsym {

/// One eigenvalue of a Gilbert graph or complement, with its multiplicity.
/// Entry 0 is the regular degree (simple when the graph is connected);
/// entry j >= 1 belongs to the idempotent E_j and has multiplicity
/// binom(n,j)(q-1)^j.
struct SpectrumEntry {
    int j;
    Int eigenvalue;
    Int multiplicity;
};

/// Spectrum of the Gilbert graph: (Delta, K_{d-1}(j-1; n-1, q) - 1)_{j=1..n}.
std::vector<SpectrumEntry> gilbert_spectrum(const Params& params);

/// Spectrum of the complement: gamma_0 = Delta(comp),
/// gamma_j = -K_{d-1}(j-1; n-1, q) for 1 <= j <= n.
std::vector<SpectrumEntry> complement_spectrum(const Params& params);

std::vector<SpectrumEntry> spectrum(const Params& params, Variant variant);

/// Ordering facts about the complement eigenvalues: gamma_1 < gamma_m for
/// 2 <= m <= n-1, and gamma_1 = gamma_n iff q = 2 and d is odd. Throws
/// AssertionFailureError if either statement were violated.
struct SpectralOrderReport {
    bool part2_strict = false;       // gamma_1 < gamma_m held for all middle m
    bool gamma1_equals_gamman = false;
    bool q2_and_d_odd = false;
    std::string clause;              // which side of the part-3 biconditional applies
};

SpectralOrderReport spectral_order_checks(const Params& params);

/// Cyclic Jacobi eigensolver for dense symmetric matrices (row-major,
/// size N*N). Sweeps rows in a fixed order until the off-diagonal Frobenius
/// mass drops below tol; NoConvergenceError after 100 sweeps. Returns the
/// eigenvalues sorted descending. Independent oracle for the closed forms.
std::vector<double> jacobi_eigs(std::vector<double> a, int N, double tol = 1e-10);

/// Expands (eigenvalue, multiplicity) pairs into a descending value list.
std::vector<double> expand_spectrum(const std::vector<SpectrumEntry>& entries);

/// Builds the adjacency matrix of g as doubles (row-major).
std::vector<double> adjacency_matrix(const Graph& g);

/// Closed form vs. Jacobi on the built graph, multiset comparison within
/// match_tol. The flagship anti-hallucination check for the spectra.
bool spectrum_matches_oracle(const Graph& g, double match_tol = 1e-8);

}  // namespace hamsym

#endif  // HAMSYM_SPECTRA_HPP
