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

#ifndef HAMSYM_KRAW_HPP
#define HAMSYM_KRAW_HPP

#include <vector>

#include "hamsym/ints.hpp"

namespace hamsym {

/// Binomial coefficient with the zero-outside convention: exactly 0 whenever
/// b < 0 or b > a. Never overflows.
Int binom(long long a, long long b);

/// Arguments of the q-ary Krawtchouk polynomial K_ell(i; n, q).
/// Out-of-range values are rejected here, not inside kraw_eval.
struct KrawArgs {
    int ell;  // degree index, 0..n
    int i;    // weight argument, 0..n
    int n;    // word length >= 1
    int q;    // alphabet size >= 2

    KrawArgs(int ell, int i, int n, int q);
};

/// K_ell(i; n, q) = sum_r binom(i,r) binom(n-i,ell-r) (-1)^r (q-1)^(ell-r),
/// computed exactly. For q = 2 this is the binary Krawtchouk polynomial.
Int kraw_eval(const KrawArgs& args);
Int kraw_eval(int ell, int i, int n, int q);

namespace detail {
/// The defining sum without the ell <= n restriction (the binomial
/// convention makes it vanish for ell > n when 0 <= i <= n). Used where an
/// identity's right-hand side steps outside the KrawArgs range.
Int kraw_defining_sum(long long ell, long long i, long long n, long long q);
}  // namespace detail

/// Expands (1 + (q-1)z)^(n-i) (1-z)^i as an exact integer polynomial and
/// returns true iff coefficient k equals K_k(i; n, q) for all 0 <= k <= n.
bool genfun_check(int n, int q, int i);

/// Coefficients of (1 + (q-1)z)^(n-i) (1-z)^i, length n+1 (test hook).
std::vector<Int> genfun_coefficients(int n, int q, int i);

/// True iff sum_{k=0}^{d} K_k(i; n, q) == K_d(i-1; n-1, q), both sides exact.
/// Requires 1 <= i <= n and 0 <= d <= n.
bool sum_check(int d, int i, int n, int q);

}  // namespace hamsym

#endif  // HAMSYM_KRAW_HPP
