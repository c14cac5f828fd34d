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

#include "hamsym/kraw.hpp"

#include <string>

#include "hamsym/errors.hpp"

namespace hamsym {

Int binom(long long a, long long b) {
    if (b < 0 || b > a) return 0;
    if (b > a - b) b = a - b;
    Int r = 1;
    for (long long k = 1; k <= b; ++k) {
        r *= (a - b + k);
        r /= k;  // exact: r is binom(a-b+k, k) after this step
    }
    return r;
}

KrawArgs::KrawArgs(int ell_, int i_, int n_, int q_) : ell(ell_), i(i_), n(n_), q(q_) {
    if (n < 1) throw DomainError("KrawArgs: n must be >= 1, got " + std::to_string(n));
    if (q < 2) throw DomainError("KrawArgs: q must be >= 2, got " + std::to_string(q));
    if (ell < 0 || ell > n)
        throw DomainError("KrawArgs: ell out of range [0," + std::to_string(n) + "]: " + std::to_string(ell));
    if (i < 0 || i > n)
        throw DomainError("KrawArgs: i out of range [0," + std::to_string(n) + "]: " + std::to_string(i));
}

namespace detail {

Int kraw_defining_sum(long long ell, long long i, long long n, long long q) {
    if (ell < 0) return 0;
    Int acc = 0;
    Int qpow = ipow(Int(q - 1), static_cast<unsigned>(ell));  // (q-1)^(ell-r) at r = 0
    for (long long r = 0; r <= ell; ++r) {
        if (r > 0) qpow /= (q - 1);
        const Int term = binom(i, r) * binom(n - i, ell - r) * qpow;
        if (r % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return acc;
}

}  // namespace detail

Int kraw_eval(const KrawArgs& args) {
    return detail::kraw_defining_sum(args.ell, args.i, args.n, args.q);
}

Int kraw_eval(int ell, int i, int n, int q) { return kraw_eval(KrawArgs(ell, i, n, q)); }

std::vector<Int> genfun_coefficients(int n, int q, int i) {
    if (n < 1 || q < 2 || i < 0 || i > n) throw DomainError("genfun_coefficients: bad arguments");
    // (1 + (q-1)z)^(n-i) has coefficients binom(n-i,k)(q-1)^k,
    // (1-z)^i has coefficients binom(i,k)(-1)^k; convolve.
    std::vector<Int> a(n - i + 1), b(i + 1), c(n + 1, Int(0));
    for (int k = 0; k <= n - i; ++k) a[k] = binom(n - i, k) * ipow(Int(q - 1), k);
    for (int k = 0; k <= i; ++k) b[k] = (k % 2 == 0 ? 1 : -1) * binom(i, k);
    for (int s = 0; s <= n - i; ++s)
        for (int t = 0; t <= i; ++t) c[s + t] += a[s] * b[t];
    return c;
}

bool genfun_check(int n, int q, int i) {
    const std::vector<Int> coeff = genfun_coefficients(n, q, i);
    for (int k = 0; k <= n; ++k)
        if (coeff[k] != kraw_eval(k, i, n, q)) return false;
    return true;
}

bool sum_check(int d, int i, int n, int q) {
    if (n < 1 || q < 2) throw DomainError("sum_check: bad n or q");
    if (i < 1 || i > n) throw DomainError("sum_check: i out of range [1,n]");
    if (d < 0 || d > n) throw DomainError("sum_check: d out of range [0,n]");
    Int lhs = 0;
    for (int k = 0; k <= d; ++k) lhs += kraw_eval(k, i, n, q);
    // d = n steps outside the KrawArgs range on the right-hand side; the
    // defining sum is empty there and the identity degenerates to 0 == 0.
    const Int rhs = detail::kraw_defining_sum(d, i - 1, n - 1, q);
    return lhs == rhs;
}

}  // namespace hamsym
