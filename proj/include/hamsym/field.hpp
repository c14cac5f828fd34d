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

#ifndef HAMSYM_FIELD_HPP
#define HAMSYM_FIELD_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "hamsym/ints.hpp"

namespace hamsym {

/// Element of GF(p^m) in the polynomial basis: coefficient list of length m,
/// each coefficient reduced mod p, constant term first.
struct FieldElement {
    std::vector<int> coeffs;
};

/// GF(p^m) with precomputed add/mul/inverse/trace tables. Elements are
/// addressed by index in 0..q-1; index e encodes the coefficient vector
/// (e mod p, (e/p) mod p, ...). Immutable after construction.
class FieldSpec {
   public:
    /// Builds GF(p^m). If no modulus is given, a built-in irreducible
    /// polynomial is used for (p,m) in {(2,1),(3,1),(5,1),(7,1),(2,2),(2,3),(3,2)};
    /// any other extension requires an explicit modulus (constant term first,
    /// monic of degree m). Throws NotPrimeError, ReduciblePolynomialError,
    /// UnsupportedSizeError (q > 512 or no built-in modulus).
    static FieldSpec build(int p, int m, std::optional<std::vector<int>> modulus = std::nullopt);

    int p() const { return p_; }
    int m() const { return m_; }
    int q() const { return q_; }
    const std::vector<int>& modulus() const { return modulus_; }

    int add(int a, int b) const { return add_[a * q_ + b]; }
    int sub(int a, int b) const { return add_[a * q_ + neg_[b]]; }
    int neg(int a) const { return neg_[a]; }
    int mul(int a, int b) const { return mul_[a * q_ + b]; }
    /// Multiplicative inverse; DomainError for a == 0.
    int inv(int a) const;

    /// Tr(a) = sum_{j=0}^{m-1} a^(p^j), an element of the prime subfield,
    /// returned as an integer in 0..p-1.
    int trace(int a) const { return trace_[a]; }

    FieldElement element(int index) const;
    int index(const FieldElement& e) const;

   private:
    FieldSpec() = default;

    int p_ = 0, m_ = 0, q_ = 0;
    std::vector<int> modulus_;
    std::vector<std::uint16_t> add_, mul_, neg_, inv_;
    std::vector<int> trace_;
};

int trace(const FieldSpec& field, const FieldElement& a);

/// Sum of p-th roots of unity kept as raw counts: counts[j] is the number of
/// summands equal to omega^j, omega = e^(2 pi i / p). Reduction against the
/// relation 1 + omega + ... + omega^(p-1) = 0 happens only at comparison.
struct CycloSum {
    int p = 2;
    std::vector<Int> counts;
};

/// Exact test of "s represents the rational integer t" in Z[omega].
bool cyclo_equals_integer(const CycloSum& s, const Int& t);

/// Enumerates all y in GF(q)^n of weight k and accumulates
/// counts[Tr(<x,y>)]; the represented value equals K_k(wt(x); n, q).
/// Throws BudgetExceededError when binom(n,k)(q-1)^k > 10^7.
CycloSum char_kraw(const FieldSpec& field, int n, int k, const std::vector<int>& x);

}  // namespace hamsym

#endif  // HAMSYM_FIELD_HPP
