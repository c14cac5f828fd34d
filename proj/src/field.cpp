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

#include "hamsym/field.hpp"

#include <algorithm>
#include <string>

#include "hamsym/errors.hpp"
#include "hamsym/kraw.hpp"

namespace hamsym {
namespace {

constexpr int kMaxFieldSize = 512;
constexpr long long kCharSumBudget = 10'000'000;

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; static_cast<long long>(d) * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Built-in irreducible moduli, constant term first.
std::optional<std::vector<int>> builtin_modulus(int p, int m) {
    if (m == 1 && (p == 2 || p == 3 || p == 5 || p == 7)) return std::vector<int>{0, 1};  // x
    if (p == 2 && m == 2) return std::vector<int>{1, 1, 1};                               // x^2 + x + 1
    if (p == 2 && m == 3) return std::vector<int>{1, 1, 0, 1};                            // x^3 + x + 1
    if (p == 3 && m == 2) return std::vector<int>{1, 0, 1};                               // x^2 + 1
    return std::nullopt;
}

// Polynomial arithmetic over GF(p), dense coefficient vectors, constant first.
std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& f, int p) {
    const int df = static_cast<int>(f.size()) - 1;
    for (int k = static_cast<int>(a.size()) - 1; k >= df; --k) {
        const int c = a[k] % p;
        if (c == 0) continue;
        for (int j = 0; j <= df; ++j) {
            a[k - df + j] = ((a[k - df + j] - c * f[j]) % p + p * p) % p;
        }
    }
    a.resize(df);
    for (int& c : a) c = ((c % p) + p) % p;
    return a;
}

std::vector<int> poly_mulmod(const std::vector<int>& a, const std::vector<int>& b,
                             const std::vector<int>& f, int p) {
    std::vector<int> c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    }
    return poly_mod(std::move(c), f, p);
}

int eval_poly(const std::vector<int>& f, int x, int p) {
    int v = 0;
    for (int k = static_cast<int>(f.size()) - 1; k >= 0; --k) v = (v * x + f[k]) % p;
    return v;
}

// True iff g (monic, degree >= 1) divides f over GF(p).
bool poly_divides(const std::vector<int>& g, const std::vector<int>& f, int p) {
    const std::vector<int> r = poly_mod(f, g, p);
    return std::all_of(r.begin(), r.end(), [](int c) { return c == 0; });
}

}  // namespace

FieldSpec FieldSpec::build(int p, int m, std::optional<std::vector<int>> modulus) {
    if (!is_prime(p)) throw NotPrimeError("field_build: p = " + std::to_string(p) + " is not prime");
    if (m < 1) throw DomainError("field_build: m must be >= 1");

    long long q = 1;
    for (int j = 0; j < m; ++j) {
        q *= p;
        if (q > kMaxFieldSize)
            throw UnsupportedSizeError("field_build: q = p^m exceeds " + std::to_string(kMaxFieldSize));
    }

    std::vector<int> f;
    if (modulus.has_value()) {
        f = *modulus;
    } else {
        auto builtin = builtin_modulus(p, m);
        if (!builtin)
            throw UnsupportedSizeError("field_build: no built-in modulus for (p,m) = (" + std::to_string(p) +
                                       "," + std::to_string(m) + "); supply one explicitly");
        f = *builtin;
    }
    if (static_cast<int>(f.size()) != m + 1)
        throw DomainError("field_build: modulus must have degree m = " + std::to_string(m));
    for (int c : f)
        if (c < 0 || c >= p) throw DomainError("field_build: modulus coefficients must lie in 0..p-1");
    if (f[m] != 1) throw DomainError("field_build: modulus must be monic");

    // Root/low-degree factor check (complete for m <= 4; the inverse scan
    // below is a complete reducibility test for every degree).
    if (m >= 2) {
        for (int x = 0; x < p; ++x)
            if (eval_poly(f, x, p) == 0)
                throw ReduciblePolynomialError("field_build: modulus has root " + std::to_string(x));
        if (m == 4) {
            std::vector<int> g(3, 0);
            g[2] = 1;
            for (g[0] = 0; g[0] < p; ++g[0])
                for (g[1] = 0; g[1] < p; ++g[1])
                    if (poly_divides(g, f, p))
                        throw ReduciblePolynomialError("field_build: modulus has a quadratic factor");
        }
    }

    FieldSpec fs;
    fs.p_ = p;
    fs.m_ = m;
    fs.q_ = static_cast<int>(q);
    fs.modulus_ = f;

    const int Q = fs.q_;
    // index <-> coefficient vectors (base-p digits, constant term first)
    auto digits = [&](int e) {
        std::vector<int> d(m);
        for (int j = 0; j < m; ++j) {
            d[j] = e % p;
            e /= p;
        }
        return d;
    };
    auto undigits = [&](const std::vector<int>& d) {
        int e = 0;
        for (int j = m - 1; j >= 0; --j) e = e * p + (d[j] % p);
        return e;
    };

    fs.add_.assign(Q * Q, 0);
    fs.mul_.assign(Q * Q, 0);
    fs.neg_.assign(Q, 0);
    for (int a = 0; a < Q; ++a) {
        const std::vector<int> da = digits(a);
        std::vector<int> na(m);
        for (int j = 0; j < m; ++j) na[j] = (p - da[j]) % p;
        fs.neg_[a] = static_cast<std::uint16_t>(undigits(na));
        for (int b = 0; b < Q; ++b) {
            const std::vector<int> db = digits(b);
            std::vector<int> s(m);
            for (int j = 0; j < m; ++j) s[j] = (da[j] + db[j]) % p;
            fs.add_[a * Q + b] = static_cast<std::uint16_t>(undigits(s));
            fs.mul_[a * Q + b] = static_cast<std::uint16_t>(undigits(poly_mulmod(da, db, f, p)));
        }
    }

    // Inverse scan doubles as the reducibility test: a zero divisor in
    // GF(p)[x]/(f) has no inverse.
    fs.inv_.assign(Q, 0);
    for (int a = 1; a < Q; ++a) {
        int found = -1;
        for (int b = 1; b < Q; ++b)
            if (fs.mul_[a * Q + b] == 1) {
                found = b;
                break;
            }
        if (found < 0)
            throw ReduciblePolynomialError("field_build: element " + std::to_string(a) +
                                           " has no inverse; modulus is reducible");
        fs.inv_[a] = static_cast<std::uint16_t>(found);
    }

    // Trace by Frobenius powers: Tr(a) = a + a^p + ... + a^(p^(m-1)).
    auto fpow = [&](int a, int e) {
        int r = 1, base = a;
        while (e > 0) {
            if (e & 1) r = fs.mul_[r * Q + base];
            base = fs.mul_[base * Q + base];
            e >>= 1;
        }
        return r;
    };
    fs.trace_.assign(Q, 0);
    for (int a = 0; a < Q; ++a) {
        int t = a;
        int acc = a;
        for (int j = 1; j < m; ++j) {
            t = fpow(t, p);
            acc = fs.add_[acc * Q + t];
        }
        if (acc >= p)
            throw AssertionFailureError("field_build: trace left the prime subfield (internal bug)");
        fs.trace_[a] = acc;
    }
    return fs;
}

int FieldSpec::inv(int a) const {
    if (a == 0) throw DomainError("FieldSpec::inv: zero has no inverse");
    if (a < 0 || a >= q_) throw OutOfRangeError("FieldSpec::inv: element index out of range");
    return inv_[a];
}

FieldElement FieldSpec::element(int index) const {
    if (index < 0 || index >= q_) throw OutOfRangeError("FieldSpec::element: index out of range");
    FieldElement e;
    e.coeffs.resize(m_);
    for (int j = 0; j < m_; ++j) {
        e.coeffs[j] = index % p_;
        index /= p_;
    }
    return e;
}

int FieldSpec::index(const FieldElement& e) const {
    if (static_cast<int>(e.coeffs.size()) != m_)
        throw LengthMismatchError("FieldSpec::index: coefficient vector has wrong length");
    int idx = 0;
    for (int j = m_ - 1; j >= 0; --j) {
        if (e.coeffs[j] < 0 || e.coeffs[j] >= p_)
            throw OutOfRangeError("FieldSpec::index: coefficient not reduced mod p");
        idx = idx * p_ + e.coeffs[j];
    }
    return idx;
}

int trace(const FieldSpec& field, const FieldElement& a) { return field.trace(field.index(a)); }

bool cyclo_equals_integer(const CycloSum& s, const Int& t) {
    const int p = s.p;
    if (static_cast<int>(s.counts.size()) != p) throw LengthMismatchError("cyclo_equals_integer: bad counts");
    if (p == 2) return s.counts[0] - s.counts[1] == t;
    // In the basis {1, omega, ..., omega^(p-2)} the value is
    // sum_j (counts[j] - counts[p-1]) omega^j.
    for (int j = 1; j <= p - 2; ++j)
        if (s.counts[j] != s.counts[p - 1]) return false;
    return s.counts[0] - s.counts[p - 1] == t;
}

CycloSum char_kraw(const FieldSpec& field, int n, int k, const std::vector<int>& x) {
    const int q = field.q();
    if (n < 1 || k < 0 || k > n) throw DomainError("char_kraw: need 1 <= n and 0 <= k <= n");
    if (static_cast<int>(x.size()) != n) throw LengthMismatchError("char_kraw: word length != n");
    for (int s : x)
        if (s < 0 || s >= q) throw OutOfRangeError("char_kraw: word symbol out of range");

    const Int summands = binom(n, k) * ipow(Int(q - 1), static_cast<unsigned>(k));
    if (summands > kCharSumBudget) throw BudgetExceededError("char_kraw: weight-shell enumeration too large");

    CycloSum out;
    out.p = field.p();
    out.counts.assign(out.p, Int(0));
    std::vector<long long> counts(out.p, 0);

    if (k == 0) {
        counts[0] = 1;  // only y = 0
    } else {
        // Iterate supports as increasing index combinations, values as an
        // odometer over the nonzero symbols 1..q-1.
        std::vector<int> supp(k);
        for (int j = 0; j < k; ++j) supp[j] = j;
        std::vector<int> val(k, 1);
        while (true) {
            // all value assignments for this support
            while (true) {
                int ip = 0;
                for (int j = 0; j < k; ++j) ip = field.add(ip, field.mul(x[supp[j]], val[j]));
                ++counts[field.trace(ip)];
                int pos = k - 1;
                while (pos >= 0 && val[pos] == q - 1) val[pos--] = 1;
                if (pos < 0) break;
                ++val[pos];
            }
            // next combination
            int pos = k - 1;
            while (pos >= 0 && supp[pos] == n - k + pos) --pos;
            if (pos < 0) break;
            ++supp[pos];
            for (int j = pos + 1; j < k; ++j) supp[j] = supp[j - 1] + 1;
        }
    }
    for (int j = 0; j < out.p; ++j) out.counts[j] = counts[j];
    return out;
}

}  // namespace hamsym
