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

#ifndef HAMSYM_INTS_HPP
#define HAMSYM_INTS_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace hamsym {

// Exact unbounded integer / rational. Everything spectral or combinatorial in
// this library is computed in these types; doubles appear only in the numeric
// oracles (Jacobi, SDP).
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// num/den as an exact rational; normalizes the sign (the underlying
/// component constructor rejects negative denominators).
inline Rat make_rat(Int num, Int den) {
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rat(num, den);
}

inline Int ipow(Int base, unsigned exp) {
    Int r = 1;
    while (exp != 0) {
        if (exp & 1u) r *= base;
        base *= base;
        exp >>= 1u;
    }
    return r;
}

inline std::string to_string(const Int& v) { return v.str(); }

/// Serialized as "num/den" ("num" when den == 1), matching the CLI schema.
inline std::string to_string(const Rat& v) {
    const Int num = boost::multiprecision::numerator(v);
    const Int den = boost::multiprecision::denominator(v);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

inline double to_double(const Int& v) { return v.convert_to<double>(); }
inline double to_double(const Rat& v) { return v.convert_to<double>(); }

}  // namespace hamsym

#endif  // HAMSYM_INTS_HPP
