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

#ifndef HAMSYM_BITSET_HPP
#define HAMSYM_BITSET_HPP

#include <bit>
#include <cstdint>
#include <vector>

namespace hamsym {

/// Fixed-size dynamic bitset used for dense adjacency rows. The graphs here
/// have degree on the order of the vertex count, so popcount over packed
/// words is the workhorse of all brute-force certifiers.
class DynBitset {
   public:
    DynBitset() = default;
    explicit DynBitset(int nbits) : nbits_(nbits), w_((nbits + 63) / 64, 0) {}

    int size() const { return nbits_; }

    void set(int i) { w_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
    void reset(int i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }

    int count() const {
        int c = 0;
        for (std::uint64_t w : w_) c += std::popcount(w);
        return c;
    }

    DynBitset& operator&=(const DynBitset& o) {
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
        return *this;
    }
    DynBitset& operator|=(const DynBitset& o) {
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
        return *this;
    }

    bool operator==(const DynBitset& o) const { return nbits_ == o.nbits_ && w_ == o.w_; }

    /// |a & b|
    friend int and_count(const DynBitset& a, const DynBitset& b) {
        int c = 0;
        for (std::size_t k = 0; k < a.w_.size(); ++k) c += std::popcount(a.w_[k] & b.w_[k]);
        return c;
    }

    /// |a \ b|
    friend int andnot_count(const DynBitset& a, const DynBitset& b) {
        int c = 0;
        for (std::size_t k = 0; k < a.w_.size(); ++k) c += std::popcount(a.w_[k] & ~b.w_[k]);
        return c;
    }

    /// First set bit at position >= from, or -1.
    int next_set(int from) const {
        if (from >= nbits_) return -1;
        int k = from >> 6;
        std::uint64_t w = w_[k] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (w != 0) {
                int pos = (k << 6) + std::countr_zero(w);
                return pos < nbits_ ? pos : -1;
            }
            if (++k >= static_cast<int>(w_.size())) return -1;
            w = w_[k];
        }
    }

   private:
    int nbits_ = 0;
    std::vector<std::uint64_t> w_;
};

}  // namespace hamsym

#endif  // HAMSYM_BITSET_HPP
