/*
 * Copyright 2026 the rgame authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cassert>
#include <cstdint>
#include <vector>

#include "rg/bits.hpp"

namespace rg {

/**
 * A family of n-bit vertex sets, stored as a flat 2^n-bit array with direct
 * indexing. Insert, remove and membership are O(1); ordered traversal over
 * the whole key space is O(2^n) regardless of how many keys are stored.
 *
 * Not safe for concurrent mutation; a frozen family may be shared read-only.
 */
class SubsetFamily {
public:
    SubsetFamily() : SubsetFamily(0) {}

    explicit SubsetFamily(int n) : n_(n), count_(0) {
        assert(n >= 0 && n <= kMaxVertices);
        words_.assign(((std::size_t(1) << n) + 63) / 64, 0);
    }

    int width() const { return n_; }
    std::uint64_t count() const { return count_; }

    bool contains(vset x) const { return (words_[x >> 6] >> (x & 63)) & 1; }

    void insert(vset x) {
        std::uint64_t m = std::uint64_t(1) << (x & 63);
        if (!(words_[x >> 6] & m)) {
            words_[x >> 6] |= m;
            ++count_;
        }
    }

    void remove(vset x) {
        std::uint64_t m = std::uint64_t(1) << (x & 63);
        if (words_[x >> 6] & m) {
            words_[x >> 6] &= ~m;
            --count_;
        }
    }

    /// Calls f(key) for every stored key in ascending numeric order.
    template <class F>
    void traverse(F&& f) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            for (std::uint64_t bits = words_[w]; bits; bits &= bits - 1) {
                f(vset(w * 64 + std::countr_zero(bits)));
            }
        }
    }

    std::vector<vset> keys() const {
        std::vector<vset> out;
        out.reserve(count_);
        traverse([&](vset x) { out.push_back(x); });
        return out;
    }

    bool operator==(const SubsetFamily& o) const {
        return n_ == o.n_ && words_ == o.words_;
    }

private:
    int n_;
    std::uint64_t count_;
    std::vector<std::uint64_t> words_;
};

}  // namespace rg
