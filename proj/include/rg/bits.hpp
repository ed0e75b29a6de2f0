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

#include <bit>
#include <cstdint>

namespace rg {

/**
 * A set of vertices encoded as a bitmask: vertex j (1-based) is bit j-1.
 * All arenas are capped at kMaxVertices, so one 32-bit word suffices.
 */
using vset = std::uint32_t;

// Hard representation limit: subset families index 2^n-bit arrays.
inline constexpr int kMaxVertices = 24;

inline int popcount(vset x) { return std::popcount(x); }

inline vset full_mask(int n) { return (n >= 32) ? ~vset(0) : ((vset(1) << n) - 1); }

inline vset bit(int v) { return vset(1) << v; }

inline bool contains_vertex(vset x, int v) { return (x >> v) & 1u; }

/// Index of the lowest set bit.
inline int first_vertex(vset x) { return std::countr_zero(x); }

enum class Player : int { zero = 0, one = 1 };

inline Player opponent(Player p) { return p == Player::zero ? Player::one : Player::zero; }

inline int index(Player p) { return static_cast<int>(p); }

/**
 * Range over all nonempty proper submasks of i, in descending numeric
 * order via the (j-1) & i recurrence. The order is documented but nothing
 * outside the tests depends on it.
 */
class ProperSubmasks {
public:
    class iterator {
    public:
        iterator(vset j, vset i) : j_(j), i_(i) {}
        vset operator*() const { return j_; }
        iterator& operator++() {
            j_ = (j_ - 1) & i_;
            return *this;
        }
        bool operator!=(const iterator& o) const { return j_ != o.j_; }

    private:
        vset j_, i_;
    };

    explicit ProperSubmasks(vset i) : i_(i) {}
    iterator begin() const { return iterator((i_ - 1) & i_, i_); }
    iterator end() const { return iterator(0, i_); }

private:
    vset i_;
};

inline ProperSubmasks proper_submasks(vset i) { return ProperSubmasks(i); }

}  // namespace rg
