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

#include <initializer_list>
#include <string>

#include "rg/arena.hpp"
#include "rg/condition.hpp"
#include "rg/gamefile.hpp"

namespace rgt {

using namespace rg;

// The small hand arenas used throughout the tests.

/// g_a: V0={v1}, V1={v2}, v1<->v2. The smallest legal arena.
inline Arena two_cycle() {
    return make_arena(2, 0b01, {0b10, 0b01}, {"v1", "v2"});
}

/// g_c: V0={a,d}, V1={b,c}; a->b, a->c, b->a, c->d, d->c.
/// Bits: a=0, b=1, c=2, d=3.
inline Arena split_pair() {
    return make_arena(4, 0b1001, {0b0110, 0b0001, 0b1000, 0b0100},
                      {"a", "b", "c", "d"});
}

/// g_d: V0={a}, V1={b,c}; a->b, a->c, b->a, c->a. Bits: a=0, b=1, c=2.
inline Arena hub() {
    return make_arena(3, 0b001, {0b110, 0b001, 0b001}, {"a", "b", "c"});
}

inline SubsetFamily fam(int n, std::initializer_list<vset> xs) {
    SubsetFamily f(n);
    for (vset x : xs) f.insert(x);
    return f;
}

inline WinningCondition muller_of(int n, std::initializer_list<vset> xs) {
    return make_muller(fam(n, xs));
}

/// Independent reference attractor: the textbook fixpoint, evaluated by
/// rescanning every vertex until stable. Deliberately different from the
/// worklist implementation under test.
inline vset attractor_bruteforce(const Arena& a, vset context, vset target,
                                 Player sigma) {
    vset w = target & context;
    bool changed = true;
    while (changed) {
        changed = false;
        for (vset s = context & ~w; s; s &= s - 1) {
            int v = first_vertex(s);
            vset inside = a.succ[v] & context;
            bool pulled = contains_vertex(a.owner(sigma), v)
                              ? (inside & w) != 0
                              : (inside & ~w) == 0;
            if (pulled) {
                w |= bit(v);
                changed = true;
            }
        }
    }
    return w;
}

/// Deterministic random instance via the public generator.
inline Game random_instance(std::uint64_t seed, int n, const std::string& kind,
                            double density = 0.6, int param = -1) {
    GenSpec spec;
    spec.seed = seed;
    spec.n = n;
    spec.kind = kind;
    spec.edge_density = density;
    spec.param = param;
    return parse_game(random_game(spec));
}

/// Calls f(arena) for every valid arena on exactly n vertices: every
/// ownership bipartition with both sides nonempty, crossed with every
/// per-vertex choice of a nonempty successor set on the opposite side.
template <class F>
void for_each_arena(int n, F&& f) {
    vset full = full_mask(n);
    for (vset owner0 = 1; owner0 < full; ++owner0) {
        std::vector<vset> succ(n, 0);
        auto recurse = [&](auto&& self, int v) -> void {
            if (v == n) {
                f(make_arena(n, owner0, succ));
                return;
            }
            vset other = contains_vertex(owner0, v) ? full & ~owner0 : owner0;
            for (vset e = other; e; e = (e - 1) & other) {
                succ[v] = e;
                self(self, v + 1);
            }
        };
        recurse(recurse, 0);
    }
}

/// splitmix64, for test-local randomness with stable results.
class TestRng {
public:
    explicit TestRng(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    std::uint64_t below(std::uint64_t k) { return k ? next() % k : 0; }

private:
    std::uint64_t state_;
};

}  // namespace rgt
