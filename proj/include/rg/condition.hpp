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

#include <string>
#include <vector>

#include "rg/bits.hpp"
#include "rg/subset_family.hpp"

namespace rg {

enum class ConditionKind { muller, mcnaughton, coloured_muller, kl, rabin, streett };

std::string to_string(ConditionKind k);
ConditionKind condition_kind_from_string(const std::string& s);

struct RabinPair {
    vset hit;    // U_i: visit infinitely often
    vset avoid;  // V_i: avoid eventually
    bool operator==(const RabinPair&) const = default;
};

struct KlPair {
    int anchor;  // u_i, 0-based vertex index
    vset cover;  // S_i
    bool operator==(const KlPair&) const = default;
    bool operator<(const KlPair& o) const {
        return anchor != o.anchor ? anchor < o.anchor : cover < o.cover;
    }
};

/**
 * One of the six regular winning conditions. Immutable after construction;
 * the membership predicate is pure and safe for concurrent use.
 *
 * Payload per kind:
 *   muller          omega over vertex masks
 *   mcnaughton      watched (W) + omega over subsets of W, keyed by vertex mask
 *   coloured_muller colour[v], colour_count, omega over colour masks
 *   kl              kl_pairs
 *   rabin/streett   pairs
 */
struct WinningCondition {
    ConditionKind kind = ConditionKind::muller;
    SubsetFamily omega;
    vset watched = 0;
    std::vector<int> colour;
    int colour_count = 0;
    std::vector<KlPair> kl_pairs;
    std::vector<RabinPair> pairs;

    /// Mask of colours occurring in the vertex set x.
    vset colours_of(vset x) const {
        vset c = 0;
        for (vset s = x; s; s &= s - 1) c |= bit(colour[first_vertex(s)]);
        return c;
    }
};

WinningCondition make_muller(SubsetFamily omega);
WinningCondition make_mcnaughton(vset watched, SubsetFamily omega);
WinningCondition make_coloured(std::vector<int> colour, int colour_count,
                               SubsetFamily omega);
WinningCondition make_kl(std::vector<KlPair> pairs);
WinningCondition make_rabin(std::vector<RabinPair> pairs);
WinningCondition make_streett(std::vector<RabinPair> pairs);

/**
 * Player 0's membership predicate on a nonempty infinity-set candidate:
 * muller X in Omega; mcnaughton X&W in Omega; coloured c(X) in Omega;
 * kl some (u,S) with u in X and X subset of S; rabin some pair hitting U_i
 * and avoiding V_i; streett every hit pair also hits V_i.
 */
bool player0_accepts(const WinningCondition& cond, vset x);

/// The symmetric counterpart: all nonempty n-bit sets not in Omega.
WinningCondition complement_muller(const WinningCondition& cond, int n);

/**
 * Lambert W on [0, inf): the w >= 0 with w*e^w = z, by damped Newton
 * iteration from ln(1+z). Residual <= 1e-9 * max(1, z).
 */
double lambert_w(double z);

/**
 * True iff the game parameter p exceeds c*n / LW(c*n) -- the regime where
 * 3^n enumeration beats parameter-factorial algorithms. Default c = ln 3.
 */
bool classify_large(std::uint64_t p, int n, double c = 1.0986122886681098);

}  // namespace rg
