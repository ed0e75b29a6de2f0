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

#include <utility>
#include <vector>

#include "rg/arena.hpp"
#include "rg/condition.hpp"

namespace rg {

/// Scale guard for the latest-appearance-record construction (n! * n states).
inline constexpr int kOracleMaxVertices = 6;

/**
 * Explicit max-parity game, even priorities winning for Player 0.
 * Positions come from the LAR construction: a permutation of the vertices
 * (front entry = current vertex) plus a hit index.
 */
struct ParityGame {
    std::vector<int> owner;     // 0 or 1 per position
    std::vector<int> priority;  // bounded by 2n+1
    std::vector<std::vector<int>> succ;
    std::vector<std::vector<int>> pred;

    int size() const { return (int)owner.size(); }
    /// Initial position for a play starting at arena vertex v.
    std::vector<int> initial;  // indexed by arena vertex
};

/**
 * Latest-appearance-record reduction: positions are (pi, h) where pi is a
 * permutation of all vertices with the current vertex in front. Moving to u
 * rotates u to the front; h records u's previous index (1-based). Priority
 * is 2h when the first h entries of pi form an accepted set, else 2h+1.
 *
 * tail_identity selects the initial permutation tail order; flipping it
 * must not change any winner (tested).
 */
ParityGame lar_reduce(const Arena& a, const WinningCondition& cond,
                      bool tail_identity = true);

/// Classical recursive attractor-decomposition parity solver.
/// Returns (W0, W1) as position index lists.
std::pair<std::vector<int>, std::vector<int>> solve_parity(const ParityGame& pg);

/// Reference regions for the regular game: LAR reduction + parity solve,
/// projected through the initial positions. Entirely independent of the
/// subgame-partition solver.
std::pair<vset, vset> oracle_solve(const Arena& a, const WinningCondition& cond,
                                   bool tail_identity = true);

}  // namespace rg
