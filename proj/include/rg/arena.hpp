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

#include <optional>
#include <string>
#include <vector>

#include "rg/bits.hpp"

namespace rg {

/**
 * A bipartite game arena. Immutable after construction (via make_arena);
 * safe to share across concurrent tasks.
 *
 * owner0/owner1 partition the full mask; succ[v] is the successor mask of
 * vertex v and always points to the opposite side.
 */
struct Arena {
    int n = 0;
    vset full = 0;
    vset owner0 = 0;
    vset owner1 = 0;
    std::vector<vset> succ;
    std::vector<vset> pred;
    std::vector<std::string> names;

    vset owner(Player p) const { return p == Player::zero ? owner0 : owner1; }
    Player owner_of(int v) const {
        return contains_vertex(owner0, v) ? Player::zero : Player::one;
    }
};

/// Builds an arena, filling in the derived fields (full, owner1, pred).
/// Does not validate; see validate().
Arena make_arena(int n, vset owner0, std::vector<vset> succ,
                 std::vector<std::string> names = {});

struct ValidationIssue {
    enum Kind { missing_out_edge, not_bipartite, ownership_overlap, ownership_gap };
    Kind kind;
    int v = -1;
    int u = -1;
    std::string message(const Arena& a) const;
};

/// Checks the arena invariants; returns the first violation found, if any.
std::optional<ValidationIssue> validate(const Arena& a);

/// True iff X is nonempty and every vertex of X keeps a successor inside X.
bool is_subarena(const Arena& a, vset x);

/**
 * True iff A(X) is a sigma-trap inside the subarena A(context):
 * every sigma vertex of X has all its context-successors inside X, and
 * every opponent vertex of X has some successor inside X.
 */
bool is_trap_in(const Arena& a, vset context, vset x, Player sigma);

/// Trap check relative to the full arena.
inline bool is_trap(const Arena& a, vset x, Player sigma) {
    return is_trap_in(a, a.full, x, sigma);
}

/**
 * Attractor of player sigma to T inside the subarena A(context).
 * Worklist computation, linear in the edges inside context.
 */
vset attractor(const Arena& a, vset context, vset target, Player sigma);

}  // namespace rg
