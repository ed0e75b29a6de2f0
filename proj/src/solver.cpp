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

#include "rg/solver.hpp"

#include <chrono>
#include <tuple>

#include "rg/errors.hpp"

namespace rg {

std::string to_string(Algorithm a) {
    return a == Algorithm::alg1 ? "alg1" : "alg2";
}

Algorithm algorithm_from_string(const std::string& s) {
    if (s == "alg1") return Algorithm::alg1;
    if (s == "alg2") return Algorithm::alg2;
    throw ParseError("unknown algorithm: " + s);
}

namespace {

void check_cap(const Arena& a, int vertex_cap) {
    if (vertex_cap > kMaxVertices) vertex_cap = kMaxVertices;
    if (a.n > vertex_cap) {
        throw CapExceeded("arena has " + std::to_string(a.n) +
                          " vertices, cap is " + std::to_string(vertex_cap));
    }
}

/**
 * Attr_0(sub, A(context)) == sub, without running the fixpoint: nothing
 * outside sub may be attracted, i.e. no Player 0 vertex of context\sub has
 * an edge into sub, and every Player 1 vertex of context\sub has an edge
 * staying in context\sub.
 */
bool attractor_closed(const Arena& a, vset context, vset sub) {
    vset outside = context & ~sub;
    for (vset s = outside; s; s &= s - 1) {
        int v = first_vertex(s);
        if (contains_vertex(a.owner0, v)) {
            if (a.succ[v] & sub) return false;
        } else {
            if ((a.succ[v] & outside) == 0) return false;
        }
    }
    return true;
}

PartitionTables partition(const Arena& a, const WinningCondition& cond,
                          Algorithm alg, int vertex_cap) {
    check_cap(a, vertex_cap);
    PartitionTables t{SubsetFamily(a.n), SubsetFamily(a.n)};

    for (vset i = 1; i <= a.full; ++i) {
        if (!is_subarena(a, i)) continue;  // pseudo-arena, disregarded
        t.pairs_enumerated += (std::uint64_t(1) << popcount(i)) - 2;

        bool win;
        if (player0_accepts(cond, i)) {
            // Fully won unless some 0-trap subgame is already lost.
            win = true;
            for (vset j : proper_submasks(i)) {
                if (t.q.contains(j) && is_trap_in(a, i, j, Player::zero)) {
                    win = false;
                    break;
                }
            }
        } else {
            // Needs a fully-won 1-trap witness.
            win = false;
            for (vset j : proper_submasks(i)) {
                if (!t.p.contains(j) || !is_trap_in(a, i, j, Player::one)) continue;
                if (alg == Algorithm::alg1) {
                    ++t.attractor_calls;
                    vset attr = attractor(a, i, j, Player::zero);
                    if (attr == i || t.p.contains(i & ~attr)) {
                        win = true;
                        break;
                    }
                } else {
                    if (popcount(j) == popcount(i) - 1) {
                        win = true;
                        break;
                    }
                    if (attractor_closed(a, i, j) && t.p.contains(i & ~j)) {
                        win = true;
                        break;
                    }
                }
            }
        }
        (win ? t.p : t.q).insert(i);
    }
    return t;
}

}  // namespace

PartitionTables partition_alg1(const Arena& a, const WinningCondition& cond,
                               int vertex_cap) {
    return partition(a, cond, Algorithm::alg1, vertex_cap);
}

PartitionTables partition_alg2(const Arena& a, const WinningCondition& cond,
                               int vertex_cap) {
    return partition(a, cond, Algorithm::alg2, vertex_cap);
}

std::pair<vset, vset> winning_regions(const Arena& a, const PartitionTables& tables) {
    for (vset i = a.full; i >= 1; --i) {
        if (tables.p.contains(i) && is_trap(a, i, Player::one)) {
            return {i, a.full & ~i};
        }
    }
    return {0, a.full};
}

SolveResult solve(const Arena& a, const WinningCondition& cond, Algorithm alg,
                  int vertex_cap) {
    auto start = std::chrono::steady_clock::now();
    SolveResult r;
    r.algorithm = alg;
    r.tables = partition(a, cond, alg, vertex_cap);
    std::tie(r.win0, r.win1) = winning_regions(a, r.tables);
    r.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    return r;
}

}  // namespace rg
