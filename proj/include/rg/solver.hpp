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

#include <cstdint>
#include <string>
#include <utility>

#include "rg/arena.hpp"
#include "rg/condition.hpp"
#include "rg/subset_family.hpp"

namespace rg {

enum class Algorithm { alg1, alg2 };

std::string to_string(Algorithm a);
Algorithm algorithm_from_string(const std::string& s);

/**
 * The subgame partition: P holds the subarena carriers Player 0 fully wins,
 * Q the carriers Player 0 cannot fully win. P and Q are disjoint and cover
 * exactly the subarena keys.
 *
 * pairs_enumerated is the (S_i, S_j) enumeration cost charged per subarena
 * key: 2^popcount(i) - 2 candidate submasks each, whether or not the scan
 * short-circuits on a witness. attractor_calls counts fixpoint attractor
 * runs; the alg2 path keeps it at zero.
 */
struct PartitionTables {
    SubsetFamily p;
    SubsetFamily q;
    std::uint64_t pairs_enumerated = 0;
    std::uint64_t attractor_calls = 0;
};

struct SolveResult {
    vset win0 = 0;
    vset win1 = 0;
    PartitionTables tables;
    Algorithm algorithm = Algorithm::alg2;
    double elapsed_ms = 0.0;
};

/// Partition via the attractor-based subgame recurrence.
PartitionTables partition_alg1(const Arena& a, const WinningCondition& cond,
                               int vertex_cap = kMaxVertices);

/**
 * Partition via the strengthened recurrence: the non-accepted branch looks
 * for a fully-won 1-trap of size |S_i|-1, or one that is attractor-closed
 * (decided by an O(n) local edge test) with a fully-won complement.
 * Identical tables to partition_alg1 on every input.
 */
PartitionTables partition_alg2(const Arena& a, const WinningCondition& cond,
                               int vertex_cap = kMaxVertices);

/// Win0 is the maximal member of P that is a 1-trap in the full arena
/// (descending key scan); empty when no such member exists.
std::pair<vset, vset> winning_regions(const Arena& a, const PartitionTables& tables);

SolveResult solve(const Arena& a, const WinningCondition& cond,
                  Algorithm alg = Algorithm::alg2, int vertex_cap = kMaxVertices);

}  // namespace rg
