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

#include "rg/condition.hpp"
#include "rg/solver.hpp"

namespace rg {

struct ReductionReport {
    ConditionKind source;
    ConditionKind target;
    std::uint64_t pairs_in = 0;
    std::uint64_t pairs_out = 0;    // KL pairs emitted
    std::uint64_t family_size = 0;  // Muller sets materialized
    double elapsed_ms = 0.0;
};

/**
 * Compresses each Rabin pair (U,V) to KL pairs: one (u, V_all \ V) per
 * u in U \ V. Duplicate KL pairs are merged. The KL predicate agrees with
 * the Rabin predicate on every nonempty set.
 */
WinningCondition rabin_to_kl(const WinningCondition& cond, int n,
                             ReductionReport* report = nullptr);

/// Materializes the KL predicate: all sets containing the anchor inside
/// the cover, per pair.
WinningCondition kl_to_muller(const WinningCondition& cond, int n,
                              int vertex_cap = kMaxVertices,
                              ReductionReport* report = nullptr);

/// Extensional closure of any condition's predicate over all nonempty sets.
WinningCondition materialize_omega(const WinningCondition& cond, int n,
                                   int vertex_cap = kMaxVertices,
                                   ReductionReport* report = nullptr);

/**
 * Solves a Streett game as the ownership-swapped Rabin game with the same
 * pairs and swaps the regions: the Streett player's opponent wins the dual
 * Rabin game exactly where the Streett player loses. The returned tables
 * are those of the dual Rabin partition.
 */
SolveResult solve_streett_via_duality(const Arena& a, const WinningCondition& cond,
                                      Algorithm alg = Algorithm::alg2,
                                      int vertex_cap = kMaxVertices);

}  // namespace rg
