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
#include <filesystem>
#include <string>

#include <json.hpp>

#include "rg/arena.hpp"
#include "rg/condition.hpp"

namespace rg {

/**
 * An arena plus its winning condition. Vertex labels are sorted
 * lexicographically and assigned indices 1..n before bit-encoding, so the
 * mask layout is a pure function of the label set.
 */
struct Game {
    Arena arena;
    WinningCondition cond;
    std::vector<std::string> colour_names;  // coloured games only, sorted
};

/// Parses and validates a game from the JSON schema. Throws ParseError,
/// ValidationError or UnknownLabel.
Game parse_game(const nlohmann::json& j);

Game load_game(const std::filesystem::path& path);

/// Canonical JSON form: sorted labels everywhere, 2-space indent, trailing
/// newline. save(load(f)) is byte-stable.
nlohmann::json game_to_json(const Game& g);

void save_game(const std::filesystem::path& path, const Game& g);

std::string canonical_dump(const nlohmann::json& j);

/// Sorted labels for a vertex mask.
std::vector<std::string> mask_labels(const Arena& a, vset x);

struct GenSpec {
    std::uint64_t seed = 0;
    int n = 4;
    std::string kind = "muller";
    double edge_density = 0.5;   // probability of each optional cross edge
    double owner_split = 0.5;    // fraction of vertices given to Player 0
    int param = -1;              // |Omega|, k or t; negative = pick per kind
    int colour_count = 3;
};

/**
 * Deterministic random game: the same spec always produces the same bytes.
 * Every generated arena passes validation (one guaranteed cross edge per
 * vertex, extras per edge_density).
 */
nlohmann::json random_game(const GenSpec& spec);

}  // namespace rg
