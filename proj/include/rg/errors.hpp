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

#include <stdexcept>
#include <string>

namespace rg {

struct GameError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed JSON or a file that does not match the game schema.
struct ParseError : GameError {
    using GameError::GameError;
};

/// An arena or condition invariant is broken (names the offending vertex).
struct ValidationError : GameError {
    using GameError::GameError;
};

struct UnknownLabel : GameError {
    using GameError::GameError;
};

/// n exceeds the configured vertex cap: 3^n work is declared infeasible.
struct CapExceeded : GameError {
    using GameError::GameError;
};

/// The LAR oracle only scales to n <= 6.
struct OracleScaleExceeded : GameError {
    using GameError::GameError;
};

struct DomainError : GameError {
    using GameError::GameError;
};

struct UnsupportedConversion : GameError {
    using GameError::GameError;
};

struct InfeasibleSpec : GameError {
    using GameError::GameError;
};

}  // namespace rg
