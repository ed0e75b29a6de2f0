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

#include "rg/arena.hpp"

#include <array>

namespace rg {

Arena make_arena(int n, vset owner0, std::vector<vset> succ,
                 std::vector<std::string> names) {
    Arena a;
    a.n = n;
    a.full = full_mask(n);
    a.owner0 = owner0 & a.full;
    a.owner1 = a.full & ~a.owner0;
    a.succ = std::move(succ);
    a.succ.resize(n, 0);
    a.pred.assign(n, 0);
    for (int v = 0; v < n; ++v) {
        a.succ[v] &= a.full;
        for (vset s = a.succ[v]; s; s &= s - 1)
            a.pred[first_vertex(s)] |= bit(v);
    }
    if (names.empty()) {
        for (int v = 0; v < n; ++v) names.push_back("v" + std::to_string(v + 1));
    }
    a.names = std::move(names);
    return a;
}

std::string ValidationIssue::message(const Arena& a) const {
    auto name = [&](int i) {
        return (i >= 0 && i < (int)a.names.size()) ? a.names[i] : std::to_string(i);
    };
    switch (kind) {
        case missing_out_edge:
            return "vertex " + name(v) + " has no outgoing edge";
        case not_bipartite:
            return "edge " + name(v) + " -> " + name(u) + " stays on one side";
        case ownership_overlap:
            return "vertex " + name(v) + " owned by both players";
        case ownership_gap:
            return "vertex " + name(v) + " owned by neither player";
    }
    return "invalid arena";
}

std::optional<ValidationIssue> validate(const Arena& a) {
    for (int v = 0; v < a.n; ++v) {
        bool in0 = contains_vertex(a.owner0, v);
        bool in1 = contains_vertex(a.owner1, v);
        if (in0 && in1)
            return ValidationIssue{ValidationIssue::ownership_overlap, v, -1};
        if (!in0 && !in1)
            return ValidationIssue{ValidationIssue::ownership_gap, v, -1};
    }
    for (int v = 0; v < a.n; ++v) {
        vset same_side = a.owner(a.owner_of(v));
        if (vset bad = a.succ[v] & same_side; bad)
            return ValidationIssue{ValidationIssue::not_bipartite, v, first_vertex(bad)};
        if (a.succ[v] == 0)
            return ValidationIssue{ValidationIssue::missing_out_edge, v, -1};
    }
    return std::nullopt;
}

bool is_subarena(const Arena& a, vset x) {
    if (x == 0) return false;
    for (vset s = x; s; s &= s - 1) {
        if ((a.succ[first_vertex(s)] & x) == 0) return false;
    }
    return true;
}

bool is_trap_in(const Arena& a, vset context, vset x, Player sigma) {
    vset own_sigma = a.owner(sigma);
    for (vset s = x; s; s &= s - 1) {
        int v = first_vertex(s);
        if (contains_vertex(own_sigma, v)) {
            if (a.succ[v] & context & ~x) return false;
        } else {
            if ((a.succ[v] & x) == 0) return false;
        }
    }
    return true;
}

vset attractor(const Arena& a, vset context, vset target, Player sigma) {
    vset attr = target & context;
    vset own_sigma = a.owner(sigma);

    // Remaining context-successors not yet known to reach the attractor,
    // for opponent vertices. Starts at the full in-context out-degree;
    // every edge into a processed vertex decrements exactly once.
    std::array<std::uint8_t, kMaxVertices> remaining{};
    for (vset s = context & ~own_sigma; s; s &= s - 1) {
        int v = first_vertex(s);
        remaining[v] = (std::uint8_t)popcount(a.succ[v] & context);
    }

    std::array<std::uint8_t, kMaxVertices> stack;
    int top = 0;
    for (vset s = attr; s; s &= s - 1) stack[top++] = (std::uint8_t)first_vertex(s);

    while (top > 0) {
        int v = stack[--top];
        for (vset p = a.pred[v] & context & ~attr; p; p &= p - 1) {
            int u = first_vertex(p);
            bool pulled;
            if (contains_vertex(own_sigma, u)) {
                pulled = true;
            } else {
                pulled = (--remaining[u] == 0);
            }
            if (pulled) {
                attr |= bit(u);
                stack[top++] = (std::uint8_t)u;
            }
        }
    }
    return attr;
}

}  // namespace rg
