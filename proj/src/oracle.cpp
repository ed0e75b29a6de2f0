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

#include "rg/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "rg/errors.hpp"

namespace rg {

namespace {

using Perm = std::vector<int>;

std::uint32_t pack(const Perm& p) {
    std::uint32_t code = 0;
    for (std::size_t i = 0; i < p.size(); ++i) code |= std::uint32_t(p[i]) << (4 * i);
    return code;
}

}  // namespace

ParityGame lar_reduce(const Arena& a, const WinningCondition& cond,
                      bool tail_identity) {
    if (a.n > kOracleMaxVertices) {
        throw OracleScaleExceeded("oracle limited to n <= " +
                                  std::to_string(kOracleMaxVertices));
    }
    const int n = a.n;

    std::vector<Perm> perms;
    Perm ident(n);
    std::iota(ident.begin(), ident.end(), 0);
    Perm p = ident;
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));

    std::unordered_map<std::uint32_t, int> rank;
    rank.reserve(perms.size());
    for (std::size_t r = 0; r < perms.size(); ++r) rank[pack(perms[r])] = (int)r;

    // Position id = perm_rank * n + (h - 1).
    ParityGame pg;
    int total = (int)perms.size() * n;
    pg.owner.resize(total);
    pg.priority.resize(total);
    pg.succ.resize(total);
    pg.pred.resize(total);

    for (std::size_t r = 0; r < perms.size(); ++r) {
        const Perm& pi = perms[r];
        int v = pi[0];

        // Successor positions: rotate the chosen vertex to the front.
        std::vector<std::pair<int, int>> moves;  // (perm rank, h)
        for (vset s = a.succ[v]; s; s &= s - 1) {
            int u = first_vertex(s);
            Perm next(n);
            next[0] = u;
            int hit = 0;
            for (int k = 0, w = 1; k < n; ++k) {
                if (pi[k] == u) {
                    hit = k + 1;
                } else {
                    next[w++] = pi[k];
                }
            }
            moves.emplace_back(rank.at(pack(next)), hit);
        }

        vset prefix = 0;
        for (int h = 1; h <= n; ++h) {
            prefix |= bit(pi[h - 1]);
            int id = (int)r * n + (h - 1);
            pg.owner[id] = (int)index(a.owner_of(v));
            pg.priority[id] = player0_accepts(cond, prefix) ? 2 * h : 2 * h + 1;
            for (auto [tr, th] : moves) pg.succ[id].push_back(tr * n + (th - 1));
        }
    }
    for (int id = 0; id < total; ++id) {
        for (int t : pg.succ[id]) pg.pred[t].push_back(id);
    }

    // Initial LAR per start vertex: the vertex rotated to the front of the
    // identity (or reversed-identity) tail, hit = its identity index.
    pg.initial.resize(n);
    for (int v = 0; v < n; ++v) {
        Perm init;
        init.push_back(v);
        if (tail_identity) {
            for (int k = 0; k < n; ++k)
                if (k != v) init.push_back(k);
        } else {
            for (int k = n - 1; k >= 0; --k)
                if (k != v) init.push_back(k);
        }
        pg.initial[v] = rank.at(pack(init)) * n + v;
    }
    return pg;
}

namespace {

/// Attractor of player sigma to <target> within <region>.
std::vector<char> parity_attractor(const ParityGame& pg, const std::vector<char>& region,
                                   std::vector<char> target, int sigma) {
    std::vector<int> stack;
    std::vector<int> escapes(pg.size(), 0);
    for (int v = 0; v < pg.size(); ++v) {
        if (target[v]) stack.push_back(v);
        // Full in-region out-degree; each edge into a processed vertex
        // decrements exactly once, so zero means no escape remains.
        if (region[v] && pg.owner[v] != sigma) {
            for (int t : pg.succ[v])
                if (region[t]) ++escapes[v];
        }
    }
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : pg.pred[v]) {
            if (!region[u] || target[u]) continue;
            bool pulled = pg.owner[u] == sigma ? true : (--escapes[u] == 0);
            if (pulled) {
                target[u] = 1;
                stack.push_back(u);
            }
        }
    }
    return target;
}

void zielonka(const ParityGame& pg, std::vector<char> region, std::vector<char>& w0,
              std::vector<char>& w1) {
    int top = -1;
    for (int v = 0; v < pg.size(); ++v)
        if (region[v]) top = std::max(top, pg.priority[v]);
    if (top < 0) return;

    int sigma = top % 2;  // max-parity: even priorities favour Player 0
    std::vector<char>& mine = sigma == 0 ? w0 : w1;
    std::vector<char>& theirs = sigma == 0 ? w1 : w0;

    std::vector<char> head(pg.size(), 0);
    for (int v = 0; v < pg.size(); ++v)
        if (region[v] && pg.priority[v] == top) head[v] = 1;

    std::vector<char> attr = parity_attractor(pg, region, head, sigma);
    std::vector<char> rest(pg.size(), 0);
    for (int v = 0; v < pg.size(); ++v) rest[v] = region[v] && !attr[v];

    std::vector<char> sub0(pg.size(), 0), sub1(pg.size(), 0);
    zielonka(pg, rest, sub0, sub1);
    std::vector<char>& opp = sigma == 0 ? sub1 : sub0;

    bool opp_empty = std::find(opp.begin(), opp.end(), 1) == opp.end();
    if (opp_empty) {
        for (int v = 0; v < pg.size(); ++v)
            if (region[v]) mine[v] = 1;
        return;
    }

    std::vector<char> opp_attr = parity_attractor(pg, region, opp, 1 - sigma);
    for (int v = 0; v < pg.size(); ++v)
        if (opp_attr[v]) theirs[v] = 1;
    std::vector<char> remaining(pg.size(), 0);
    for (int v = 0; v < pg.size(); ++v) remaining[v] = region[v] && !opp_attr[v];
    zielonka(pg, std::move(remaining), w0, w1);
}

}  // namespace

std::pair<std::vector<int>, std::vector<int>> solve_parity(const ParityGame& pg) {
    std::vector<char> w0(pg.size(), 0), w1(pg.size(), 0);
    std::vector<char> all(pg.size(), 1);
    zielonka(pg, std::move(all), w0, w1);
    std::pair<std::vector<int>, std::vector<int>> out;
    for (int v = 0; v < pg.size(); ++v) {
        (w0[v] ? out.first : out.second).push_back(v);
    }
    return out;
}

std::pair<vset, vset> oracle_solve(const Arena& a, const WinningCondition& cond,
                                   bool tail_identity) {
    ParityGame pg = lar_reduce(a, cond, tail_identity);
    auto [w0, w1] = solve_parity(pg);
    std::vector<char> in0(pg.size(), 0);
    for (int v : w0) in0[v] = 1;
    vset win0 = 0;
    for (int v = 0; v < a.n; ++v) {
        if (in0[pg.initial[v]]) win0 |= bit(v);
    }
    return {win0, a.full & ~win0};
}

}  // namespace rg
