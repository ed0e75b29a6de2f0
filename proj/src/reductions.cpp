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

#include "rg/reductions.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>

#include "rg/errors.hpp"

namespace rg {

namespace {

class Timer {
public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    double ms() const {
        return std::chrono::duration<double, std::milli>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

void check_cap(int n, int vertex_cap) {
    if (vertex_cap > kMaxVertices) vertex_cap = kMaxVertices;
    if (n > vertex_cap) {
        throw CapExceeded("n = " + std::to_string(n) + " exceeds cap " +
                          std::to_string(vertex_cap));
    }
}

}  // namespace

WinningCondition rabin_to_kl(const WinningCondition& cond, int n,
                             ReductionReport* report) {
    assert(cond.kind == ConditionKind::rabin);
    Timer timer;
    vset all = full_mask(n);
    std::vector<KlPair> out;
    for (const auto& p : cond.pairs) {
        vset anchors = p.hit & ~p.avoid;  // Y_i
        vset cover = all & ~p.avoid;      // Z_i
        for (vset s = anchors; s; s &= s - 1) {
            out.push_back({first_vertex(s), cover});
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    if (report) {
        *report = {ConditionKind::rabin, ConditionKind::kl, cond.pairs.size(),
                   out.size(), 0, timer.ms()};
    }
    return make_kl(std::move(out));
}

WinningCondition kl_to_muller(const WinningCondition& cond, int n, int vertex_cap,
                              ReductionReport* report) {
    assert(cond.kind == ConditionKind::kl);
    check_cap(n, vertex_cap);
    Timer timer;
    SubsetFamily omega(n);
    for (const auto& p : cond.kl_pairs) {
        if (!contains_vertex(p.cover, p.anchor)) continue;
        vset anchor = bit(p.anchor);
        vset rest = p.cover & ~anchor;
        // All subsets of the cover that contain the anchor.
        vset t = rest;
        while (true) {
            omega.insert(anchor | t);
            if (t == 0) break;
            t = (t - 1) & rest;
        }
    }
    if (report) {
        *report = {ConditionKind::kl, ConditionKind::muller, cond.kl_pairs.size(),
                   0, omega.count(), timer.ms()};
    }
    return make_muller(std::move(omega));
}

WinningCondition materialize_omega(const WinningCondition& cond, int n,
                                   int vertex_cap, ReductionReport* report) {
    check_cap(n, vertex_cap);
    Timer timer;
    SubsetFamily omega(n);
    for (vset x = 1; x <= full_mask(n); ++x) {
        if (player0_accepts(cond, x)) omega.insert(x);
    }
    if (report) {
        *report = {cond.kind, ConditionKind::muller, 0, 0, omega.count(), timer.ms()};
    }
    return make_muller(std::move(omega));
}

SolveResult solve_streett_via_duality(const Arena& a, const WinningCondition& cond,
                                      Algorithm alg, int vertex_cap) {
    assert(cond.kind == ConditionKind::streett);
    // The opponent of the Streett player pursues the Rabin condition with
    // the same pairs, so hand that player the solver's seat: swap the
    // ownership sides, solve the Rabin game, and swap the regions back.
    Arena dual = make_arena(a.n, a.owner1, a.succ, a.names);
    SolveResult r = solve(dual, make_rabin(cond.pairs), alg, vertex_cap);
    std::swap(r.win0, r.win1);
    return r;
}

}  // namespace rg
