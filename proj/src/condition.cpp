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

#include "rg/condition.hpp"

#include <cmath>

#include "rg/errors.hpp"

namespace rg {

std::string to_string(ConditionKind k) {
    switch (k) {
        case ConditionKind::muller: return "muller";
        case ConditionKind::mcnaughton: return "mcnaughton";
        case ConditionKind::coloured_muller: return "coloured";
        case ConditionKind::kl: return "kl";
        case ConditionKind::rabin: return "rabin";
        case ConditionKind::streett: return "streett";
    }
    return "?";
}

ConditionKind condition_kind_from_string(const std::string& s) {
    if (s == "muller") return ConditionKind::muller;
    if (s == "mcnaughton") return ConditionKind::mcnaughton;
    if (s == "coloured") return ConditionKind::coloured_muller;
    if (s == "kl") return ConditionKind::kl;
    if (s == "rabin") return ConditionKind::rabin;
    if (s == "streett") return ConditionKind::streett;
    throw ParseError("unknown game type: " + s);
}

WinningCondition make_muller(SubsetFamily omega) {
    WinningCondition c;
    c.kind = ConditionKind::muller;
    c.omega = std::move(omega);
    return c;
}

WinningCondition make_mcnaughton(vset watched, SubsetFamily omega) {
    WinningCondition c;
    c.kind = ConditionKind::mcnaughton;
    c.watched = watched;
    c.omega = std::move(omega);
    return c;
}

WinningCondition make_coloured(std::vector<int> colour, int colour_count,
                               SubsetFamily omega) {
    WinningCondition c;
    c.kind = ConditionKind::coloured_muller;
    c.colour = std::move(colour);
    c.colour_count = colour_count;
    c.omega = std::move(omega);
    return c;
}

WinningCondition make_kl(std::vector<KlPair> pairs) {
    WinningCondition c;
    c.kind = ConditionKind::kl;
    c.kl_pairs = std::move(pairs);
    return c;
}

WinningCondition make_rabin(std::vector<RabinPair> pairs) {
    WinningCondition c;
    c.kind = ConditionKind::rabin;
    c.pairs = std::move(pairs);
    return c;
}

WinningCondition make_streett(std::vector<RabinPair> pairs) {
    WinningCondition c;
    c.kind = ConditionKind::streett;
    c.pairs = std::move(pairs);
    return c;
}

bool player0_accepts(const WinningCondition& cond, vset x) {
    switch (cond.kind) {
        case ConditionKind::muller:
            return cond.omega.contains(x);
        case ConditionKind::mcnaughton:
            return cond.omega.contains(x & cond.watched);
        case ConditionKind::coloured_muller:
            return cond.omega.contains(cond.colours_of(x));
        case ConditionKind::kl:
            for (const auto& p : cond.kl_pairs) {
                if (contains_vertex(x, p.anchor) && (x & ~p.cover) == 0) return true;
            }
            return false;
        case ConditionKind::rabin:
            for (const auto& p : cond.pairs) {
                if ((x & p.hit) != 0 && (x & p.avoid) == 0) return true;
            }
            return false;
        case ConditionKind::streett:
            for (const auto& p : cond.pairs) {
                if ((x & p.hit) != 0 && (x & p.avoid) == 0) return false;
            }
            return true;
    }
    return false;
}

WinningCondition complement_muller(const WinningCondition& cond, int n) {
    SubsetFamily out(n);
    for (vset x = 1; x <= full_mask(n); ++x) {
        if (!cond.omega.contains(x)) out.insert(x);
    }
    return make_muller(std::move(out));
}

double lambert_w(double z) {
    if (!(z > 0.0)) throw DomainError("lambert_w requires z > 0");
    double w = std::log1p(z);
    for (int it = 0; it < 100; ++it) {
        double ew = std::exp(w);
        double f = w * ew - z;
        if (std::abs(f) <= 1e-12 * std::max(1.0, z)) break;
        double step = f / (ew * (w + 1.0));
        // Damp so the iterate never leaves [0, inf).
        if (w - step < 0.0) step = w / 2.0;
        w -= step;
    }
    return w;
}

bool classify_large(std::uint64_t p, int n, double c) {
    if (!(c > 0.0)) throw DomainError("classify_large requires c > 0");
    double cn = c * n;
    return double(p) > cn / lambert_w(cn);
}

}  // namespace rg
