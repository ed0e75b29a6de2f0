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

#include "rg/gamefile.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "rg/errors.hpp"

namespace rg {

namespace {

using nlohmann::json;

std::map<std::string, int> label_index(const std::vector<std::string>& sorted) {
    std::map<std::string, int> idx;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (!idx.emplace(sorted[i], (int)i).second)
            throw ParseError("duplicate vertex label: " + sorted[i]);
    }
    return idx;
}

int resolve(const std::map<std::string, int>& idx, const std::string& label) {
    auto it = idx.find(label);
    if (it == idx.end()) throw UnknownLabel("unknown label: " + label);
    return it->second;
}

vset resolve_set(const std::map<std::string, int>& idx, const json& labels) {
    vset x = 0;
    for (const auto& l : labels) x |= bit(resolve(idx, l.get<std::string>()));
    return x;
}

const json& field(const json& j, const char* name) {
    auto it = j.find(name);
    if (it == j.end()) throw ParseError(std::string("missing field: ") + name);
    return *it;
}

/// Omega entries must be nonempty: the infinity set of a play never is.
SubsetFamily parse_omega(const std::map<std::string, int>& idx, const json& omega,
                         int width, vset universe) {
    SubsetFamily fam(width);
    for (const auto& entry : omega) {
        vset x = resolve_set(idx, entry);
        if (x == 0) throw ValidationError("empty set in omega");
        if (x & ~universe) throw ValidationError("omega member outside its universe");
        fam.insert(x);
    }
    return fam;
}

}  // namespace

Game parse_game(const json& j) {
    if (!j.is_object()) throw ParseError("game file must be a JSON object");
    ConditionKind kind = condition_kind_from_string(field(j, "type").get<std::string>());

    std::vector<std::string> labels;
    for (const auto& v : field(j, "vertices")) labels.push_back(v.get<std::string>());
    std::sort(labels.begin(), labels.end());
    auto idx = label_index(labels);

    int n = (int)labels.size();
    if (n > kMaxVertices) {
        throw CapExceeded("game has " + std::to_string(n) + " vertices, cap is " +
                          std::to_string(kMaxVertices));
    }

    vset owner0 = 0;
    const json& owner = field(j, "owner");
    for (const auto& l : labels) {
        auto it = owner.find(l);
        if (it == owner.end()) throw ParseError("owner missing for vertex " + l);
        int p = it->get<int>();
        if (p != 0 && p != 1) throw ParseError("owner must be 0 or 1");
        if (p == 0) owner0 |= bit(idx.at(l));
    }

    std::vector<vset> succ(n, 0);
    for (const auto& e : field(j, "edges")) {
        if (!e.is_array() || e.size() != 2) throw ParseError("edge must be a [from,to] pair");
        succ[resolve(idx, e[0].get<std::string>())] |=
            bit(resolve(idx, e[1].get<std::string>()));
    }

    Game g;
    g.arena = make_arena(n, owner0, std::move(succ), labels);
    if (auto issue = validate(g.arena)) {
        throw ValidationError(issue->message(g.arena));
    }

    switch (kind) {
        case ConditionKind::muller:
            g.cond = make_muller(parse_omega(idx, field(j, "omega"), n, g.arena.full));
            break;
        case ConditionKind::mcnaughton: {
            vset w = resolve_set(idx, field(j, "W"));
            g.cond = make_mcnaughton(w, parse_omega(idx, field(j, "omega"), n, w));
            break;
        }
        case ConditionKind::coloured_muller: {
            const json& colours = field(j, "colours");
            std::set<std::string> names;
            for (const auto& l : labels) {
                auto it = colours.find(l);
                if (it == colours.end()) throw ParseError("colour missing for vertex " + l);
                names.insert(it->get<std::string>());
            }
            g.colour_names.assign(names.begin(), names.end());
            int cc = (int)g.colour_names.size();
            if (cc > kMaxVertices)
                throw CapExceeded("too many colours: " + std::to_string(cc));
            auto cidx = label_index(g.colour_names);
            std::vector<int> colour(n);
            for (const auto& l : labels)
                colour[idx.at(l)] = cidx.at(colours.at(l).get<std::string>());
            SubsetFamily omega(cc);
            for (const auto& entry : field(j, "omega")) {
                vset x = 0;
                for (const auto& cname : entry) {
                    auto it = cidx.find(cname.get<std::string>());
                    if (it == cidx.end())
                        throw UnknownLabel("unknown colour: " + cname.get<std::string>());
                    x |= bit(it->second);
                }
                if (x == 0) throw ValidationError("empty set in omega");
                omega.insert(x);
            }
            g.cond = make_coloured(std::move(colour), cc, std::move(omega));
            break;
        }
        case ConditionKind::kl: {
            std::vector<KlPair> pairs;
            for (const auto& p : field(j, "pairs")) {
                pairs.push_back({resolve(idx, field(p, "u").get<std::string>()),
                                 resolve_set(idx, field(p, "S"))});
            }
            g.cond = make_kl(std::move(pairs));
            break;
        }
        case ConditionKind::rabin:
        case ConditionKind::streett: {
            std::vector<RabinPair> pairs;
            for (const auto& p : field(j, "pairs")) {
                pairs.push_back({resolve_set(idx, field(p, "U")),
                                 resolve_set(idx, field(p, "V"))});
            }
            g.cond = kind == ConditionKind::rabin ? make_rabin(std::move(pairs))
                                                  : make_streett(std::move(pairs));
            break;
        }
    }
    return g;
}

Game load_game(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path.string());
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
    return parse_game(j);
}

std::vector<std::string> mask_labels(const Arena& a, vset x) {
    std::vector<std::string> out;
    for (vset s = x; s; s &= s - 1) out.push_back(a.names[first_vertex(s)]);
    return out;
}

json game_to_json(const Game& g) {
    const Arena& a = g.arena;
    json j;
    j["type"] = to_string(g.cond.kind);
    j["vertices"] = a.names;
    json owner = json::object();
    for (int v = 0; v < a.n; ++v) owner[a.names[v]] = (int)index(a.owner_of(v));
    j["owner"] = owner;
    json edges = json::array();
    for (int v = 0; v < a.n; ++v) {
        for (vset s = a.succ[v]; s; s &= s - 1)
            edges.push_back(json::array({a.names[v], a.names[first_vertex(s)]}));
    }
    j["edges"] = edges;

    auto omega_labels = [&](const SubsetFamily& fam,
                            const std::vector<std::string>& names) {
        json out = json::array();
        fam.traverse([&](vset x) {
            json entry = json::array();
            for (vset s = x; s; s &= s - 1) entry.push_back(names[first_vertex(s)]);
            out.push_back(entry);
        });
        return out;
    };

    switch (g.cond.kind) {
        case ConditionKind::muller:
            j["omega"] = omega_labels(g.cond.omega, a.names);
            break;
        case ConditionKind::mcnaughton:
            j["W"] = mask_labels(a, g.cond.watched);
            j["omega"] = omega_labels(g.cond.omega, a.names);
            break;
        case ConditionKind::coloured_muller: {
            json colours = json::object();
            for (int v = 0; v < a.n; ++v)
                colours[a.names[v]] = g.colour_names[g.cond.colour[v]];
            j["colours"] = colours;
            j["omega"] = omega_labels(g.cond.omega, g.colour_names);
            break;
        }
        case ConditionKind::kl: {
            json pairs = json::array();
            for (const auto& p : g.cond.kl_pairs) {
                pairs.push_back({{"u", a.names[p.anchor]}, {"S", mask_labels(a, p.cover)}});
            }
            j["pairs"] = pairs;
            break;
        }
        case ConditionKind::rabin:
        case ConditionKind::streett: {
            json pairs = json::array();
            for (const auto& p : g.cond.pairs) {
                pairs.push_back({{"U", mask_labels(a, p.hit)}, {"V", mask_labels(a, p.avoid)}});
            }
            j["pairs"] = pairs;
            break;
        }
    }
    return j;
}

std::string canonical_dump(const json& j) { return j.dump(2) + "\n"; }

void save_game(const std::filesystem::path& path, const Game& g) {
    std::ofstream out(path);
    out << canonical_dump(game_to_json(g));
}

namespace {

/// splitmix64; self-contained so generated bytes are stable everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t below(std::uint64_t k) { return k ? next() % k : 0; }

    double unit() { return double(next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

vset random_nonempty(Rng& rng, vset universe) {
    // Rejection sampling over submasks of the universe.
    while (true) {
        vset x = vset(rng.next()) & universe;
        if (x) return x;
    }
}

SubsetFamily sample_family(Rng& rng, int width, vset universe, int wanted) {
    SubsetFamily fam(width);
    int limit = (int)std::min<std::uint64_t>(
        wanted, (std::uint64_t(1) << popcount(universe)) - 1);
    while ((int)fam.count() < limit) fam.insert(random_nonempty(rng, universe));
    return fam;
}

}  // namespace

json random_game(const GenSpec& spec) {
    if (spec.n < 2) throw InfeasibleSpec("need at least two vertices");
    if (spec.n > kMaxVertices) throw CapExceeded("n exceeds vertex cap");
    if (!(spec.edge_density > 0.0 && spec.edge_density <= 1.0))
        throw InfeasibleSpec("edge_density must be in (0,1]");
    int n = spec.n;
    int side0 = (int)std::lround(n * spec.owner_split);
    if (side0 < 1 || side0 > n - 1)
        throw InfeasibleSpec("owner_split leaves one side empty");

    Rng rng(spec.seed);

    // Fisher-Yates; the first side0 slots become Player 0 vertices.
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    for (int i = n - 1; i > 0; --i)
        std::swap(order[i], order[rng.below((std::uint64_t)i + 1)]);
    vset owner0 = 0;
    for (int i = 0; i < side0; ++i) owner0 |= bit(order[i]);

    std::vector<vset> succ(n, 0);
    for (int v = 0; v < n; ++v) {
        vset other = contains_vertex(owner0, v) ? full_mask(n) & ~owner0 : owner0;
        std::vector<int> targets;
        for (vset s = other; s; s &= s - 1) targets.push_back(first_vertex(s));
        succ[v] |= bit(targets[rng.below(targets.size())]);
        for (int t : targets) {
            if (!contains_vertex(succ[v], t) && rng.unit() < spec.edge_density)
                succ[v] |= bit(t);
        }
    }

    std::vector<std::string> labels(n);
    for (int v = 0; v < n; ++v) labels[v] = std::string(1, char('a' + v));

    Game g;
    g.arena = make_arena(n, owner0, std::move(succ), labels);

    ConditionKind kind = condition_kind_from_string(spec.kind);
    vset full = g.arena.full;
    int fam_param = spec.param >= 0 ? spec.param : 1 + (int)rng.below(8);
    int list_param = spec.param >= 0 ? spec.param : (int)rng.below(5);

    switch (kind) {
        case ConditionKind::muller:
            g.cond = make_muller(sample_family(rng, n, full, fam_param));
            break;
        case ConditionKind::mcnaughton: {
            vset w = random_nonempty(rng, full);
            g.cond = make_mcnaughton(w, sample_family(rng, n, w, fam_param));
            break;
        }
        case ConditionKind::coloured_muller: {
            int cc = std::clamp(spec.colour_count, 1, kMaxVertices);
            std::vector<int> colour(n);
            for (int v = 0; v < n; ++v) colour[v] = (int)rng.below((std::uint64_t)cc);
            // The colour universe is whatever the vertex map mentions, so
            // drop unused colours and renumber densely.
            std::vector<int> dense(cc, -1);
            int used = 0;
            for (int v = 0; v < n; ++v) {
                if (dense[colour[v]] < 0) dense[colour[v]] = used++;
            }
            for (int v = 0; v < n; ++v) colour[v] = dense[colour[v]];
            g.colour_names.resize(used);
            for (int c = 0; c < used; ++c) {
                g.colour_names[c] = "c" + std::string(c < 9 ? "0" : "") + std::to_string(c + 1);
            }
            g.cond = make_coloured(std::move(colour), used,
                                   sample_family(rng, used, full_mask(used), fam_param));
            break;
        }
        case ConditionKind::kl: {
            std::vector<KlPair> pairs;
            for (int i = 0; i < list_param; ++i) {
                int u = (int)rng.below((std::uint64_t)n);
                pairs.push_back({u, (vset(rng.next()) & full) | bit(u)});
            }
            g.cond = make_kl(std::move(pairs));
            break;
        }
        case ConditionKind::rabin:
        case ConditionKind::streett: {
            std::vector<RabinPair> pairs;
            for (int i = 0; i < list_param; ++i) {
                pairs.push_back({random_nonempty(rng, full), vset(rng.next()) & full});
            }
            g.cond = kind == ConditionKind::rabin ? make_rabin(std::move(pairs))
                                                  : make_streett(std::move(pairs));
            break;
        }
    }
    return game_to_json(g);
}

}  // namespace rg
