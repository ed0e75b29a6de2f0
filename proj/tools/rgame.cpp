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

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rg/errors.hpp"
#include "rg/gamefile.hpp"
#include "rg/oracle.hpp"
#include "rg/reductions.hpp"
#include "rg/solver.hpp"

using nlohmann::json;

namespace {

// Exit codes: 0 ok, 1 mismatch, 2 validation, 3 cap, 4 oracle scale.
constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitValidation = 2;
constexpr int kExitCap = 3;
constexpr int kExitOracleScale = 4;

int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const rg::CapExceeded*>(&e)) return kExitCap;
    if (dynamic_cast<const rg::OracleScaleExceeded*>(&e)) return kExitOracleScale;
    return kExitValidation;
}

std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

rg::SolveResult solve_game(const rg::Game& g, rg::Algorithm alg, int cap) {
    if (g.cond.kind == rg::ConditionKind::streett)
        return rg::solve_streett_via_duality(g.arena, g.cond, alg, cap);
    return rg::solve(g.arena, g.cond, alg, cap);
}

json solve_report(const rg::Game& g, const rg::SolveResult& r, bool with_tables) {
    json out;
    out["win0"] = rg::mask_labels(g.arena, r.win0);
    out["win1"] = rg::mask_labels(g.arena, r.win1);
    out["algorithm"] = rg::to_string(r.algorithm);
    out["stats"] = {{"pairs_enumerated", r.tables.pairs_enumerated},
                    {"elapsed_ms", r.elapsed_ms}};
    if (with_tables) {
        out["P"] = r.tables.p.keys();
        out["Q"] = r.tables.q.keys();
    }
    return out;
}

int cmd_solve(const std::string& file, const std::string& alg_name,
              const std::string& emit, bool with_tables, int cap) {
    rg::Game g = rg::load_game(file);
    rg::SolveResult r = solve_game(g, rg::algorithm_from_string(alg_name), cap);
    if (emit == "text") {
        auto line = [&](const char* tag, rg::vset x) {
            std::cout << tag;
            for (const auto& l : rg::mask_labels(g.arena, x)) std::cout << " " << l;
            std::cout << "\n";
        };
        line("win0:", r.win0);
        line("win1:", r.win1);
    } else {
        std::cout << solve_report(g, r, with_tables).dump() << "\n";
    }
    return kExitOk;
}

/// The game parameter p per kind: |Omega|, k or t.
std::uint64_t game_parameter(const rg::WinningCondition& c) {
    switch (c.kind) {
        case rg::ConditionKind::muller:
        case rg::ConditionKind::mcnaughton:
        case rg::ConditionKind::coloured_muller:
            return c.omega.count();
        case rg::ConditionKind::kl:
            return c.kl_pairs.size();
        case rg::ConditionKind::rabin:
        case rg::ConditionKind::streett:
            return c.pairs.size();
    }
    return 0;
}

bool three_way_agree(const rg::Game& g, std::string& detail) {
    auto r1 = rg::solve(g.arena, g.cond, rg::Algorithm::alg1);
    auto r2 = rg::solve(g.arena, g.cond, rg::Algorithm::alg2);
    auto [o0, o1] = rg::oracle_solve(g.arena, g.cond);
    if (r1.win0 != r2.win0) {
        detail = "alg1 and alg2 disagree";
        return false;
    }
    if (r1.win0 != o0 || r1.win1 != o1) {
        detail = "solver and oracle disagree";
        return false;
    }
    if (g.cond.kind == rg::ConditionKind::streett) {
        auto dual = rg::solve_streett_via_duality(g.arena, g.cond);
        if (dual.win0 != r1.win0) {
            detail = "duality path disagrees with direct solve";
            return false;
        }
    }
    return true;
}

int cmd_check_file(const std::string& file) {
    rg::Game g = rg::load_game(file);
    std::string detail;
    if (!three_way_agree(g, detail)) {
        std::cerr << "mismatch: " << detail << "\n";
        return kExitMismatch;
    }
    std::cout << "ok: alg1, alg2 and oracle agree\n";
    return kExitOk;
}

int cmd_check_fuzz(int count, int max_n, std::uint64_t seed, const std::string& kind,
                   const std::string& cex_path) {
    static const std::vector<std::string> kinds = {"muller", "mcnaughton", "coloured",
                                                   "kl",     "rabin",      "streett"};
    max_n = std::min(max_n, rg::kOracleMaxVertices);
    for (int i = 0; i < count; ++i) {
        std::uint64_t h = mix(seed * 0x9e3779b97f4a7c15ULL + (std::uint64_t)i);
        rg::GenSpec spec;
        spec.seed = h;
        spec.n = 2 + (int)(mix(h + 1) % (std::uint64_t)(max_n - 1));
        spec.kind = kind.empty() ? kinds[i % kinds.size()] : kind;
        // Dense arenas have many subarenas; sparse ones starve the solver.
        spec.edge_density = 0.35 + 0.6 * (double(mix(h + 2) >> 11) * 0x1.0p-53);
        json gj = rg::random_game(spec);
        rg::Game g = rg::parse_game(gj);
        std::string detail;
        if (!three_way_agree(g, detail)) {
            std::ofstream out(cex_path);
            out << rg::canonical_dump(gj);
            std::cerr << "mismatch on instance " << i << " (" << detail
                      << "), written to " << cex_path << "\n";
            return kExitMismatch;
        }
    }
    std::cout << "ok: " << count << " fuzz instances agree\n";
    return kExitOk;
}

int cmd_convert(const std::string& file, const std::string& to, const std::string& out_path) {
    rg::Game g = rg::load_game(file);
    rg::ReductionReport rep{};
    rg::Game out = g;
    int n = g.arena.n;

    if (to == "kl") {
        if (g.cond.kind != rg::ConditionKind::rabin) {
            throw rg::UnsupportedConversion("only rabin games convert to kl");
        }
        out.cond = rg::rabin_to_kl(g.cond, n, &rep);
    } else if (to == "muller") {
        switch (g.cond.kind) {
            case rg::ConditionKind::muller:
                throw rg::UnsupportedConversion("game is already a muller game");
            case rg::ConditionKind::kl:
                out.cond = rg::kl_to_muller(g.cond, n, rg::kMaxVertices, &rep);
                break;
            case rg::ConditionKind::rabin:
                out.cond = rg::kl_to_muller(rg::rabin_to_kl(g.cond, n), n,
                                            rg::kMaxVertices, &rep);
                rep.source = rg::ConditionKind::rabin;
                rep.pairs_in = g.cond.pairs.size();
                break;
            default:
                out.cond = rg::materialize_omega(g.cond, n, rg::kMaxVertices, &rep);
                break;
        }
    } else {
        throw rg::UnsupportedConversion("unsupported target: " + to);
    }
    out.colour_names.clear();
    rg::save_game(out_path, out);
    std::cerr << "convert " << rg::to_string(rep.source) << " -> " << rg::to_string(rep.target)
              << ": pairs_in=" << rep.pairs_in << " pairs_out=" << rep.pairs_out
              << " family_size=" << rep.family_size << " elapsed_ms=" << rep.elapsed_ms
              << "\n";
    return kExitOk;
}

int cmd_gen(const rg::GenSpec& spec, const std::string& out_path) {
    json j = rg::random_game(spec);
    if (out_path.empty() || out_path == "-") {
        std::cout << rg::canonical_dump(j);
    } else {
        std::ofstream out(out_path);
        out << rg::canonical_dump(j);
    }
    return kExitOk;
}

int cmd_bench(const std::string& range, int per_n, std::uint64_t seed,
              const std::string& kind, const std::string& alg_name, double density,
              int param) {
    auto dots = range.find("..");
    if (dots == std::string::npos) throw rg::ParseError("--n-range expects a..b");
    int lo = std::stoi(range.substr(0, dots));
    int hi = std::stoi(range.substr(dots + 2));
    if (lo < 2 || hi < lo) throw rg::ParseError("bad --n-range");

    std::vector<rg::Algorithm> algs;
    if (alg_name == "both") {
        algs = {rg::Algorithm::alg1, rg::Algorithm::alg2};
    } else {
        algs = {rg::algorithm_from_string(alg_name)};
    }

    std::cout << "n,kind,algorithm,seed,pairs_enumerated,elapsed_ms\n";
    std::map<int, double> mean_pairs;
    std::size_t large = 0, total = 0;
    for (int n = lo; n <= hi; ++n) {
        double sum_pairs = 0;
        for (int rep = 0; rep < per_n; ++rep) {
            rg::GenSpec spec;
            spec.seed = mix(seed + std::uint64_t(n) * 100003 + (std::uint64_t)rep);
            spec.n = n;
            spec.kind = kind;
            spec.edge_density = density;
            spec.param = param;
            rg::Game g = rg::parse_game(rg::random_game(spec));
            ++total;
            if (rg::classify_large(game_parameter(g.cond), n)) ++large;
            for (rg::Algorithm alg : algs) {
                rg::SolveResult r = solve_game(g, alg, rg::kMaxVertices);
                std::printf("%d,%s,%s,%llu,%llu,%.3f\n", n, kind.c_str(),
                            rg::to_string(alg).c_str(),
                            (unsigned long long)spec.seed,
                            (unsigned long long)r.tables.pairs_enumerated, r.elapsed_ms);
                if (alg == algs[0]) sum_pairs += (double)r.tables.pairs_enumerated;
            }
        }
        mean_pairs[n] = sum_pairs / per_n;
    }
    for (int n = lo + 1; n <= hi; ++n) {
        if (mean_pairs[n - 1] > 0) {
            std::fprintf(stderr, "growth ratio n=%d..%d: %.3f\n", n - 1, n,
                         mean_pairs[n] / mean_pairs[n - 1]);
        }
    }
    std::fprintf(stderr, "large games: %zu of %zu\n", large, total);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"regular game solver (muller, mcnaughton, coloured, kl, rabin, streett)"};
    app.require_subcommand(1);

    std::string file, alg_name = "alg2", emit = "json", to, out_path;
    bool with_tables = false;
    int cap = rg::kMaxVertices;

    auto* solve = app.add_subcommand("solve", "solve a game file");
    solve->add_option("file", file)->required();
    solve->add_option("--algorithm", alg_name)->check(CLI::IsMember({"alg1", "alg2"}));
    solve->add_option("--emit", emit)->check(CLI::IsMember({"json", "text"}));
    solve->add_flag("--with-tables", with_tables);
    solve->add_option("--cap", cap);

    int fuzz = 0, max_n = 6;
    std::uint64_t seed = 1;
    std::string kind, cex_path = "counterexample.json";
    auto* check = app.add_subcommand("check", "cross-check alg1, alg2 and the oracle");
    check->add_option("file", file);
    check->add_option("--fuzz", fuzz);
    check->add_option("--max-n", max_n)->check(CLI::Range(2, rg::kOracleMaxVertices));
    check->add_option("--seed", seed);
    check->add_option("--kind", kind);
    check->add_option("--counterexample", cex_path);

    auto* convert = app.add_subcommand("convert", "transform the winning condition");
    convert->add_option("file", file)->required();
    convert->add_option("--to", to)->required()->check(CLI::IsMember({"kl", "muller"}));
    convert->add_option("-o,--output", out_path)->required();

    rg::GenSpec spec;
    auto* gen = app.add_subcommand("gen", "generate a seeded random game");
    gen->add_option("--seed", spec.seed);
    gen->add_option("--n", spec.n);
    gen->add_option("--kind", spec.kind);
    gen->add_option("--density", spec.edge_density);
    gen->add_option("--split", spec.owner_split);
    gen->add_option("--param", spec.param);
    gen->add_option("--colours", spec.colour_count);
    gen->add_option("-o,--output", out_path);

    std::string range = "4..8", bench_alg = "alg2";
    int per_n = 10, param = -1;
    double density = 0.75;
    auto* bench = app.add_subcommand("bench", "measure pairs_enumerated growth");
    bench->add_option("--n-range", range);
    bench->add_option("--per-n", per_n);
    bench->add_option("--seed", seed);
    bench->add_option("--kind", kind)->required();
    bench->add_option("--algorithm", bench_alg)->check(CLI::IsMember({"alg1", "alg2", "both"}));
    bench->add_option("--density", density);
    bench->add_option("--param", param);

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed()) return cmd_solve(file, alg_name, emit, with_tables, cap);
        if (check->parsed()) {
            if (fuzz > 0) return cmd_check_fuzz(fuzz, max_n, seed, kind, cex_path);
            if (file.empty()) throw rg::ParseError("check needs a file or --fuzz");
            return cmd_check_file(file);
        }
        if (convert->parsed()) return cmd_convert(file, to, out_path);
        if (gen->parsed()) return cmd_gen(spec, out_path);
        if (bench->parsed())
            return cmd_bench(range, per_n, seed, kind, bench_alg, density, param);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    }
    return kExitOk;
}
