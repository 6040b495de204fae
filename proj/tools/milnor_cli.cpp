// Command-line front end: every computation of the library exposed as a
// subcommand with machine-readable output. JSON goes to stdout, progress
// to stderr; exit 0 only if all internal assertions passed, exit 1 on an
// assertion failure (with a JSON defect report), exit 2 on usage errors.

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "milnor/braid.hpp"
#include "milnor/cs_homology.hpp"
#include "milnor/fihat.hpp"
#include "milnor/getzler.hpp"
#include "milnor/milnor_fiber.hpp"
#include "milnor/stability.hpp"
#include "milnor/symfunc.hpp"

using json = nlohmann::ordered_json;
using namespace milnor;

namespace {

json char_table(const std::map<IntPartition, ZZ>& chi) {
    json out = json::object();
    for (const auto& [mu, v] : chi) out[mu.to_string()] = v.get_str();
    return out;
}

int run_betti(int n, const std::string& format) {
    GetzlerComplex c(n);
    std::vector<long long> betti;
    for (int d = 0; d <= n - 2; ++d) {
        auto [free, torsion] = c.homology(d);
        if (!torsion.empty()) {
            json defect{{"error", "unexpected torsion"}, {"degree", d}};
            std::cout << defect.dump() << "\n";
            return 1;
        }
        betti.push_back(free);
    }
    if (format == "tsv") {
        for (std::size_t d = 0; d < betti.size(); ++d)
            std::cout << d << '\t' << betti[d] << '\n';
    } else {
        json out;
        out["n"] = n;
        out["betti"] = betti;
        std::cout << out.dump() << "\n";
    }
    return 0;
}

int run_character(int n, int k, bool signed_variant) {
    json out;
    out["n"] = n;
    if (k >= 0) {
        SymFunc f = signed_variant ? ch_Ck_signed(n, k) : ch_Ck(n, k);
        out["k"] = k;
        out["ch"] = json::parse(f.to_json());
        out["char_values"] = char_table(char_values(f));
    } else {
        json per_degree = json::array();
        for (int d = 0; d <= n - 2; ++d) {
            SymFunc f = stable_char(n, d);
            per_degree.push_back({{"d", d},
                                  {"ch", json::parse(f.to_json())},
                                  {"dimension", dimension_of(f).get_str()}});
        }
        out["stable_characters"] = per_degree;
    }
    std::cout << out.dump() << "\n";
    return 0;
}

int run_complex(int n, const std::string& emit_dir) {
    GetzlerComplex c(n);
    json manifest;
    manifest["n"] = n;
    manifest["dims"] = c.dims();
    if (!emit_dir.empty()) {
        std::filesystem::create_directories(emit_dir);
        for (int k = 0; k + 1 < n; ++k) {
            std::ofstream os(std::filesystem::path(emit_dir) /
                             ("d" + std::to_string(k) + ".txt"));
            c.boundary(k).dump(os);
        }
        std::ofstream ms(std::filesystem::path(emit_dir) / "manifest.json");
        ms << manifest.dump() << "\n";
    }
    std::cout << manifest.dump() << "\n";
    return 0;
}

int run_verify(int n) {
    GetzlerComplex c(n);
    json report;
    report["n"] = n;
    bool ok = true;

    bool d2 = c.verify_d_squared();
    report["d_squared"] = d2;
    ok = ok && d2;

    ExactnessReport ex = c.verify_exactness();
    report["exact"] = ex.exact;
    report["dims"] = ex.dims;
    report["boundary_ranks"] = ex.boundary_ranks;
    if (!ex.defects.empty()) report["exactness_defects"] = ex.defects;
    ok = ok && ex.exact;

    bool equivariant = c.verify_equivariance();
    report["equivariant"] = equivariant;
    ok = ok && equivariant;

    bool torsion_free = true;
    for (int d = 0; d <= n - 2; ++d) {
        auto [free, torsion] = c.homology(d);
        torsion_free = torsion_free && torsion.empty();
        if (free != to_int64(stable_betti(n, d))) ok = false;
    }
    report["torsion_free"] = torsion_free;
    ok = ok && torsion_free;

    bool characters = true;
    for (int kk = 0; kk <= n - 1 && characters; ++kk)
        characters = c.character_brute(kk) == char_values(ch_Ck(n, kk));
    report["character_match"] = characters;
    ok = ok && characters;

    report["ok"] = ok;
    std::cout << report.dump() << "\n";
    return ok ? 0 : 1;
}

int run_homset(int n, int m) {
    json out;
    out["n"] = n;
    out["m"] = m;
    auto hs = hom_set(n, m);
    if (!hs) {
        out["infinite"] = true;
    } else {
        out["count"] = hs->size();
        json list = json::array();
        for (const auto& f : *hs) list.push_back(f.to_string());
        out["morphisms"] = list;
    }
    std::cout << out.dump() << "\n";
    return 0;
}

int run_compose(const std::string& f_lit, const std::string& g_lit) {
    FIhatMorphism f = FIhatMorphism::parse(f_lit);
    FIhatMorphism g = FIhatMorphism::parse(g_lit);
    FIhatMorphism c = fihat_compose(f, g);
    json out;
    out["f"] = f.to_string();
    out["g"] = g.to_string();
    out["composite"] = c.to_string();
    std::cout << out.dump() << "\n";
    return 0;
}

int run_braid(int strands, const std::string& word_text) {
    BraidWord w = BraidWord::parse(strands, word_text);
    ShatElement p = project_pn(w);
    json out;
    out["strands"] = strands;
    out["word"] = w.to_string();
    json perm = json::array();
    for (int i = 0; i < p.n; ++i) perm.push_back(p.perm(i) + 1);
    out["perm"] = perm;
    out["d"] = p.d;
    bool pure = p.perm.is_identity();
    out["pure"] = pure;
    if (pure) out["winding"] = winding(w);
    std::cout << out.dump() << "\n";
    return 0;
}

// Prints a TSV of (p, free rank, torsion); JSON on request.
int run_cs_homology(int induced_degree, const std::string& rep, int n, bool as_json) {
    SnRep v = rep == "sgn" ? sign_rep(induced_degree) : trivial_rep(induced_degree);
    FIModuleData m = induced_module({{induced_degree, v}}, std::max(n, induced_degree));
    auto h = cs_homology(m, n);
    if (as_json) {
        json rows = json::array();
        for (int p = -1; p <= n - 1; ++p) {
            json tor = json::array();
            for (const ZZ& d : h[p + 1].second) tor.push_back(d.get_str());
            rows.push_back({{"p", p}, {"free_rank", h[p + 1].first}, {"torsion", tor}});
        }
        json out{{"n", n}, {"induced_degree", induced_degree}, {"rep", rep}, {"homology", rows}};
        std::cout << out.dump() << "\n";
    } else {
        for (int p = -1; p <= n - 1; ++p) {
            std::cout << p << '\t' << h[p + 1].first << '\t';
            for (std::size_t t = 0; t < h[p + 1].second.size(); ++t) {
                if (t) std::cout << ',';
                std::cout << h[p + 1].second[t].get_str();
            }
            std::cout << '\n';
        }
    }
    return 0;
}

int run_ranges(int i) {
    std::cout << stability_report(i).to_json() << "\n";
    return 0;
}

int run_stabilize(int n, int samples, std::uint64_t seed, double tolerance,
                  const std::string& points_file) {
    if (!points_file.empty()) {
        std::ifstream is(points_file);
        if (!is) {
            std::cerr << "cannot open " << points_file << "\n";
            return 2;
        }
        json rows = json::array();
        std::string line;
        while (std::getline(is, line)) {
            if (line.empty()) continue;
            Config c;
            c.tolerance = tolerance;
            std::istringstream ls(line);
            std::string tok;
            while (std::getline(ls, tok, ',')) {
                // `re+imi` literals, e.g. 0.5+0.1i or -0.5-0.25i
                double re = 0, im = 0;
                std::size_t pos = 0;
                re = std::stod(tok, &pos);
                std::string rest = tok.substr(pos);
                if (!rest.empty()) {
                    if (rest.back() == 'i') rest.pop_back();
                    im = rest.empty() || rest == "+" ? 1.0 : (rest == "-" ? -1.0 : std::stod(rest));
                }
                c.points.push_back({re, im});
            }
            Config out = gadish_stabilize(c);
            json pts = json::array();
            for (Cx x : out.points) pts.push_back({{"re", x.real()}, {"im", x.imag()}});
            rows.push_back({{"defect", defect(out)}, {"points", pts}});
        }
        std::cout << json{{"configurations", rows}}.dump() << "\n";
        return 0;
    }
    StabilizeStats stats = stabilize_trials(n, samples, seed, tolerance);
    json out;
    out["n"] = stats.n;
    out["samples"] = stats.samples;
    out["seed"] = seed;
    out["max_defect"] = stats.max_defect;
    out["mean_defect"] = stats.mean_defect;
    out["rejected_draws"] = stats.rejected;
    std::cout << out.dump() << "\n";
    return stats.max_defect < 1e-9 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact and numerical computations for the stable homology of Conf_n(C)/C*"};
    app.require_subcommand(1);

    std::string format = "json";
    CLI::Option* format_opt =
        app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "tsv"}));

    int n = 4, k = -1, i = 1, m = 6;
    std::string emit_dir, f_lit, g_lit, word, rep = "trivial", points_file;
    int strands = 3, induced_degree = 0, samples = 1000;
    std::uint64_t seed = 0;
    double tolerance = 1e-9;
    bool signed_variant = false;

    auto* betti = app.add_subcommand("betti", "stable Betti numbers of Conf_n(C)/C*");
    betti->add_option("n", n, "number of points")->required()->check(CLI::Range(2, 8));

    auto* character = app.add_subcommand("character", "chain and stable characters");
    character->add_option("n", n)->required()->check(CLI::Range(1, 10));
    character->add_option("--k", k, "chain degree (omit for stable characters)");
    character->add_flag("--signed", signed_variant,
                        "use the orientation-signed chain variant");

    auto* complex_cmd = app.add_subcommand("complex", "build the set-partition chain complex");
    complex_cmd->add_option("n", n)->required()->check(CLI::Range(1, 8));
    complex_cmd->add_option("--emit-matrices", emit_dir, "write boundary matrix dumps to DIR");

    auto* verify = app.add_subcommand("verify", "d^2 = 0, exactness, equivariance, torsion, characters");
    verify->add_option("n", n)->required()->check(CLI::Range(2, 8));

    auto* homset = app.add_subcommand("homset", "enumerate FI-hat(n, m)");
    homset->add_option("n", n)->required();
    homset->add_option("m", m)->required();

    auto* compose = app.add_subcommand("compose", "compose two FI-hat morphisms");
    compose->add_option("f", f_lit, "first morphism, e.g. '1->3: [2 ; 0]'")->required();
    compose->add_option("g", g_lit, "second morphism")->required();

    auto* braid = app.add_subcommand("braid", "project a braid word to S-hat_n");
    braid->add_option("--n", strands, "strand count")->required();
    braid->add_option("word", word, "word such as 's1 s2^-1 s1'")->required();

    auto* cs = app.add_subcommand("cs-homology", "central stability homology of an induced module");
    cs->add_option("--induced-degree", induced_degree)->required()->check(CLI::Range(0, 4));
    cs->add_option("--rep", rep)->check(CLI::IsMember({"trivial", "sgn"}));
    cs->add_option("--n", n)->required()->check(CLI::Range(0, 7));

    auto* ranges = app.add_subcommand("ranges", "closed-form stability bounds");
    ranges->add_option("i", i, "homological degree")->required()->check(CLI::Range(0, 1000000));

    auto* stabilize = app.add_subcommand("stabilize", "Monte Carlo check of the stabilization map");
    stabilize->add_option("--n", n)->check(CLI::Range(2, 12));
    stabilize->add_option("--samples", samples);
    stabilize->add_option("--seed", seed);
    stabilize->add_option("--tolerance", tolerance);
    stabilize->add_option("--points", points_file, "read one configuration per line");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // help exits clean, usage errors exit 2
    }

    try {
        if (betti->parsed()) return run_betti(n, format);
        if (character->parsed()) return run_character(n, k, signed_variant);
        if (complex_cmd->parsed()) return run_complex(n, emit_dir);
        if (verify->parsed()) return run_verify(n);
        if (homset->parsed()) return run_homset(n, m);
        if (compose->parsed()) return run_compose(f_lit, g_lit);
        if (braid->parsed()) return run_braid(strands, word);
        if (cs->parsed())
            return run_cs_homology(induced_degree, rep, n,
                                   format_opt->count() > 0 && format == "json");
        if (ranges->parsed()) return run_ranges(i);
        if (stabilize->parsed()) return run_stabilize(n, samples, seed, tolerance, points_file);
    } catch (const std::exception& e) {
        json defect{{"error", e.what()}};
        std::cout << defect.dump() << "\n";
        return 1;
    }
    return 2;
}
