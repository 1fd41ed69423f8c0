// Command-line workbench: curve oracles, wall enumeration, stability
// verdicts, the reference example constructions, the overview grid, the
// degree-case feasibility checker, and batch sweeps.
//
// Exit codes: 0 = determined result; 3 = some verdict is Undetermined;
// 2 = input error (bad flags, malformed files, violated preconditions).

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cohsys/butler.hpp"
#include "cohsys/constructions.hpp"
#include "cohsys/curve_oracle.hpp"
#include "cohsys/profile_engine.hpp"
#include "cohsys/profile_json.hpp"
#include "cohsys/render.hpp"
#include "cohsys/stability_core.hpp"
#include "cohsys/verdict_triple.hpp"

namespace {

using namespace cohsys;

Format parse_format(const std::string& s) {
    if (s == "table") return Format::Table;
    if (s == "json") return Format::Json;
    if (s == "csv") return Format::Csv;
    throw ParseError("unknown format: " + s);
}

Rat parse_rat(const std::string& s) {
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(std::stoll(s));
        return Rat(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    } catch (const std::exception&) {
        throw ParseError("cannot parse rational: " + s);
    }
}

SystemType parse_system(const std::string& s) {
    std::istringstream in(s);
    long long r = 0, d = 0, n = 0;
    char c1 = 0, c2 = 0;
    if (!(in >> r >> c1 >> d >> c2 >> n) || c1 != ',' || c2 != ',' || !in.eof())
        throw ParseError("expected --system R,D,N, got: " + s);
    return SystemType{static_cast<int>(r), d, static_cast<int>(n), false};
}

std::map<std::string, int> parse_genus_map(const std::string& s) {
    std::map<std::string, int> out;
    std::istringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos)
            throw ParseError("expected NAME=G entries in --genus-map, got: " + item);
        try {
            out[item.substr(0, eq)] = std::stoi(item.substr(eq + 1));
        } catch (const std::exception&) {
            throw ParseError("bad genus in --genus-map entry: " + item);
        }
    }
    return out;
}

CandidateCaps caps_from_file(const std::string& path, const SystemType& sys) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open caps file: " + path);
    OrderedJson j;
    try {
        j = OrderedJson::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(e.what());
    }
    if (!j.is_object() || !j.contains("ranks") || !j["ranks"].is_array())
        throw SchemaError("caps file needs a \"ranks\" array");
    CandidateCaps caps;
    for (const auto& v : j["ranks"]) {
        for (auto it = v.begin(); it != v.end(); ++it)
            if (it.key() != "rank" && it.key() != "minDegree" &&
                it.key() != "maxDegree" && it.key() != "maxSections")
                throw SchemaError("unknown key \"" + it.key() + "\" in caps entry");
        RankCaps rc;
        rc.min_degree = v.value("minDegree", 0LL);
        rc.max_degree = v.at("maxDegree").get<long long>();
        const int max_n = v.at("maxSections").get<int>();
        rc.max_sections = [max_n](long long) { return max_n; };
        caps.by_rank.emplace(v.at("rank").get<int>(), std::move(rc));
    }
    (void)sys;
    return caps;
}

CandidateCaps default_caps(const CurveModel& curve, const SystemType& sys) {
    CandidateCaps caps;
    for (int rank = 1; rank <= sys.rank; ++rank) {
        RankCaps rc;
        rc.min_degree = std::min<long long>(0, sys.degree);
        rc.max_degree = sys.degree;
        if (rank == 1) {
            rc.max_sections = [curve, n = sys.sections](long long d) {
                return std::min(n, max_line_sections(curve, d));
            };
        } else {
            rc.max_sections = [n = sys.sections](long long) { return n; };
        }
        caps.by_rank.emplace(rank, std::move(rc));
    }
    return caps;
}

int contains_undetermined(const std::vector<Verdict>& vs) {
    for (const auto& v : vs)
        if (v.outcome == Outcome::Undetermined) return 3;
    return 0;
}

struct Options {
    std::string format = "table";
    std::string config;
};

std::map<std::string, int> config_genus_map(const std::string& path) {
    if (path.empty()) return {};
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open config file: " + path);
    OrderedJson j;
    try {
        j = OrderedJson::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(e.what());
    }
    std::map<std::string, int> out;
    if (j.contains("genusMap"))
        for (auto it = j["genusMap"].begin(); it != j["genusMap"].end(); ++it)
            out[it.key()] = it.value().get<int>();
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic stability workbench for coherent systems on curves"};
    app.require_subcommand(1);
    app.fallthrough(); // allow --format/--config after the subcommand too

    Options opt;
    app.add_option("--format", opt.format, "output format: table, json, csv")
        ->check(CLI::IsMember({"table", "json", "csv"}));
    app.add_option("--config", opt.config, "config file with default genera");

    // oracle
    auto* oracle = app.add_subcommand("oracle", "curve-level arithmetic oracles");
    std::string oracle_kind;
    int o_genus = 0, o_k = 1, o_rank = 1;
    long long o_d = 0, o_e = 0, o_f = 0, o_sections = 0;
    oracle->add_option("kind", oracle_kind, "dk, beta, clifford, or secant")
        ->required()
        ->check(CLI::IsMember({"dk", "beta", "clifford", "secant"}));
    oracle->add_option("--genus", o_genus, "genus of the (general) curve");
    oracle->add_option("--k", o_k, "gonality / family index");
    oracle->add_option("--d", o_d, "degree");
    oracle->add_option("--rank", o_rank, "rank");
    oracle->add_option("--e", o_e, "secant divisor degree");
    oracle->add_option("--f", o_f, "failed conditions");
    oracle->add_option("--sections", o_sections, "ambient section count");

    // walls
    auto* walls = app.add_subcommand("walls", "enumerate positive critical values");
    std::string w_system, w_caps_file;
    int w_genus = 0;
    bool w_default_caps = false;
    walls->add_option("--system", w_system, "system type R,D,N")->required();
    walls->add_option("--genus", w_genus, "genus (for default caps)");
    walls->add_option("--caps", w_caps_file, "caps file (JSON)");
    walls->add_flag("--default-caps", w_default_caps, "derive caps from the curve oracle");

    // verdict
    auto* verdict = app.add_subcommand("verdict", "stability verdicts for a profile");
    std::string v_profile, v_alpha;
    verdict->add_option("--profile", v_profile, "profile file (JSON)")->required();
    verdict->add_option("--alpha", v_alpha, "evaluate at a single alpha (NUM/DEN)");

    // example
    auto* example = app.add_subcommand("example", "run a reference construction");
    std::string e_name;
    int e_genus = -1;
    example->add_option("name", e_name, "pattern name, e.g. YYY")->required();
    example->add_option("--genus", e_genus, "genus (defaults per construction)");

    // overview
    auto* overview = app.add_subcommand("overview", "the stability-pattern grid");
    std::string ov_map;
    overview->add_option("--genus-map", ov_map, "overrides, e.g. YYN=5,YYY=30");

    // butler
    auto* butler = app.add_subcommand("butler", "degree-case feasibility checker");
    int b_genus = 0;
    std::string b_case;
    bool b_proof_mode = false;
    butler->add_option("--genus", b_genus, "genus")->required();
    butler->add_option("--case", b_case, "degree case: a or b")
        ->required()
        ->check(CLI::IsMember({"a", "b"}));
    butler->add_flag("--proof-mode", b_proof_mode,
                     "use the weaker congruence g != 0 mod 3 for case a");

    // atlas
    auto* atlas = app.add_subcommand("atlas", "batch feasibility sweep to a file");
    std::string a_range, a_out;
    atlas->add_option("--genus-range", a_range, "inclusive range A..B")->required();
    atlas->add_option("--out", a_out, "output file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return 2;
    }

    try {
        const Format fmt = parse_format(opt.format);
        const auto config_map = config_genus_map(opt.config);

        if (*oracle) {
            if (oracle_kind == "secant") {
                const SecantDatum s =
                    secant_expected_dim(o_e, o_f, o_rank, o_sections);
                std::cout << render_value("secant expected dimension",
                                          Rat(s.expected_dim), fmt);
                return 0;
            }
            const CurveModel curve{o_genus, true};
            if (oracle_kind == "dk")
                std::cout << render_value("d_" + std::to_string(o_k),
                                          Rat(gonality(curve, o_k)), fmt);
            else if (oracle_kind == "beta")
                std::cout << render_value("expected dimension",
                                          Rat(bn_number(curve, o_k, o_d)), fmt);
            else
                std::cout << render_value("clifford index",
                                          Rat(clifford_index(curve, o_rank)), fmt);
            return 0;
        }

        if (*walls) {
            const SystemType sys = parse_system(w_system);
            CandidateCaps caps;
            if (!w_caps_file.empty()) {
                caps = caps_from_file(w_caps_file, sys);
            } else if (w_default_caps) {
                if (w_genus < 2)
                    throw ParseError("--default-caps needs --genus");
                caps = default_caps(CurveModel{w_genus, true}, sys);
            } else {
                throw ParseError("walls needs --caps FILE or --default-caps");
            }
            std::cout << render_walls(critical_alphas(sys, caps), fmt);
            return 0;
        }

        if (*verdict) {
            const SystemProfile p = parse_profile(v_profile);
            std::vector<Verdict> out;
            if (!v_alpha.empty()) {
                out.push_back(verdict_at_alpha(p, parse_rat(v_alpha)));
            } else {
                try {
                    const TriVerdict t = triple_verdict(p);
                    out = {t.alpha_small, t.alpha_large, t.linear};
                } catch (const NotGenerated&) {
                    out = {verdict_alpha_small(p), verdict_alpha_large(p)};
                } catch (const NonPositiveDegree&) {
                    out = {verdict_alpha_small(p), verdict_alpha_large(p)};
                }
            }
            std::cout << render_verdicts(out, fmt);
            return contains_undetermined(out);
        }

        if (*example) {
            int g = e_genus;
            if (g < 0) {
                auto defaults = default_genus_map();
                for (const auto& [k, v] : config_map) defaults[k] = v;
                if (!defaults.count(e_name))
                    throw ParseError("unknown example name: " + e_name);
                g = defaults.at(e_name);
            }
            const ExampleReport rep = example_profile(e_name, g);
            std::cout << render_example(rep, fmt);
            return contains_undetermined({rep.computed.alpha_small,
                                          rep.computed.alpha_large,
                                          rep.computed.linear});
        }

        if (*overview) {
            auto overrides = config_map;
            for (const auto& [k, v] : parse_genus_map(ov_map)) overrides[k] = v;
            const OverviewTable t = overview_table(overrides);
            std::cout << render_overview(t, fmt);
            for (const auto& row : t.rows)
                if (row.grid.find('?') != std::string::npos) return 3;
            return 0;
        }

        if (*butler) {
            const ButlerFeasibility r = degree_case_conditions(
                b_genus, b_case == "a" ? ButlerCase::A : ButlerCase::B, !b_proof_mode);
            std::cout << render_feasibility(r, fmt);
            return 0;
        }

        if (*atlas) {
            const auto dots = a_range.find("..");
            if (dots == std::string::npos)
                throw ParseError("expected --genus-range A..B, got: " + a_range);
            int lo = 0, hi = 0;
            try {
                lo = std::stoi(a_range.substr(0, dots));
                hi = std::stoi(a_range.substr(dots + 2));
            } catch (const std::exception&) {
                throw ParseError("bad endpoints in --genus-range: " + a_range);
            }
            const auto rows = butler_sweep(lo, hi);
            std::ofstream out(a_out, std::ios::binary);
            if (!out) throw ParseError("cannot open output file: " + a_out);
            out << render_sweep(rows, fmt);
            std::cout << "wrote " << rows.size() << " rows to " << a_out << "\n";
            return 0;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
