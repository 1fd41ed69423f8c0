// Acceptance gate: ten end-to-end criteria, one PASS/FAIL line each.
// Everything is exact integer/rational arithmetic; tolerances are zero.
//
// Usage: acceptance <path-to-cli-binary>
// (criteria 1 and 10 invoke the CLI; the rest use the library directly)

#include <array>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "cohsys/butler.hpp"
#include "cohsys/constructions.hpp"
#include "cohsys/curve_oracle.hpp"
#include "cohsys/profile_engine.hpp"
#include "cohsys/profile_json.hpp"
#include "cohsys/render.hpp"
#include "cohsys/stability_core.hpp"
#include "cohsys/verdict_triple.hpp"
#include "support.hpp"

using namespace cohsys;

namespace {

int failures = 0;

void report(int idx, const std::string& what, bool pass, const std::string& why = "") {
    std::cout << (pass ? "PASS" : "FAIL") << "  [" << idx << "] " << what;
    if (!pass && !why.empty()) std::cout << "  -- " << why;
    std::cout << "\n";
    if (!pass) ++failures;
}

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& cli, const std::string& args) {
    RunResult r;
    FILE* pipe = popen((cli + " " + args + " 2>/dev/null").c_str(), "r");
    if (!pipe) return r;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// [1] the overview grid from the CLI matches the in-process rendering of the
// seven patterns plus the impossible row, with exit code 0.
void criterion_overview(const std::string& cli) {
    const RunResult r = run_cli(cli, "overview --format table");
    const std::string expected = render_overview(overview_table(), Format::Table);
    bool pass = r.exit_code == 0 && r.out == expected;
    // the csv form carries the verdict grid as a single field per pattern
    const RunResult csv = run_cli(cli, "overview --format csv");
    const char* rows[] = {"N,N,N", "Y,Y,N", "Y,N,N", "N,Y,N", "N,N,Y", "N,Y,Y", "Y,Y,Y"};
    size_t at = 0;
    for (const char* row : rows) {
        at = csv.out.find(row, at);
        pass = pass && at != std::string::npos;
    }
    pass = pass && r.out.find("impossible") != std::string::npos &&
           r.out.find('?') == std::string::npos;
    report(1, "overview grid reproduces the seven patterns plus the impossible row",
           pass, "exit " + std::to_string(r.exit_code));
}

// [2] closed-form gonality equals the brute-force minimum over the
// expected-dimension formula.
void criterion_gonality() {
    bool pass = true;
    for (int g = 4; g <= 60 && pass; ++g)
        for (int k = 1; k <= 5 && pass; ++k) {
            long long scan = 0;
            while (bn_number(CurveModel{g, true}, k, scan) < 0) ++scan;
            pass = gonality(CurveModel{g, true}, k) == scan;
        }
    report(2, "gonality closed form equals brute-force scan for g in [4,60], k in [1,5]",
           pass);
}

// [3] lexicographic limit verdicts equal numeric slope comparison below the
// first / above the last wall, over 10,000 random pairs.
void criterion_limits() {
    std::mt19937 rng(271828);
    std::uniform_int_distribution<int> rank(1, 4);
    std::uniform_int_distribution<long long> deg(-50, 50);
    std::uniform_int_distribution<int> sec(0, 12);
    bool pass = true;
    for (int i = 0; i < 10000 && pass; ++i) {
        const SystemType sys{rank(rng), deg(rng), sec(rng), false};
        const SubsystemRecord sub{rank(rng), deg(rng), sec(rng), false};
        if (sub.rank > sys.rank || !is_proper(sub, sys)) continue;
        const auto w = wall_alpha(sys, sub);
        const Rat lo = w ? w->alpha / Rat(2) : Rat(1);
        const Rat hi = w ? w->alpha + Rat(1) : Rat(1);
        pass = lex_compare_small_alpha(sub, sys) == compare_at_alpha(sub, sys, lo) &&
               lex_compare_large_alpha(sub, sys) == compare_at_alpha(sub, sys, hi);
    }
    report(3, "limit-regime verdicts match numeric slopes on 10,000 random pairs", pass);
}

// [4] the net-extension profile at genus 12 has the single wall alpha = 1 and
// flips Stable -> StrictlySemistable -> Unstable across it.
void criterion_wall() {
    const SystemProfile p = example_profile("YNN", 12).profile;
    const auto walls = critical_alphas(p.sys, profile_caps(p));
    bool pass = walls.size() == 1 && walls[0].alpha == Rat(1);
    pass = pass && verdict_at_alpha(p, Rat(1, 2)).outcome == Outcome::Stable;
    pass = pass && verdict_at_alpha(p, Rat(1)).outcome == Outcome::StrictlySemistable;
    pass = pass && verdict_at_alpha(p, Rat(2)).outcome == Outcome::Unstable;
    report(4, "net-extension profile: unique wall at 1 with the exact verdict flips",
           pass);
}

// [5] the net criterion agrees with the direct large-alpha verdict on 1,000
// random (2, d, 5) profiles with determined net status.
void criterion_net_coherence() {
    std::mt19937 rng(161803);
    bool pass = true;
    for (int i = 0; i < 1000 && pass; ++i) {
        const SystemProfile p = testsupport::random_2d5_profile(rng);
        pass = verdict_2d5_large(p).outcome == verdict_alpha_large(p).outcome;
    }
    report(5, "net criterion equals the large-alpha verdict on 1,000 (2,d,5) profiles",
           pass);
}

// [6] the forbidden row (small-alpha stable, large-alpha not stable, linearly
// stable) never occurs: example profiles plus 1,000 random profiles.
void criterion_forbidden_row() {
    bool pass = true;
    int determined = 0;
    std::string why;
    auto check = [&](const SystemProfile& p) {
        try {
            const TriVerdict t = triple_verdict(p);
            const bool det = t.alpha_small.outcome != Outcome::Undetermined &&
                             t.alpha_large.outcome != Outcome::Undetermined &&
                             t.linear.outcome != Outcome::Undetermined;
            determined += det;
            if (det && t.alpha_small.outcome == Outcome::Stable &&
                t.linear.outcome == Outcome::Stable &&
                t.alpha_large.outcome != Outcome::Stable) {
                pass = false;
                why = "forbidden row produced";
            }
        } catch (const ForbiddenRow& e) {
            pass = false;
            why = e.what();
        }
    };
    for (const auto& [name, g] : default_genus_map())
        check(example_profile(name, g).profile);
    std::mt19937 rng(141421);
    for (int i = 0; i < 1000; ++i) check(testsupport::random_profile(rng));
    pass = pass && determined > 100;
    report(6, "forbidden stability row never occurs (examples + 1,000 random profiles, " +
                  std::to_string(determined) + " fully determined)",
           pass, why);
}

// [7] dual-span-bundle case analysis: stable with positive margins at
// (25, 39) and (18, 28); premise fails at d = 3*d_1 for every g in [18, 40].
void criterion_dsb() {
    auto net_free = [](int g, long long d) {
        SystemProfile p;
        p.curve = {g, true};
        p.sys = {2, d, 5, true};
        p.exclusions = {no_net()};
        return p;
    };
    bool pass = true;
    for (auto [g, d] : std::array<std::array<long long, 2>, 2>{{{25, 39}, {18, 28}}}) {
        const DsbReport r = dsb_check_2d5(static_cast<int>(g), net_free(static_cast<int>(g), d));
        pass = pass && r.conclusion == DsbConclusion::DsbStable;
        for (const auto& c : r.cases) pass = pass && c.margin.sign() > 0;
    }
    for (int g = 18; g <= 40; ++g) {
        const long long d = 3 * gonality(CurveModel{g, true}, 1);
        pass = pass && dsb_check_2d5(g, net_free(g, d)).conclusion ==
                           DsbConclusion::PremiseFails;
    }
    report(7, "dual-span-bundle analysis: stable at (25,39) and (18,28), sharp at 3*d_1",
           pass);
}

// [8] degree-case checker: case B feasible on all of [18, 40]; strict case A
// exactly on g = 2 mod 3; the genus-18 equality failure carries its reason.
void criterion_cases() {
    bool pass = true;
    for (int g = 18; g <= 40; ++g) {
        pass = pass && degree_case_conditions(g, ButlerCase::B).feasible;
        pass = pass && (degree_case_conditions(g, ButlerCase::A, true).feasible == (g % 3 == 2));
    }
    const ButlerFeasibility g18 = degree_case_conditions(18, ButlerCase::A);
    pass = pass && !g18.feasible &&
           g18.checks[0].detail == "d_2 > 2g/3 + 2 fails at equality";
    report(8, "degree cases: B feasible on [18,40], strict A exactly g = 2 mod 3, "
              "genus-18 equality reason recorded",
           pass);
}

// [9] elementary-transformation trace at genus 18.
void criterion_nyn() {
    const NynReport r = nyn_feasibility(18);
    const bool pass = r.epsilon == 1 && r.e == 6 && r.beta == 4 && r.secant_dim == 4 &&
                      r.pointed_dim == 2 && r.quot_dim == 10 && r.e < r.quot_dim &&
                      r.feasible;
    report(9, "elementary transformation at genus 18: eps=1, e=6, beta=4, dims (4,2,10)",
           pass);
}

// [10] JSON round-trip on the seven example profiles; byte-identical repeated
// runs of every CLI verb.
void criterion_determinism(const std::string& cli) {
    bool pass = true;
    std::string why;
    for (const auto& [name, g] : default_genus_map()) {
        const SystemProfile p = example_profile(name, g).profile;
        if (!(profile_from_json(profile_to_json(p)) == p)) {
            pass = false;
            why = "round-trip failed for " + name;
        }
    }

    const std::string profile_path = "acceptance_profile.json";
    {
        std::ofstream out(profile_path, std::ios::binary);
        out << profile_to_json(example_profile("YYY", 25).profile).dump(2) << "\n";
    }
    const std::string verbs[] = {
        "oracle dk --genus 25 --k 2 --format json",
        "walls --system 2,23,5 --genus 12 --default-caps --format csv",
        "verdict --profile " + profile_path + " --format json",
        "verdict --profile " + profile_path + " --alpha 3/2",
        "example NYN --genus 18 --format json",
        "overview --format csv",
        "butler --genus 20 --case a --format json",
    };
    for (const auto& v : verbs) {
        const RunResult a = run_cli(cli, v);
        const RunResult b = run_cli(cli, v);
        if (a.exit_code != b.exit_code || a.out != b.out || a.out.empty()) {
            pass = false;
            why = "nondeterministic or empty output: " + v;
        }
    }
    for (int i = 1; i <= 2; ++i) {
        const std::string out_file = "acceptance_atlas_" + std::to_string(i) + ".csv";
        const RunResult r =
            run_cli(cli, "atlas --genus-range 18..24 --out " + out_file + " --format csv");
        if (r.exit_code != 0) {
            pass = false;
            why = "atlas exit " + std::to_string(r.exit_code);
        }
    }
    if (read_file("acceptance_atlas_1.csv") != read_file("acceptance_atlas_2.csv") ||
        read_file("acceptance_atlas_1.csv").empty()) {
        pass = false;
        why = "atlas output differs between runs";
    }
    report(10, "profile JSON round-trip and byte-identical CLI runs", pass, why);
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance <path-to-cli-binary>\n";
        return 2;
    }
    const std::string cli = argv[1];
    try {
        criterion_overview(cli);
        criterion_gonality();
        criterion_limits();
        criterion_wall();
        criterion_net_coherence();
        criterion_forbidden_row();
        criterion_dsb();
        criterion_cases();
        criterion_nyn();
        criterion_determinism(cli);
    } catch (const std::exception& e) {
        std::cout << "FAIL  unexpected exception: " << e.what() << "\n";
        return 1;
    }
    std::cout << (failures == 0 ? "all 10 acceptance criteria passed"
                                : std::to_string(failures) + " criteria failed")
              << "\n";
    return failures == 0 ? 0 : 1;
}
