#include <doctest.h>

#include <random>

#include "cohsys/profile_engine.hpp"
#include "support.hpp"

using namespace cohsys;

namespace {

// The net-carrying extension profile: genus 12, type (2, 23, 5), the net of
// degree 11 declared, line degrees capped at 11, section-rich patterns
// excluded below degree 11 and above 3 sections everywhere.
SystemProfile net_profile_g12() {
    SystemProfile p;
    p.curve = {12, true};
    p.sys = {2, 23, 5, true};
    p.line_max_degree = 11;
    p.declared = {SubsystemRecord{1, 11, 3, true}};
    p.exclusions = {Exclusion{1, 4, std::nullopt}, Exclusion{1, 3, 11}};
    return p;
}

// The pencil-extension profile: genus 6, type (2, 11, 4), sub-pencil of
// degree 5 declared, line degrees capped at 5, sections capped at 2.
SystemProfile pencil_profile_g6() {
    SystemProfile p;
    p.curve = {6, true};
    p.sys = {2, 11, 4, true};
    p.line_max_degree = 5;
    p.declared = {SubsystemRecord{1, 5, 2, true}};
    p.exclusions = {Exclusion{1, 3, std::nullopt}, Exclusion{1, 2, 5}};
    return p;
}

int stability_level(Outcome o) {
    switch (o) {
        case Outcome::Unstable: return 0;
        case Outcome::StrictlySemistable: return 1;
        case Outcome::Undetermined: return 2;
        case Outcome::Stable: return 3;
    }
    return -1;
}

} // namespace

TEST_SUITE("profile_engine") {
    TEST_CASE("profile validation") {
        SystemProfile p = net_profile_g12();
        CHECK_NOTHROW(validate_profile(p));

        SUBCASE("declared record above a section cap is a contradiction") {
            p.section_caps.push_back(SectionCapOverride{1, 23, 2});
            CHECK_THROWS_AS(validate_profile(p), ContradictionError);
        }
        SUBCASE("declared record violating an exclusion is a contradiction") {
            p.declared.push_back(SubsystemRecord{1, 9, 3, false});
            CHECK_THROWS_AS(validate_profile(p), ContradictionError);
        }
        SUBCASE("declared record above the line degree cap is a contradiction") {
            p.declared.push_back(SubsystemRecord{1, 12, 2, false});
            CHECK_THROWS_AS(validate_profile(p), ContradictionError);
        }
        SUBCASE("non-general curves are rejected") {
            p.curve.general = false;
            CHECK_THROWS_AS(validate_profile(p), ProfileInvalid);
        }
        SUBCASE("full-rank declarations must be generated and bounded") {
            p.declared_generated_fullrank.push_back(SubsystemRecord{2, 20, 4, false});
            CHECK_THROWS_AS(validate_profile(p), ContradictionError);
        }
    }

    TEST_CASE("candidate enumeration") {
        SUBCASE("pencil profile: single dominated frontier point") {
            const auto cands = enumerate_candidates(pencil_profile_g6(),
                                                    Regime::Kind::SmallAlpha);
            REQUIRE(cands.size() == 1);
            CHECK(cands[0] == SubsystemRecord{1, 5, 2, true});
        }
        SUBCASE("net profile: the net is a large-alpha candidate") {
            const auto cands =
                enumerate_candidates(net_profile_g12(), Regime::Kind::LargeAlpha);
            bool found = false;
            for (const auto& c : cands)
                found = found || (c.rank == 1 && c.degree == 11 && c.sections == 3);
            CHECK(found);
        }
        SUBCASE("profile with no degree caps at all is invalid") {
            SystemProfile p;
            p.curve = {6, true};
            p.sys = {2, 9, 4, false}; // not generated, no line cap
            CHECK_THROWS_AS(enumerate_candidates(p, Regime::Kind::SmallAlpha),
                            ProfileInvalid);
        }
    }

    TEST_CASE("alpha-regime verdicts on the reference profiles") {
        const SystemProfile net = net_profile_g12();
        const SystemProfile pencil = pencil_profile_g6();

        CHECK(verdict_alpha_small(net).outcome == Outcome::Stable);
        CHECK(verdict_alpha_small(pencil).outcome == Outcome::Stable);

        const Verdict large = verdict_alpha_large(net);
        CHECK(large.outcome == Outcome::Unstable);
        REQUIRE(large.witness.has_value());
        CHECK(*large.witness == SubsystemRecord{1, 11, 3, true});
        CHECK(verdict_alpha_large(pencil).outcome == Outcome::Stable);

        SUBCASE("declared destabilizer wins immediately") {
            SystemProfile p;
            p.curve = {6, true};
            p.sys = {2, 9, 4, true};
            p.declared = {SubsystemRecord{1, 5, 2, true}};
            const Verdict v = verdict_alpha_small(p);
            CHECK(v.outcome == Outcome::Unstable);
            REQUIRE(v.witness.has_value());
            CHECK(v.witness->degree == 5);
            CHECK(verdict_alpha_large(p).outcome == Outcome::Unstable);
        }
        SUBCASE("missing caps leave the verdict undetermined") {
            SystemProfile p;
            p.curve = {6, true};
            p.sys = {2, 9, 4, false};
            const Verdict v = verdict_alpha_small(p);
            CHECK(v.outcome == Outcome::Undetermined);
            CHECK_FALSE(v.region.empty());
        }
    }

    TEST_CASE("verdicts across the wall at alpha = 1") {
        const SystemProfile net = net_profile_g12();
        CHECK(verdict_at_alpha(net, Rat(1, 2)).outcome == Outcome::Stable);
        const Verdict at_wall = verdict_at_alpha(net, Rat(1));
        CHECK(at_wall.outcome == Outcome::StrictlySemistable);
        REQUIRE(at_wall.witness.has_value());
        CHECK(*at_wall.witness == SubsystemRecord{1, 11, 3, true});
        CHECK(verdict_at_alpha(net, Rat(2)).outcome == Outcome::Unstable);
        CHECK_THROWS_AS(verdict_at_alpha(net, Rat(0)), NonPositiveAlpha);
        CHECK_THROWS_AS(verdict_at_alpha(net, Rat(-1)), NonPositiveAlpha);
    }

    TEST_CASE("linear verdicts") {
        SUBCASE("pencil profile is linearly unstable via the pencil") {
            const Verdict v = verdict_linear(pencil_profile_g6());
            CHECK(v.outcome == Outcome::Unstable);
            REQUIRE(v.witness.has_value());
            CHECK(*v.witness == SubsystemRecord{1, 5, 2, true});
        }
        SUBCASE("non-generated systems are refused") {
            SystemProfile p;
            p.curve = {6, true};
            p.sys = {2, 9, 4, false};
            CHECK_THROWS_AS(verdict_linear(p), NotGenerated);
        }
        SUBCASE("net profile is linearly unstable via the net") {
            const Verdict v = verdict_linear(net_profile_g12());
            CHECK(v.outcome == Outcome::Unstable);
            REQUIRE(v.witness.has_value());
            CHECK(*v.witness == SubsystemRecord{1, 11, 3, true});
        }
        SUBCASE("uncovered rank-2 candidates leave the verdict undetermined") {
            SystemProfile p;
            p.curve = {25, true};
            p.sys = {2, 39, 5, true};
            p.exclusions = {no_net()};
            const Verdict v = verdict_linear(p);
            CHECK(v.outcome == Outcome::Undetermined);
            CHECK(v.region.find("candidate") != std::string::npos);
        }
        SUBCASE("a declared pencil at d/r or below blocks linear stability") {
            // systems with n <= 2r: any such pencil has slope at most the
            // system's, so the verdict is never Stable
            std::mt19937 rng(4242);
            for (int i = 0; i < 200; ++i) {
                SystemProfile p;
                p.curve = {std::uniform_int_distribution<int>(6, 25)(rng), true};
                const long long d1 = gonality(p.curve, 1);
                p.sys = {2, std::uniform_int_distribution<long long>(2 * d1, 2 * d1 + 8)(rng),
                         4, true};
                const long long e = std::uniform_int_distribution<long long>(
                    d1, p.sys.degree / 2)(rng);
                p.declared = {SubsystemRecord{1, e, 2, true}};
                try {
                    validate_profile(p);
                } catch (const Error&) {
                    continue;
                }
                CHECK(verdict_linear(p).outcome != Outcome::Stable);
            }
        }
    }

    TEST_CASE("net detection and the (2, d, 5) large-alpha criterion") {
        CHECK(contains_net(net_profile_g12()).status == NetStatus::Yes);
        CHECK(verdict_2d5_large(net_profile_g12()).outcome == Outcome::Unstable);

        SystemProfile netfree;
        netfree.curve = {25, true};
        netfree.sys = {2, 39, 5, true};
        netfree.exclusions = {no_net()};
        CHECK(contains_net(netfree).status == NetStatus::No);
        CHECK(verdict_2d5_large(netfree).outcome == Outcome::Stable);

        SystemProfile unknown;
        unknown.curve = {25, true};
        unknown.sys = {2, 39, 5, true};
        unknown.section_caps = {SectionCapOverride{1, 39, 3}};
        CHECK(contains_net(unknown).status == NetStatus::Unknown);
        CHECK(verdict_2d5_large(unknown).outcome == Outcome::Undetermined);

        SUBCASE("preconditions") {
            SystemProfile bad;
            bad.curve = {6, true};
            bad.sys = {2, 9, 2, false};
            CHECK_THROWS_AS(contains_net(bad), TooFewSections);
            bad.sys = {3, 9, 5, false};
            CHECK_THROWS_AS(verdict_2d5_large(bad), WrongType);
        }
    }

    TEST_CASE("large-alpha verdict agrees with the net criterion") {
        std::mt19937 rng(31337);
        for (int i = 0; i < 1000; ++i) {
            const SystemProfile p = testsupport::random_2d5_profile(rng);
            CHECK(verdict_2d5_large(p).outcome == verdict_alpha_large(p).outcome);
        }
    }

    TEST_CASE("witness soundness: every unstable witness really destabilizes") {
        std::mt19937 rng(555);
        for (int i = 0; i < 1000; ++i) {
            const SystemProfile p = testsupport::random_profile(rng);
            const Verdict s = verdict_alpha_small(p);
            if (s.outcome == Outcome::Unstable)
                CHECK(lex_compare_small_alpha(*s.witness, p.sys) ==
                      LimitCompare::Destabilizes);
            const Verdict l = verdict_alpha_large(p);
            if (l.outcome == Outcome::Unstable)
                CHECK(lex_compare_large_alpha(*l.witness, p.sys) ==
                      LimitCompare::Destabilizes);
        }
    }

    TEST_CASE("limit verdicts agree with sampled numeric verdicts") {
        std::mt19937 rng(777);
        for (int i = 0; i < 300; ++i) {
            const SystemProfile p = testsupport::random_profile(rng);
            const auto walls = critical_alphas(p.sys, profile_caps(p));
            const Rat lo = walls.empty() ? Rat(1) : walls.front().alpha / Rat(2);
            const Rat hi = walls.empty() ? Rat(1) : walls.back().alpha + Rat(1);
            const Verdict s = verdict_alpha_small(p);
            if (s.outcome != Outcome::Undetermined)
                CHECK(s.outcome == verdict_at_alpha(p, lo).outcome);
            const Verdict l = verdict_alpha_large(p);
            if (l.outcome != Outcome::Undetermined)
                CHECK(l.outcome == verdict_at_alpha(p, hi).outcome);
        }
    }

    TEST_CASE("monotone dominance of evidence") {
        std::mt19937 rng(808);
        int declared_moves = 0, exclusion_moves = 0;
        for (int i = 0; i < 400; ++i) {
            const SystemProfile p = testsupport::random_profile(rng);

            // adding a declared record never increases the stability level
            SystemProfile more = p;
            SubsystemRecord rec{1,
                                std::uniform_int_distribution<long long>(
                                    1, p.sys.degree)(rng),
                                2, false};
            more.declared.push_back(rec);
            bool ok = true;
            try {
                validate_profile(more);
            } catch (const Error&) {
                ok = false;
            }
            if (ok) {
                for (auto verdict : {&verdict_alpha_small, &verdict_alpha_large}) {
                    const int before = stability_level(verdict(p).outcome);
                    const int after = stability_level(verdict(more).outcome);
                    CHECK(after <= before);
                    declared_moves += after < before;
                }
            }

            // adding an exclusion never decreases it
            SystemProfile fewer = p;
            fewer.exclusions.push_back(Exclusion{1, 2, std::nullopt});
            bool ok2 = true;
            try {
                validate_profile(fewer);
            } catch (const Error&) {
                ok2 = false;
            }
            if (ok2) {
                for (auto verdict : {&verdict_alpha_small, &verdict_alpha_large}) {
                    const int before = stability_level(verdict(p).outcome);
                    const int after = stability_level(verdict(fewer).outcome);
                    CHECK(after >= before);
                    exclusion_moves += after > before;
                }
            }
        }
        // the property must actually have been exercised in both directions
        CHECK(declared_moves + exclusion_moves > 0);
    }
}
