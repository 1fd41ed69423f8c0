#pragma once
// Shared helpers for the randomized property suites: deterministic generators
// of valid evidence profiles. All randomness is seeded by the caller.

#include <optional>
#include <random>

#include "cohsys/curve_oracle.hpp"
#include "cohsys/profile_engine.hpp"

namespace testsupport {

using namespace cohsys;

// A valid generated rank-2 profile with random caps, exclusions, and
// admissibly drawn declared records.
inline SystemProfile random_profile(std::mt19937& rng) {
    std::uniform_int_distribution<int> genus(4, 30);
    std::uniform_int_distribution<int> sections(4, 6);
    std::uniform_int_distribution<long long> degree(5, 45);
    std::uniform_int_distribution<int> coin(0, 1);

    SystemProfile p;
    p.curve = CurveModel{genus(rng), true};
    p.sys = SystemType{2, degree(rng), sections(rng), true};
    if (coin(rng))
        p.line_max_degree =
            std::uniform_int_distribution<long long>(1, p.sys.degree)(rng);
    if (coin(rng)) p.exclusions.push_back(no_net());
    if (coin(rng)) {
        SectionCapOverride o;
        o.rank = 1;
        o.max_degree = std::uniform_int_distribution<long long>(0, p.sys.degree)(rng);
        o.max_sections = std::uniform_int_distribution<int>(0, 3)(rng);
        p.section_caps.push_back(o);
    }
    // draw up to two admissible declared records
    const int tries = std::uniform_int_distribution<int>(0, 2)(rng);
    for (int t = 0; t < tries; ++t) {
        SubsystemRecord rec;
        rec.rank = 1;
        rec.degree = std::uniform_int_distribution<long long>(1, p.sys.degree)(rng);
        rec.generated = coin(rng) == 1;
        SystemProfile probe = p;
        for (int n = std::min(p.sys.sections, 5); n >= 1; --n) {
            rec.sections = n;
            probe.declared.assign(1, rec);
            bool ok = true;
            try {
                validate_profile(probe);
            } catch (const Error&) {
                ok = false;
            }
            if (ok) {
                p.declared.push_back(rec);
                break;
            }
        }
    }
    validate_profile(p);
    return p;
}

// A (2, d, 5) profile whose net status is determined: either a net is
// declared (Yes) or nets are excluded outright (No).
inline SystemProfile random_2d5_profile(std::mt19937& rng) {
    std::uniform_int_distribution<int> genus(6, 30);
    std::uniform_int_distribution<int> coin(0, 1);
    for (;;) {
        SystemProfile p;
        p.curve = CurveModel{genus(rng), true};
        const long long d2 = gonality(p.curve, 2);
        p.sys = SystemType{
            2, std::uniform_int_distribution<long long>(d2 + 1, 3 * d2)(rng), 5, true};
        if (coin(rng)) {
            p.exclusions.push_back(no_net());
        } else {
            const long long e =
                std::uniform_int_distribution<long long>(d2, p.sys.degree)(rng);
            p.declared.push_back(SubsystemRecord{1, e, 3, false});
        }
        try {
            validate_profile(p);
        } catch (const Error&) {
            continue;
        }
        return p;
    }
}

} // namespace testsupport
