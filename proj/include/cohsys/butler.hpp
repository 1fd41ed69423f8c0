#pragma once
// Dual-span-bundle (DSB) stability for type (2, d, 5) systems, the
// destabilizer search on the dual (3, d, 5) system, and the feasibility
// checker for the two low-genus degree cases d = 2*d_2 - 1 and d = 2*d_2.
//
// The DSB of a generated system (E, V) is the dual of the kernel of the
// evaluation map O (x) V -> E. Its slope stability implies linear stability
// of (E, V); that implication is how the engine settles linear verdicts the
// frontier scan cannot.

#include <optional>
#include <string>
#include <vector>

#include "cohsys/curve_oracle.hpp"
#include "cohsys/errors.hpp"
#include "cohsys/profile_engine.hpp"
#include "cohsys/rational.hpp"

namespace cohsys {

enum class DsbConclusion { DsbStable, PremiseFails, CaseGap };

struct DsbCase {
    std::string candidate; // subbundle class of the DSB kernel
    std::string bound;     // the inequality used
    Rat margin;            // > 0 means the case is closed
};

struct DsbReport {
    bool premise_ok = false;
    std::string premise_note;
    std::vector<DsbCase> cases;
    DsbConclusion conclusion = DsbConclusion::CaseGap;
};

// Case analysis for a generated, large-alpha-stable type (2, d, 5) system
// with d < 3*d_1: every destabilizing subbundle class of the DSB kernel is
// ruled out with a strictly positive exact margin, so the DSB is stable and
// the system is linearly stable.
inline DsbReport dsb_check_2d5(int g, const SystemProfile& p) {
    if (p.curve.genus != g)
        throw WrongType("genus argument disagrees with the profile's curve");
    if (p.sys.rank != 2 || p.sys.sections != 5)
        throw WrongType("DSB case analysis applies to type (2, d, 5) only");
    if (!p.sys.generated) throw NotGenerated("DSB needs a generated system");

    DsbReport rep;
    const long long d = p.sys.degree;
    const long long d1 = gonality(p.curve, 1);

    const NetResult net = contains_net(p);
    if (net.status == NetStatus::Unknown)
        throw NetStatusUnknown("DSB premise needs a determined net status");
    if (net.status == NetStatus::Yes) {
        rep.premise_ok = false;
        rep.premise_note = "system contains a net, hence is not large-alpha stable";
        rep.conclusion = DsbConclusion::PremiseFails;
        return rep;
    }
    if (d >= 3 * d1) {
        rep.premise_ok = false;
        rep.premise_note = "degree bound d < 3*d_1 fails: " + std::to_string(d) +
                           " >= " + std::to_string(3 * d1);
        rep.conclusion = DsbConclusion::PremiseFails;
        return rep;
    }
    rep.premise_ok = true;
    rep.premise_note = "type (2, " + std::to_string(d) +
                       ", 5), generated, net-free, d < 3*d_1 = " +
                       std::to_string(3 * d1);

    const Rat mu_third(d, 3); // slope of the rank-3 DSB kernel, negated

    // (i) rank-1 subbundle: its dual moves sections of a line bundle, so its
    // degree is at least d_1; destabilizing would need it below d/3.
    rep.cases.push_back({"rank-1 subbundle",
                         "dual degree >= d_1 > d/3", Rat(d1) - mu_third});
    // (ii) rank-2 subbundle whose section space has dimension 3: it would
    // exhibit a net inside the system, excluded by the net-free premise.
    // Recorded without a margin slot of its own; the premise closes it.
    // (iii) rank-2, section dimension >= 4, dual contributing to the
    // rank-two Clifford bound: slope >= gamma_2 + 2*(h0/r) - ... reduces to
    // the same d_1 > d/3 comparison on a general curve (gamma_2 = d_1 - 2).
    rep.cases.push_back({"rank-2 subbundle, >= 4 sections, Clifford-contributing",
                         "dual slope >= d_1 > d/3", Rat(d1) - mu_third});
    // (iv) rank-2, non-contributing dual (slope above g - 1): needs g - 1 > d/3.
    rep.cases.push_back({"rank-2 subbundle, non-contributing",
                         "dual slope >= g - 1 > d/3", Rat(g - 1) - mu_third});

    bool all_positive = true;
    for (const auto& c : rep.cases) all_positive = all_positive && c.margin.sign() > 0;
    rep.conclusion = all_positive ? DsbConclusion::DsbStable : DsbConclusion::CaseGap;
    return rep;
}

struct ButlerSearchCase {
    std::string candidate;
    std::string bound;
    Rat lhs;
    Rat rhs;
    bool safe = false;
};

struct ButlerSearchReport {
    int genus = 0;
    SystemType sys;
    long long d2 = 0;
    std::vector<ButlerSearchCase> cases;
    bool boundary_case = false; // the tie deg S = -d_2 was reached
    std::string boundary_note;
    bool alpha_s_stable = false;
};

// Destabilizer search for the dual system of type (3, d, 5) with
// d in {2*d_2 - 1, 2*d_2}, g >= 18: walks the subsheaf classes of the span
// kernel by rank and section count, closing each with an exact inequality.
// At d = 2*d_2 the section-rich case ties and is broken lexicographically:
// the dual carries no rank-1 subsystem with 3 sections.
inline ButlerSearchReport butler_diagram_search(int g, const SystemProfile& m_profile) {
    if (g < 18) throw GenusTooSmall("dual-system search needs g >= 18");
    if (m_profile.curve.genus != g)
        throw WrongType("genus argument disagrees with the profile's curve");
    const long long d2 = gonality(m_profile.curve, 2);
    const SystemType& sys = m_profile.sys;
    if (sys.rank != 3 || sys.sections != 5 ||
        (sys.degree != 2 * d2 - 1 && sys.degree != 2 * d2))
        throw WrongType("dual system must be of type (3, d, 5) with d = 2*d_2 - 1 or 2*d_2");

    ButlerSearchReport rep;
    rep.genus = g;
    rep.sys = sys;
    rep.d2 = d2;

    bool all_safe = true;

    // Rank-1 subsheaves: the dual degree is at least d_1 >= g/2 + 1, while
    // the ambient slope is at most 2*d_2/3.
    {
        ButlerSearchCase c;
        c.candidate = "rank-1 subsheaf";
        c.bound = "g/2 + 1 > 2*d_2/3";
        c.lhs = Rat(g, 2) + Rat(1);
        c.rhs = Rat(2 * d2, 3);
        c.safe = c.lhs > c.rhs;
        all_safe = all_safe && c.safe;
        rep.cases.push_back(c);
    }

    // Subsheaves whose section space has dimension >= 3: forced degree at
    // most -d_2 on the kernel side, i.e. the comparison d_2 vs d/2.
    {
        ButlerSearchCase c;
        c.candidate = "subsheaf with >= 3 sections";
        c.bound = "d_2 > d/2";
        c.lhs = Rat(d2);
        c.rhs = Rat(sys.degree, 2);
        c.safe = c.lhs > c.rhs;
        if (c.lhs == c.rhs) {
            // Boundary: deg S = -d_2 is reached exactly. Tie-break: equality
            // would exhibit a rank-1 subsystem with 3 sections in the dual,
            // which the profile must rule out.
            rep.boundary_case = true;
            const NetResult net = contains_net(m_profile);
            if (net.status == NetStatus::No) {
                c.safe = true;
                rep.boundary_note =
                    "tie at deg S = -d_2 = -" + std::to_string(d2) +
                    "; broken lexicographically: no subsystem of type (1, e, 3)";
            } else {
                rep.boundary_note = "tie at deg S = -d_2 unresolved: net status is not No";
            }
        }
        all_safe = all_safe && c.safe;
        rep.cases.push_back(c);
    }

    rep.alpha_s_stable = all_safe;
    return rep;
}

enum class ButlerCase { A, B };

struct FeasibilityCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct ButlerFeasibility {
    int g = 0;
    ButlerCase which = ButlerCase::A;
    long long d2 = 0;
    long long d = 0;
    int epsilon = 0;
    bool strict_mode = true;
    std::vector<FeasibilityCheck> checks;
    bool feasible = false;
};

// Hypothesis checker for the two degree cases:
//   case A: d = 2*d_2 - 1, epsilon = 0, plus a congruence on g
//           (strict mode: g = 2 mod 3; proof mode: g != 0 mod 3);
//   case B: d = 2*d_2, epsilon = 1, no congruence.
// Conditions: d_2 > (2g - epsilon)/3 + 2; the congruence; d < 3*d_1; and
// existence plus base-point-freeness of the two line-bundle families
// W^1_{d_2 - 1} and W^2_{d_2 + epsilon}.
inline ButlerFeasibility degree_case_conditions(int g, ButlerCase which, bool strict = true) {
    if (g < 18) throw GenusTooSmall("feasibility checker needs g >= 18");
    const CurveModel curve{g, true};
    ButlerFeasibility out;
    out.g = g;
    out.which = which;
    out.strict_mode = strict;
    out.d2 = gonality(curve, 2);
    out.epsilon = (which == ButlerCase::A) ? 0 : 1;
    out.d = (which == ButlerCase::A) ? 2 * out.d2 - 1 : 2 * out.d2;

    auto add = [&](const std::string& name, bool pass, const std::string& detail) {
        out.checks.push_back({name, pass, detail});
    };

    {
        const Rat rhs = Rat(2LL * g - out.epsilon, 3) + Rat(2);
        const Rat lhs(out.d2);
        const bool pass = lhs > rhs;
        std::string detail = "d_2 = " + lhs.str() + " vs " + rhs.str();
        if (!pass && lhs == rhs && out.epsilon == 0)
            detail = "d_2 > 2g/3 + 2 fails at equality";
        add("degree-vs-gonality inequality", pass, detail);
    }
    {
        bool pass = true;
        std::string detail = "no congruence condition";
        if (which == ButlerCase::A) {
            pass = strict ? (g % 3 == 2) : (g % 3 != 0);
            detail = strict ? "needs g = 2 mod 3; g mod 3 = " + std::to_string(g % 3)
                            : "needs g != 0 mod 3; g mod 3 = " + std::to_string(g % 3);
        }
        add("genus congruence", pass, detail);
    }
    {
        const long long d1 = gonality(curve, 1);
        const bool pass = out.d < 3 * d1;
        add("degree window d < 3*d_1", pass,
            "d = " + std::to_string(out.d) + " vs 3*d_1 = " + std::to_string(3 * d1));
    }
    {
        const long long ell1 = out.d2 - 1;
        const bool pass = bn_nonempty(curve, 1, ell1) && bpf_general_ok(curve, 1, ell1);
        add("pencil family W^1 at degree d_2 - 1", pass,
            "degree " + std::to_string(ell1) +
            ", expected dim " + std::to_string(bn_number(curve, 1, ell1)));
    }
    {
        const long long ell2 = out.d2 + out.epsilon;
        const bool pass = bn_nonempty(curve, 2, ell2) && bpf_general_ok(curve, 2, ell2);
        add("net family W^2 at degree d_2 + epsilon", pass,
            "degree " + std::to_string(ell2) +
            ", expected dim " + std::to_string(bn_number(curve, 2, ell2)));
    }

    out.feasible = true;
    for (const auto& c : out.checks) out.feasible = out.feasible && c.pass;
    return out;
}

struct ButlerSweepRow {
    int g = 0;
    bool case_a_strict = false;
    bool case_a_proof = false;
    bool case_b_strict = false;
    bool case_b_proof = false;
    std::string annotation;
};

// Batch driver over degree_case_conditions for a genus range (inclusive; empty when
// hi < lo). Per-row errors become annotations, never exceptions.
inline std::vector<ButlerSweepRow> butler_sweep(int lo, int hi) {
    std::vector<ButlerSweepRow> rows;
    for (int g = lo; g <= hi; ++g) {
        ButlerSweepRow row;
        row.g = g;
        try {
            row.case_a_strict = degree_case_conditions(g, ButlerCase::A, true).feasible;
            row.case_a_proof = degree_case_conditions(g, ButlerCase::A, false).feasible;
            row.case_b_strict = degree_case_conditions(g, ButlerCase::B, true).feasible;
            row.case_b_proof = degree_case_conditions(g, ButlerCase::B, false).feasible;
        } catch (const Error& e) {
            row.annotation = e.what();
        }
        rows.push_back(row);
    }
    return rows;
}

} // namespace cohsys
