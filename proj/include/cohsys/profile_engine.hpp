#pragma once
// Evidence profiles and verdicts. A SystemProfile is the complete numeric
// evidence about one coherent system: caps on what subsystems could exist,
// subsystems declared to exist, and patterns excluded from existing. Verdicts
// are decided from that evidence alone; when the evidence cannot settle a
// regime the verdict is Undetermined, never a guess.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "cohsys/curve_oracle.hpp"
#include "cohsys/errors.hpp"
#include "cohsys/stability_core.hpp"

namespace cohsys {

// Tightens the oracle section caps: applies to candidates of the given rank
// with degree <= max_degree.
struct SectionCapOverride {
    int rank = 1;
    long long max_degree = 0;
    int max_sections = 0;

    friend bool operator==(const SectionCapOverride&, const SectionCapOverride&) = default;
};

// Asserts a pattern of subsystems does NOT occur: rank matches, sections
// >= min_sections, and (when min_degree is set) degree < min_degree.
// {rank, min_sections} with no degree bound forbids the pattern outright;
// with a degree bound it is a lower-degree certificate for that pattern.
struct Exclusion {
    int rank = 1;
    int min_sections = 0;
    std::optional<long long> min_degree;

    friend bool operator==(const Exclusion&, const Exclusion&) = default;

    [[nodiscard]] bool matches(const SubsystemRecord& rec) const {
        if (rec.rank != rank || rec.sections < min_sections) return false;
        return !min_degree || rec.degree < *min_degree;
    }
};

inline Exclusion no_net() { return Exclusion{1, 3, std::nullopt}; }

struct SystemProfile {
    CurveModel curve;
    SystemType sys;
    std::optional<long long> line_max_degree; // cap on rank-1 subbundle degrees
    std::vector<SectionCapOverride> section_caps;
    std::vector<SubsystemRecord> declared; // asserted to exist as subsystems
    std::vector<SubsystemRecord> declared_generated_fullrank;
    std::vector<Exclusion> exclusions;

    friend bool operator==(const SystemProfile& a, const SystemProfile& b) {
        return a.curve.genus == b.curve.genus && a.curve.general == b.curve.general &&
               a.sys == b.sys && a.line_max_degree == b.line_max_degree &&
               a.section_caps == b.section_caps && a.declared == b.declared &&
               a.declared_generated_fullrank == b.declared_generated_fullrank &&
               a.exclusions == b.exclusions;
    }
};

enum class Outcome { Stable, StrictlySemistable, Unstable, Undetermined };

struct Regime {
    enum class Kind { SmallAlpha, LargeAlpha, AtAlpha, Linear };
    Kind kind = Kind::SmallAlpha;
    Rat alpha; // meaningful for AtAlpha only
};

struct Verdict {
    Outcome outcome = Outcome::Undetermined;
    std::optional<SubsystemRecord> witness; // set for Unstable / StrictlySemistable
    Regime regime;
    std::string region; // unresolved candidate region, for Undetermined
};

struct TriVerdict {
    Verdict alpha_small;
    Verdict alpha_large;
    Verdict linear;
};

enum class NetStatus { Yes, No, Unknown };

namespace detail {

// Cap on n_F for a hypothetical candidate of the given rank and degree,
// folding together the curve oracle, the n_F <= n constraint, override caps,
// and exclusion-derived caps. May be negative meaning "none admissible".
inline int section_cap(const SystemProfile& p, int rank, long long degree) {
    int cap = p.sys.sections;
    if (rank == 1) cap = std::min(cap, max_line_sections(p.curve, degree));
    for (const auto& o : p.section_caps)
        if (o.rank == rank && degree <= o.max_degree) cap = std::min(cap, o.max_sections);
    for (const auto& x : p.exclusions)
        if (x.rank == rank && (!x.min_degree || degree < *x.min_degree))
            cap = std::min(cap, x.min_sections - 1);
    return cap;
}

// Upper bound on candidate degrees of the given rank, when one is known.
// Any full-rank subsheaf has degree <= d; for lower ranks the same bound
// holds when the ambient system is generated (its quotients are generated,
// hence of nonnegative degree).
inline std::optional<long long> degree_cap(const SystemProfile& p, int rank) {
    std::optional<long long> cap;
    if (rank == p.sys.rank || p.sys.generated) cap = p.sys.degree;
    if (rank == 1 && p.line_max_degree)
        cap = cap ? std::min(*cap, *p.line_max_degree) : *p.line_max_degree;
    return cap;
}

inline long long degree_floor(const SystemProfile& p) {
    return std::min<long long>(0, p.sys.degree);
}

inline bool excluded(const SystemProfile& p, const SubsystemRecord& rec) {
    return std::any_of(p.exclusions.begin(), p.exclusions.end(),
                       [&](const Exclusion& x) { return x.matches(rec); });
}

inline bool record_admissible(const SystemProfile& p, const SubsystemRecord& rec,
                              std::string* why = nullptr) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (rec.rank < 1 || rec.rank > p.sys.rank) return fail("rank out of range");
    if (rec.sections < 0) return fail("negative section count");
    if (rec.sections > p.sys.sections) return fail("more sections than the system");
    if (auto cap = degree_cap(p, rec.rank); cap && rec.degree > *cap)
        return fail("degree above cap");
    if (rec.sections > section_cap(p, rec.rank, rec.degree))
        return fail("sections above cap");
    if (excluded(p, rec)) return fail("contradicts an exclusion");
    return true;
}

// Canonical ordering for witnesses: minimal rank, maximal degree, maximal
// sections.
inline bool witness_before(const SubsystemRecord& a, const SubsystemRecord& b) {
    if (a.rank != b.rank) return a.rank < b.rank;
    if (a.degree != b.degree) return a.degree > b.degree;
    return a.sections > b.sections;
}

inline std::vector<SubsystemRecord> all_declared(const SystemProfile& p) {
    std::vector<SubsystemRecord> out = p.declared;
    out.insert(out.end(), p.declared_generated_fullrank.begin(),
               p.declared_generated_fullrank.end());
    return out;
}

inline bool is_declared_type(const SystemProfile& p, const SubsystemRecord& rec) {
    for (const auto& d : all_declared(p))
        if (d.rank == rec.rank && d.degree == rec.degree && d.sections == rec.sections)
            return true;
    return false;
}

inline std::string describe(const SubsystemRecord& r) {
    return "(" + std::to_string(r.rank) + ", " + std::to_string(r.degree) + ", " +
           std::to_string(r.sections) + ")";
}

} // namespace detail

// Construction-time validation. A declared record that violates a cap or an
// exclusion is a hard contradiction, not a soft verdict.
inline void validate_profile(const SystemProfile& p) {
    if (!p.curve.general || p.curve.genus < 2)
        throw ProfileInvalid("profile requires a general curve of genus >= 2");
    if (p.sys.rank < 1 || p.sys.sections < 0)
        throw ProfileInvalid("system type must have rank >= 1 and n >= 0");
    if (p.sys.generated && p.sys.degree > 0 && p.sys.sections <= p.sys.rank)
        throw ProfileInvalid("a generated system of positive degree needs n > r");
    for (const auto& o : p.section_caps)
        if (o.rank < 1 || o.max_sections < 0)
            throw ProfileInvalid("malformed section cap");
    for (const auto& x : p.exclusions)
        if (x.rank < 1 || x.min_sections < 1)
            throw ProfileInvalid("malformed exclusion");
    for (const auto& rec : detail::all_declared(p)) {
        std::string why;
        if (!is_proper(rec, p.sys))
            throw ContradictionError("declared record " + detail::describe(rec) +
                                     " is not a proper subsystem type");
        if (!detail::record_admissible(p, rec, &why))
            throw ContradictionError("declared record " + detail::describe(rec) +
                                     ": " + why);
    }
    for (const auto& rec : p.declared_generated_fullrank) {
        if (rec.rank != p.sys.rank)
            throw ContradictionError("declared full-rank record has wrong rank");
        if (!rec.generated)
            throw ContradictionError("declared full-rank record must be generated");
        if (p.sys.generated && (rec.degree > p.sys.degree || rec.sections > p.sys.sections))
            throw ContradictionError("declared generated record exceeds the system");
    }
}

// The finite list of maximal candidates per regime: declared records plus, for
// each rank below the system's, the dominating corner of the admissible
// (degree, sections) region. Full-rank types are omitted for the alpha
// regimes: with degree capped at d and sections at n they can never exceed
// the system's alpha-slope.
inline std::vector<SubsystemRecord> enumerate_candidates(const SystemProfile& p,
                                                         Regime::Kind kind) {
    validate_profile(p);
    std::vector<SubsystemRecord> out;
    auto push_unique = [&](const SubsystemRecord& r) {
        for (const auto& e : out)
            if (e.rank == r.rank && e.degree == r.degree && e.sections == r.sections)
                return;
        out.push_back(r);
    };
    if (kind != Regime::Kind::Linear) {
        for (const auto& rec : detail::all_declared(p)) push_unique(rec);
        for (int rank = 1; rank < p.sys.rank; ++rank) {
            auto cap = detail::degree_cap(p, rank);
            if (!cap)
                throw ProfileInvalid("no degree cap for rank " + std::to_string(rank) +
                                     " candidates");
            for (long long d = *cap; d >= detail::degree_floor(p); --d) {
                int n = detail::section_cap(p, rank, d);
                if (n < 0) continue;
                SubsystemRecord top{rank, d, n, false};
                if (!is_proper(top, p.sys)) continue;
                push_unique(top);
                break; // lower degrees are dominated (section caps are monotone)
            }
        }
        if (p.sys.rank == 1 && out.empty() && !detail::degree_cap(p, 1))
            throw ProfileInvalid("empty candidate caps");
        return out;
    }
    // Linear regime: generated candidates with d > 0 and n > r, at the minimal
    // degree each lower-degree rule permits.
    for (const auto& rec : detail::all_declared(p))
        if (rec.generated && rec.degree > 0 && rec.sections > rec.rank) push_unique(rec);
    for (int rank = 1; rank <= p.sys.rank; ++rank) {
        auto cap = detail::degree_cap(p, rank);
        if (!cap) continue;
        for (int n = rank + 1; n <= p.sys.sections - 1; ++n) {
            long long rule_floor = 1;
            if (rank == 1) rule_floor = std::max<long long>(1, gonality(p.curve, n - 1));
            else if (rank == 2) rule_floor = std::max<long long>(1, gonality(p.curve, 2));
            for (long long d = rule_floor; d <= *cap; ++d) {
                SubsystemRecord c{rank, d, n, true};
                if (detail::section_cap(p, rank, d) >= n && !detail::excluded(p, c) &&
                    is_proper(c, p.sys)) {
                    push_unique(c);
                    break;
                }
            }
        }
    }
    return out;
}

// Wall-enumeration caps induced by a profile: one rank cap per candidate
// rank, folding the profile's degree and section bounds.
inline CandidateCaps profile_caps(const SystemProfile& p) {
    validate_profile(p);
    CandidateCaps caps;
    for (int rank = 1; rank <= p.sys.rank; ++rank) {
        auto cap = detail::degree_cap(p, rank);
        if (!cap)
            throw ProfileInvalid("no degree cap for rank " + std::to_string(rank) +
                                 " candidates");
        RankCaps rc;
        rc.min_degree = detail::degree_floor(p);
        rc.max_degree = *cap;
        rc.max_sections = [p, rank](long long d) {
            return detail::section_cap(p, rank, d);
        };
        caps.by_rank.emplace(rank, std::move(rc));
    }
    return caps;
}

namespace detail {

// Shared engine for the three alpha regimes.
inline Verdict alpha_regime_verdict(const SystemProfile& p, const Regime& regime) {
    validate_profile(p);
    auto cmp = [&](const SubsystemRecord& rec) {
        switch (regime.kind) {
            case Regime::Kind::SmallAlpha: return lex_compare_small_alpha(rec, p.sys);
            case Regime::Kind::LargeAlpha: return lex_compare_large_alpha(rec, p.sys);
            default: return compare_at_alpha(rec, p.sys, regime.alpha);
        }
    };

    Verdict v;
    v.regime = regime;

    // Declared records settle Unstable / StrictlySemistable outright.
    std::optional<SubsystemRecord> destab, equal_declared;
    for (const auto& rec : all_declared(p)) {
        const LimitCompare c = cmp(rec);
        if (c == LimitCompare::Destabilizes &&
            (!destab || witness_before(rec, *destab)))
            destab = rec;
        if (c == LimitCompare::Equal &&
            (!equal_declared || witness_before(rec, *equal_declared)))
            equal_declared = rec;
    }
    if (destab) {
        v.outcome = Outcome::Unstable;
        v.witness = destab;
        return v;
    }

    // Scan the hypothetical frontier. Full-rank types are always safe here
    // (degree <= d and sections <= n force alpha-slope <= the system's).
    for (int rank = 1; rank < p.sys.rank; ++rank) {
        auto cap = degree_cap(p, rank);
        if (!cap) {
            v.outcome = Outcome::Undetermined;
            v.region = "rank " + std::to_string(rank) +
                       " candidates have no degree cap";
            return v;
        }
        for (long long d = degree_floor(p); d <= *cap; ++d) {
            const int n = section_cap(p, rank, d);
            if (n < 0) continue;
            SubsystemRecord c{rank, d, n, false};
            if (!is_proper(c, p.sys)) continue;
            const LimitCompare lc = cmp(c);
            if (lc == LimitCompare::Safe) continue;
            if (is_declared_type(p, c)) continue; // handled above
            v.outcome = Outcome::Undetermined;
            v.region = "candidate " + describe(c) +
                       (lc == LimitCompare::Equal ? " could be strictly destabilizing"
                                                  : " could destabilize") +
                       "; neither declared nor excluded";
            return v;
        }
    }

    if (equal_declared) {
        v.outcome = Outcome::StrictlySemistable;
        v.witness = equal_declared;
    } else {
        v.outcome = Outcome::Stable;
    }
    return v;
}

} // namespace detail

inline Verdict verdict_alpha_small(const SystemProfile& p) {
    return detail::alpha_regime_verdict(p, Regime{Regime::Kind::SmallAlpha, Rat()});
}

inline Verdict verdict_alpha_large(const SystemProfile& p) {
    return detail::alpha_regime_verdict(p, Regime{Regime::Kind::LargeAlpha, Rat()});
}

inline Verdict verdict_at_alpha(const SystemProfile& p, const Rat& alpha) {
    if (alpha.sign() <= 0) throw NonPositiveAlpha("verdict_at_alpha needs alpha > 0");
    return detail::alpha_regime_verdict(p, Regime{Regime::Kind::AtAlpha, alpha});
}

// Linear stability from declared evidence plus the lower-degree rules:
//   (1) a generated rank-1 candidate with k+1 sections has degree >= d_k;
//   (2) a generated rank-2 candidate with >= 3 sections and no sub-pencil has
//       degree >= d_2;
//   (3) a rank >= 2 candidate containing a pencil has degree at least the
//       minimal admissible pencil degree (its quotients being generated, the
//       rest of the degree is nonnegative).
// Ranks >= 3 below full rank have no such rule and leave the verdict
// Undetermined unless excluded.
inline Verdict verdict_linear(const SystemProfile& p) {
    validate_profile(p);
    if (!p.sys.generated) throw NotGenerated("linear verdicts need a generated system");
    if (p.sys.degree <= 0) throw NonPositiveDegree("linear verdicts need d > 0");
    const Rat lam_sys = linear_slope(p.sys);

    Verdict v;
    v.regime = Regime{Regime::Kind::Linear, Rat()};

    std::optional<SubsystemRecord> destab, equal_declared;
    for (const auto& rec : detail::all_declared(p)) {
        if (!rec.generated || rec.degree <= 0 || rec.sections <= rec.rank) continue;
        const Rat lam = linear_slope(rec);
        if (lam < lam_sys && (!destab || detail::witness_before(rec, *destab)))
            destab = rec;
        if (lam == lam_sys &&
            (!equal_declared || detail::witness_before(rec, *equal_declared)))
            equal_declared = rec;
    }
    if (destab) {
        v.outcome = Outcome::Unstable;
        v.witness = destab;
        return v;
    }

    // Minimal degree of an admissible pencil candidate, if pencils are possible.
    std::optional<long long> pencil_min;
    if (auto cap1 = detail::degree_cap(p, 1)) {
        for (long long d = 1; d <= *cap1; ++d) {
            SubsystemRecord c{1, d, 2, true};
            if (d >= gonality(p.curve, 1) && detail::section_cap(p, 1, d) >= 2 &&
                !detail::excluded(p, c)) {
                pencil_min = d;
                break;
            }
        }
    }

    auto undetermined = [&](const std::string& region) {
        v.outcome = Outcome::Undetermined;
        v.region = region;
        return v;
    };

    auto check_candidate = [&](const SubsystemRecord& c) -> std::optional<Verdict> {
        const Rat lam(c.degree, c.sections - c.rank);
        if (lam > lam_sys) return std::nullopt;
        if (detail::is_declared_type(p, c)) return std::nullopt; // handled above
        return undetermined("generated candidate " + detail::describe(c) +
                            " could linearly destabilize; neither declared nor excluded");
    };

    for (int rank = 1; rank <= p.sys.rank; ++rank) {
        auto cap = detail::degree_cap(p, rank);
        if (!cap) return undetermined("rank " + std::to_string(rank) +
                                      " candidates have no degree cap");
        for (int n = rank + 1; n <= p.sys.sections - 1; ++n) {
            std::vector<long long> floors;
            if (rank == 1) {
                floors.push_back(gonality(p.curve, n - 1));
            } else if (rank == 2) {
                floors.push_back(gonality(p.curve, 2)); // no sub-pencil
                if (pencil_min) floors.push_back(*pencil_min); // contains a pencil
            } else {
                // No lower-degree rule for intermediate ranks >= 3.
                bool possible = false;
                for (long long d = 1; d <= *cap && !possible; ++d) {
                    SubsystemRecord c{rank, d, n, true};
                    possible = detail::section_cap(p, rank, d) >= n &&
                               !detail::excluded(p, c) && is_proper(c, p.sys);
                }
                if (possible)
                    return undetermined("no lower-degree rule covers rank " +
                                        std::to_string(rank) + " candidates");
                continue;
            }
            if (rank >= 2 && !pencil_min && floors.size() == 1) {
                // Pencils impossible: rule (2)'s no-sub-pencil bound covers
                // every rank-2 candidate.
            }
            for (long long rule_floor : floors) {
                for (long long d = std::max<long long>(1, rule_floor); d <= *cap; ++d) {
                    SubsystemRecord c{rank, d, n, true};
                    if (detail::section_cap(p, rank, d) < n || detail::excluded(p, c) ||
                        !is_proper(c, p.sys))
                        continue;
                    if (auto bad = check_candidate(c)) return *bad;
                    break; // larger degrees only increase the linear slope
                }
            }
        }
    }

    if (equal_declared) {
        v.outcome = Outcome::StrictlySemistable;
        v.witness = equal_declared;
    } else {
        v.outcome = Outcome::Stable;
    }
    return v;
}

struct NetResult {
    NetStatus status = NetStatus::Unknown;
    std::optional<SubsystemRecord> witness;
};

// Does the profile settle whether a rank-1 subsystem with >= 3 sections exists?
inline NetResult contains_net(const SystemProfile& p) {
    validate_profile(p);
    if (p.sys.sections < 3) throw TooFewSections("a net needs n >= 3");
    for (const auto& rec : p.declared)
        if (rec.rank == 1 && rec.sections >= 3) return {NetStatus::Yes, rec};
    auto cap = detail::degree_cap(p, 1);
    if (!cap) return {NetStatus::Unknown, std::nullopt};
    for (long long d = detail::degree_floor(p); d <= *cap; ++d)
        if (detail::section_cap(p, 1, d) >= 3) return {NetStatus::Unknown, std::nullopt};
    return {NetStatus::No, std::nullopt};
}

// Large-alpha verdict for a type (2, d, 5) system via the net criterion; must
// agree with verdict_alpha_large whenever both are determined.
inline Verdict verdict_2d5_large(const SystemProfile& p) {
    if (p.sys.rank != 2 || p.sys.sections != 5)
        throw WrongType("net criterion applies to type (2, d, 5) only");
    const NetResult net = contains_net(p);
    Verdict v;
    v.regime = Regime{Regime::Kind::LargeAlpha, Rat()};
    switch (net.status) {
        case NetStatus::Yes:
            v.outcome = Outcome::Unstable;
            v.witness = net.witness;
            break;
        case NetStatus::No:
            v.outcome = Outcome::Stable;
            break;
        case NetStatus::Unknown:
            v.outcome = Outcome::Undetermined;
            v.region = "net status unknown: a rank-1 candidate with 3 sections is "
                       "admissible but neither declared nor excluded";
            break;
    }
    return v;
}

} // namespace cohsys
