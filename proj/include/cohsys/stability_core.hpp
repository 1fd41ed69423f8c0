#pragma once
// Exact slope arithmetic: alpha-slopes, linear slopes, wall (critical value)
// computation, and the lexicographic limit comparisons that decide the
// small-alpha and large-alpha regimes without ever picking a numeric alpha.

#include <functional>
#include <map>
#include <optional>
#include <tuple>
#include <vector>

#include "cohsys/errors.hpp"
#include "cohsys/rational.hpp"

namespace cohsys {

// Numeric type (r, d, n) of a coherent system: rank, degree, dim V.
struct SystemType {
    int rank = 1;
    long long degree = 0;
    int sections = 0;
    bool generated = false;

    friend bool operator==(const SystemType&, const SystemType&) = default;
};

// Numeric type of a (would-be) subsystem.
struct SubsystemRecord {
    int rank = 1;
    long long degree = 0;
    int sections = 0;
    bool generated = false;

    friend bool operator==(const SubsystemRecord&, const SubsystemRecord&) = default;
};

enum class LimitCompare { Destabilizes, Equal, Safe };

// A positive critical value together with its witnessing subsystem type.
// Invariant: alpha * (n_F*r - n*r_F) = d*r_F - d_F*r exactly.
struct Wall {
    Rat alpha;
    SubsystemRecord witness;
    SystemType sys;
};

namespace detail {
template <class T>
concept TypeLike = requires(T t) {
    { t.rank } -> std::convertible_to<int>;
    { t.degree } -> std::convertible_to<long long>;
    { t.sections } -> std::convertible_to<int>;
    { t.generated } -> std::convertible_to<bool>;
};
} // namespace detail

// (d + alpha*n) / r
template <detail::TypeLike T>
Rat alpha_slope(const T& t, const Rat& alpha) {
    if (alpha.sign() < 0) throw NegativeAlpha("alpha-slope requires alpha >= 0");
    return (Rat(t.degree) + alpha * Rat(t.sections)) / Rat(t.rank);
}

// d / (n - r), defined for generated types of positive degree with n > r.
template <detail::TypeLike T>
Rat linear_slope(const T& t) {
    if (!t.generated) throw NotGenerated("linear slope needs a generated system");
    if (t.degree <= 0) throw NonPositiveDegree("linear slope needs positive degree");
    if (t.sections <= t.rank) throw NoExcessSections("linear slope needs n > r");
    return Rat(t.degree, t.sections - t.rank);
}

inline bool is_proper(const SubsystemRecord& sub, const SystemType& sys) {
    if (sub.rank < 1 || sub.rank > sys.rank) return false;
    return !(sub.rank == sys.rank && sub.degree == sys.degree &&
             sub.sections == sys.sections);
}

inline void require_proper(const SubsystemRecord& sub, const SystemType& sys) {
    if (!is_proper(sub, sys))
        throw NotProper("subsystem type must be proper and of rank <= the system's");
}

// The unique alpha where the two alpha-slopes agree, if it is positive.
// Parallel slopes (equal section densities) never cross.
inline std::optional<Wall> wall_alpha(const SystemType& sys, const SubsystemRecord& sub) {
    require_proper(sub, sys);
    const long long denom =
        static_cast<long long>(sub.sections) * sys.rank -
        static_cast<long long>(sys.sections) * sub.rank;
    if (denom == 0) return std::nullopt;
    const long long numer = sys.degree * sub.rank - sub.degree * sys.rank;
    Rat alpha(numer, denom);
    if (alpha.sign() <= 0) return std::nullopt;
    return Wall{alpha, sub, sys};
}

// "mu_alpha(sub) > mu_alpha(sys) for all sufficiently small alpha > 0":
// compare (d_F/r_F, n_F/r_F) against (d/r, n/r) lexicographically.
inline LimitCompare lex_compare_small_alpha(const SubsystemRecord& sub,
                                            const SystemType& sys) {
    require_proper(sub, sys);
    const Rat mu_sub(sub.degree, sub.rank), mu_sys(sys.degree, sys.rank);
    if (mu_sub != mu_sys)
        return mu_sub > mu_sys ? LimitCompare::Destabilizes : LimitCompare::Safe;
    const Rat nd_sub(sub.sections, sub.rank), nd_sys(sys.sections, sys.rank);
    if (nd_sub != nd_sys)
        return nd_sub > nd_sys ? LimitCompare::Destabilizes : LimitCompare::Safe;
    return LimitCompare::Equal;
}

// Same for "all sufficiently large alpha": section density first, slope second.
inline LimitCompare lex_compare_large_alpha(const SubsystemRecord& sub,
                                            const SystemType& sys) {
    require_proper(sub, sys);
    const Rat nd_sub(sub.sections, sub.rank), nd_sys(sys.sections, sys.rank);
    if (nd_sub != nd_sys)
        return nd_sub > nd_sys ? LimitCompare::Destabilizes : LimitCompare::Safe;
    const Rat mu_sub(sub.degree, sub.rank), mu_sys(sys.degree, sys.rank);
    if (mu_sub != mu_sys)
        return mu_sub > mu_sys ? LimitCompare::Destabilizes : LimitCompare::Safe;
    return LimitCompare::Equal;
}

// Comparison at a concrete positive alpha.
inline LimitCompare compare_at_alpha(const SubsystemRecord& sub, const SystemType& sys,
                                     const Rat& alpha) {
    require_proper(sub, sys);
    const Rat a = alpha_slope(sub, alpha), b = alpha_slope(sys, alpha);
    if (a == b) return LimitCompare::Equal;
    return a > b ? LimitCompare::Destabilizes : LimitCompare::Safe;
}

// Enumeration bounds for wall computation: per candidate rank, a degree range
// and a per-degree section cap.
struct RankCaps {
    long long min_degree = 0;
    long long max_degree = 0;
    std::function<int(long long)> max_sections; // degree -> cap on n_F
};

struct CandidateCaps {
    std::map<int, RankCaps> by_rank;
};

// The finite ascending list of positive walls reachable within the caps.
// Witnesses are canonical: minimal rank, then maximal degree, then maximal
// sections. Full-rank candidates are admitted only with d_F <= d.
inline std::vector<Wall> critical_alphas(const SystemType& sys, const CandidateCaps& caps) {
    if (caps.by_rank.empty()) throw EmptyCaps("wall enumeration needs at least one rank cap");
    std::map<Rat, Wall, std::less<>> walls; // keyed by alpha; first insert wins
    for (const auto& [rank, rc] : caps.by_rank) {
        if (rank < 1 || rank > sys.rank) throw EmptyCaps("cap rank out of range");
        if (!rc.max_sections) throw EmptyCaps("cap is missing a section bound");
        long long hi = rc.max_degree;
        if (rank == sys.rank) hi = std::min(hi, sys.degree);
        for (long long d = hi; d >= rc.min_degree; --d) {
            for (int n = rc.max_sections(d); n >= 0; --n) {
                SubsystemRecord sub{rank, d, n, false};
                if (!is_proper(sub, sys)) continue;
                if (auto w = wall_alpha(sys, sub)) walls.emplace(w->alpha, *w);
            }
        }
    }
    std::vector<Wall> out;
    out.reserve(walls.size());
    for (auto& [alpha, w] : walls) out.push_back(w);
    return out;
}

} // namespace cohsys
