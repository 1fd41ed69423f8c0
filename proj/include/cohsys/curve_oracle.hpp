#pragma once
// Genus-indexed arithmetic facts about a curve general in moduli: gonality
// sequence, Brill-Noether numbers, Clifford indices, section caps,
// base-point-free feasibility, and secant-locus expected dimensions.
//
// Everything here is a pure function of its arguments, computed in exact
// integer/rational arithmetic.

#include <algorithm>

#include "cohsys/errors.hpp"
#include "cohsys/rational.hpp"

namespace cohsys {

struct CurveModel {
    int genus = 2;
    bool general = true; // "general in moduli"; required by every oracle query
};

struct CliffordDatum {
    int rank = 1;
    long long degree = 0;
    int sections = 0;
    Rat gamma; // (degree - 2*(sections - rank)) / rank
};

struct SecantDatum {
    long long e = 0; // divisor / torsion length
    long long f = 0; // number of imposed conditions that fail
    int ambient_rank = 1;
    long long ambient_sections = 0;
    long long expected_dim = 0; // rank*e - f*(sections - e + f)
};

namespace detail {
inline void require_general(const CurveModel& c) {
    if (c.genus < 2) throw GenusTooSmall("genus must be at least 2");
    if (!c.general) throw NonGeneralCurve("oracle requires a curve general in moduli");
}
} // namespace detail

// k-th gonality of a general genus-g curve: ceil(k*g/(k+1) + k).
inline long long gonality(const CurveModel& curve, int k) {
    detail::require_general(curve);
    if (k < 1) throw InvalidK("gonality index k must be >= 1");
    const long long g = curve.genus;
    return Rat(k * g + static_cast<long long>(k) * (k + 1), k + 1).ceil();
}

// Brill-Noether number g - (k+1)*(k - d + g); may be negative.
inline long long bn_number(const CurveModel& curve, long long k, long long d) {
    if (k < 0 || d < 0) throw InvalidRange("bn_number requires k >= 0 and d >= 0");
    const long long g = curve.genus;
    return g - (k + 1) * (k - d + g);
}

// On a general curve the locus of degree-d line bundles with >= k+1 sections
// is nonempty exactly when the Brill-Noether number is nonnegative.
inline bool bn_nonempty(const CurveModel& curve, long long k, long long d) {
    detail::require_general(curve);
    return bn_number(curve, k, d) >= 0;
}

// Upper bound on h^0 of a degree-e line bundle on a general curve.
// Blends the gonality cap (max{k : d_k <= e} + 1, with d_0 := 0) with the
// Riemann-Roch floor e - g + 1, so the cap stays valid for every degree.
inline int max_line_sections(const CurveModel& curve, long long e) {
    detail::require_general(curve);
    if (e < 0) return 0;
    int k = 0;
    while (gonality(curve, k + 1) <= e) ++k; // d_k grows at least like k
    const long long cap = std::max<long long>(k + 1, e - curve.genus + 1);
    return static_cast<int>(cap);
}

// Hypotheses under which a general element of W^k_ell has exactly k+1
// sections and is base point free: ell >= d_k and k - ell + g >= 0.
inline bool bpf_general_ok(const CurveModel& curve, int k, long long ell) {
    detail::require_general(curve);
    if (curve.genus <= 2) throw GenusTooSmall("base-point-free criterion needs g > 2");
    if (k < 1) throw InvalidK("bpf criterion requires k >= 1");
    return ell >= gonality(curve, k) && k - ell + curve.genus >= 0;
}

// Clifford-type invariant of a rank-r bundle with given degree and sections.
inline CliffordDatum clifford_gamma(int r, long long d, int h0) {
    if (r < 1) throw InvalidRank("clifford_gamma requires rank >= 1");
    if (h0 < 0) throw InvalidRange("clifford_gamma requires h0 >= 0");
    CliffordDatum out;
    out.rank = r;
    out.degree = d;
    out.sections = h0;
    out.gamma = Rat(d - 2 * (static_cast<long long>(h0) - r), r);
    return out;
}

// Clifford index of a general curve for ranks 1 and 2: d_1 - 2 in both cases.
// Rank >= 3 is refused; the rank-two equality does not extend.
inline long long clifford_index(const CurveModel& curve, int r) {
    detail::require_general(curve);
    if (curve.genus < 4) throw GenusTooSmall("clifford_index needs g >= 4");
    if (r != 1 && r != 2) throw UnsupportedRank("clifford_index supports rank 1 and 2 only");
    return gonality(curve, 1) - 2;
}

// Expected dimension of the secant locus: rank*e - f*(h0 - e + f).
inline SecantDatum secant_expected_dim(long long e, long long f, int ambient_rank,
                                       long long ambient_sections) {
    if (f < 0 || f > e) throw InvalidRange("secant loci require 0 <= f <= e");
    if (ambient_rank < 1) throw InvalidRank("secant loci require ambient rank >= 1");
    if (ambient_sections < 0) throw InvalidRange("ambient sections must be >= 0");
    SecantDatum out;
    out.e = e;
    out.f = f;
    out.ambient_rank = ambient_rank;
    out.ambient_sections = ambient_sections;
    out.expected_dim = ambient_rank * e - f * (ambient_sections - e + f);
    return out;
}

} // namespace cohsys
