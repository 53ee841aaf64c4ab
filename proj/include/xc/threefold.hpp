#pragma once

#include "xc/sheaf.hpp"
#include "xc/surface.hpp"

namespace xc {

/// h^0..h^3 on X_c, with bracketing intervals as on the surface.
struct ThreefoldCohomologyTable {
    std::array<DimRange, 4> h{};
    bool exact() const {
        return h[0].exact() && h[1].exact() && h[2].exact() && h[3].exact();
    }
    friend bool operator==(const ThreefoldCohomologyTable& a,
                           const ThreefoldCohomologyTable& b) {
        return a.h == b.h;
    }
};

/// Cohomology of O_X(l1 xi + l2 f) by pushforward to the plane:
///   l1 >= 0   : H^i(S^{l1} F_c (l2)), h3 = 0;
///   l1 == -1  : zero;
///   l1 <= -2  : H^{i-1}(S^{-l1-2} F_c (l2 + 2 l1 + 2)), h0 = 0.
/// Exactness is inherited from the surface table.
ThreefoldCohomologyTable line_cohomology_x(int c, long long l1, long long l2);

/// One of the two rational curve classes used on X_c: the fiber line
/// L in |f^2| and the degree-3 section curve M in |xi f|. Both are complete
/// intersections of the two recorded divisors.
struct CurveModel {
    ThreefoldModel model;
    ChowElement cls;                        // class in A^2
    std::array<ChowElement, 2> koszul_step; // the two (negative) divisors
    ChowElement koszul_top;                 // their sum
    std::array<int, 2> normal_splitting;    // degrees of N_{C|X} on P^1

    /// L: divisors (-f, -f), normal bundle O + O.
    static CurveModel fiber_line(const ThreefoldModel& m);
    /// M: divisors (-xi, -f), normal bundle O(1) + O(2).
    static CurveModel cubic(const ThreefoldModel& m);
};

/// chi(O_C(D)) through the Koszul resolution of O_C twisted by D.
BigInt curve_twisted_chi(const CurveModel& curve, const ChowElement& D);

struct RestrictionCohomology {
    long long degree = 0, h0 = 0, h1 = 0;
};

/// Restriction of O_X(D) to a rational curve of the given class:
/// d = deg(curve_class . D), h0 = max(d+1, 0), h1 = max(-d-1, 0).
RestrictionCohomology restriction_cohomology(const ChowElement& curve_class,
                                             const ChowElement& D);

struct SectionCount {
    long long h0 = 0, h1 = 0;
};

/// Sections of the normal bundle from the recorded splitting degrees.
SectionCount normal_bundle_sections(const CurveModel& curve);

} // namespace xc
