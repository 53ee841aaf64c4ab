#pragma once

#include "xc/errors.hpp"
#include "xc/rational.hpp"

#include <array>
#include <vector>

namespace xc {

/// Closed integer interval for a cohomology dimension. Exact when lo == hi.
struct DimRange {
    long long lo = 0, hi = 0;
    bool exact() const { return lo == hi; }
    friend bool operator==(const DimRange& a, const DimRange& b) {
        return a.lo == b.lo && a.hi == b.hi;
    }
};

/// h^0..h^2 on the projective plane. Entries are bracketing intervals; the
/// table is exact when every interval is a point.
struct SurfaceCohomologyTable {
    std::array<DimRange, 3> h{};
    bool exact() const { return h[0].exact() && h[1].exact() && h[2].exact(); }
    /// Point values; throw consistency_error when called on a bounds-only entry.
    long long h0() const;
    long long h1() const;
    long long h2() const;
    friend bool operator==(const SurfaceCohomologyTable& a,
                           const SurfaceCohomologyTable& b) {
        return a.h == b.h;
    }
};

/// Presentation data of the rank-2 Fano bundle F_c on the plane.
struct FanoBundleData {
    enum class Presentation { kSplitSum, kLineKernel, kRank2Kernel };
    int c = 0;
    Presentation kind = Presentation::kSplitSum;
    std::vector<int> middle;  // summand degrees (split) or ambient degrees
    std::vector<int> kernel;  // kernel summand degrees; empty for split sums
};

/// The five bundles: F_0 = O + O(2), F_1 = O(1)^2, F_2 a quotient of
/// O(1) + O^2 by O(-1), F_3 a quotient of O^4 by O(-1)^2, F_4 a quotient of
/// O^3 by O(-2). Derived Chern data is always (c1, c2) = (2, c).
FanoBundleData fano_bundle(int c);

/// Cohomology of O(d) on the plane: h0 = C(d+2,2) for d >= 0, h2 = C(-d-1,2)
/// for d <= -3, h1 = 0. Always exact.
SurfaceCohomologyTable bott_line(long long d);

/// Exact dimensions of H^i(P^2, S^m F_c (b)).
///
/// Split sums reduce to Bott; line-kernel quotients use the induced
/// presentation 0 -> S^{m-1}E(k) -> S^m E -> S^m F -> 0, which pins h^0 by
/// left exactness, h^2 by Serre duality through (S^m F)^dual = S^m F(-2m),
/// and h^1 by the resolution Euler characteristic. The rank-2 kernel of F_3
/// leaves a connecting-map rank free in a narrow range of twists; there the
/// table carries bracketing bounds instead of guessed values.
///
/// Every table is cross-checked against surface_chi; a mismatch throws
/// consistency_error (for F_2 this guards the chosen presentation).
SurfaceCohomologyTable sym_power_cohomology(int c, long long m, long long b);

/// Riemann-Roch on the plane from the Chern data of S^m F_c (b):
/// chi = rank + c1(c1+3)/2 - c2. Independent of the resolution chase.
Rational surface_chi(int c, long long m, long long b);

namespace detail {

/// Formal sum of line bundles O(d) with multiplicities.
struct LineBundleSum {
    std::vector<std::pair<long long, long long>> parts;  // (degree, count)
    long long h0() const;
    long long h2() const;
    Rational chi() const;
};

/// S^m of a direct sum of line bundles with the given degrees, twisted by b.
LineBundleSum sym_power_of_sum(const std::vector<int>& degrees, long long m,
                               long long b);

/// Exact table for S^m F (b) where F is presented as a quotient of a line
/// bundle sum by a single line bundle of degree `kernel_deg`; `det_f` is the
/// determinant degree of F (2 for every F_c).
SurfaceCohomologyTable sym_table_line_kernel(int kernel_deg,
                                             const std::vector<int>& middle,
                                             int det_f, long long m, long long b);

} // namespace detail

} // namespace xc
