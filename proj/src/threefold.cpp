#include "xc/threefold.hpp"

namespace xc {

namespace {

SheafClass line_bundle_class(const ThreefoldModel& m, const ChowElement& D) {
    return SheafClass(m, 1, D, m.zero());
}

long long rational_curve_h0(long long d) { return d >= -1 ? d + 1 : 0; }
long long rational_curve_h1(long long d) { return d <= -1 ? -d - 1 : 0; }

} // namespace

ThreefoldCohomologyTable line_cohomology_x(int c, long long l1, long long l2) {
    fano_bundle(c);  // validates c on every path
    ThreefoldCohomologyTable t;
    if (l1 == -1) return t;  // all pushforwards vanish
    if (l1 >= 0) {
        SurfaceCohomologyTable s = sym_power_cohomology(c, l1, l2);
        t.h[0] = s.h[0];
        t.h[1] = s.h[1];
        t.h[2] = s.h[2];
        t.h[3] = {0, 0};
        return t;
    }
    // l1 <= -2: R^1 pushforward shifts the surface table up one degree;
    // (S^k F)^dual = S^k F(-2k) turns the dual twist into S^{-l1-2} F_c
    // twisted by l2 + 2 l1 + 2.
    SurfaceCohomologyTable s = sym_power_cohomology(c, -l1 - 2, l2 + 2 * l1 + 2);
    t.h[0] = {0, 0};
    t.h[1] = s.h[0];
    t.h[2] = s.h[1];
    t.h[3] = s.h[2];
    return t;
}

CurveModel CurveModel::fiber_line(const ThreefoldModel& m) {
    ChowElement f = m.f();
    CurveModel c{m, f * f, {-f, -f}, Rational(-2) * f, {0, 0}};
    return c;
}

CurveModel CurveModel::cubic(const ThreefoldModel& m) {
    ChowElement xi = m.xi(), f = m.f();
    CurveModel c{m, xi * f, {-xi, -f}, -xi - f, {1, 2}};
    return c;
}

BigInt curve_twisted_chi(const CurveModel& curve, const ChowElement& D) {
    if (!D.is_homogeneous(1))
        throw param_error("curve_twisted_chi: twist must be homogeneous of degree 1");
    const ThreefoldModel& m = curve.model;
    BigInt chi = euler_characteristic(line_bundle_class(m, D));
    chi = chi - euler_characteristic(line_bundle_class(m, D + curve.koszul_step[0]));
    chi = chi - euler_characteristic(line_bundle_class(m, D + curve.koszul_step[1]));
    chi = chi + euler_characteristic(line_bundle_class(m, D + curve.koszul_top));
    return chi;
}

RestrictionCohomology restriction_cohomology(const ChowElement& curve_class,
                                             const ChowElement& D) {
    if (!curve_class.is_homogeneous(2))
        throw param_error("restriction_cohomology: curve class must have degree 2");
    if (!D.is_homogeneous(1))
        throw param_error("restriction_cohomology: divisor must have degree 1");
    Rational d = (curve_class * D).degree();
    if (!d.is_integer() || !d.num().fits_int64())
        throw param_error("restriction_cohomology: non-integral restriction degree");
    RestrictionCohomology r;
    r.degree = d.num().as_int64();
    r.h0 = rational_curve_h0(r.degree);
    r.h1 = rational_curve_h1(r.degree);
    return r;
}

SectionCount normal_bundle_sections(const CurveModel& curve) {
    SectionCount s;
    for (int d : curve.normal_splitting) {
        s.h0 += rational_curve_h0(d);
        s.h1 += rational_curve_h1(d);
    }
    return s;
}

} // namespace xc
