#include <doctest.h>

#include "xc/threefold.hpp"

using xc::BigInt;
using xc::ChowElement;
using xc::CurveModel;
using xc::Rational;
using xc::SheafClass;
using xc::ThreefoldCohomologyTable;
using xc::ThreefoldModel;
using xc::line_cohomology_x;

namespace {

ChowElement divisor(const ThreefoldModel& m, long long a, long long b) {
    return Rational(a) * m.xi() + Rational(b) * m.f();
}

BigInt chi_line(const ThreefoldModel& m, long long a, long long b) {
    return euler_characteristic(SheafClass(m, 1, divisor(m, a, b), m.zero()));
}

} // namespace

TEST_CASE("the three pushforward cases") {
    for (int c = 0; c <= 4; ++c) {
        ThreefoldCohomologyTable zero = line_cohomology_x(c, -1, 17);
        CHECK(zero.exact());
        for (const auto& r : zero.h) CHECK(r.lo == 0);

        // l1 = 0 is the Bott table of O(d) with h3 = 0.
        ThreefoldCohomologyTable b = line_cohomology_x(c, 0, -3);
        CHECK(b.h[0].lo == 0);
        CHECK(b.h[1].lo == 0);
        CHECK(b.h[2].lo == 1);
        CHECK(b.h[3].lo == 0);

        ThreefoldCohomologyTable s = line_cohomology_x(c, -2, 2);
        CHECK(s.exact());
        CHECK(s.h[0].lo == 0);
        CHECK(s.h[1].lo == 1);
        CHECK(s.h[2].lo == 0);
        CHECK(s.h[3].lo == 0);
    }
}

TEST_CASE("vanishing statements used by the section constructions") {
    for (int c = 0; c <= 4; ++c) {
        for (long long l2 = -10; l2 <= 10; ++l2) {
            ThreefoldCohomologyTable t = line_cohomology_x(c, -1, l2);
            for (const auto& r : t.h) CHECK(r == xc::DimRange{0, 0});
        }
        ThreefoldCohomologyTable t2 = line_cohomology_x(c, -2, 0);
        for (const auto& r : t2.h) CHECK(r == xc::DimRange{0, 0});
        ThreefoldCohomologyTable t3 = line_cohomology_x(c, 2, -1);
        CHECK(t3.h[2] == xc::DimRange{0, 0});  // h^2(O(2 xi - f)) = 0
        ThreefoldCohomologyTable t4 = line_cohomology_x(c, 0, -1);
        for (const auto& r : t4.h) CHECK(r == xc::DimRange{0, 0});
    }
}

TEST_CASE("alternating sums agree with Riemann-Roch") {
    for (int c = 0; c <= 4; ++c) {
        ThreefoldModel m = ThreefoldModel::make(c);
        for (long long l1 = -6; l1 <= 6; ++l1)
            for (long long l2 = -6; l2 <= 6; ++l2) {
                ThreefoldCohomologyTable t = line_cohomology_x(c, l1, l2);
                if (!t.exact()) continue;
                long long alt = t.h[0].lo - t.h[1].lo + t.h[2].lo - t.h[3].lo;
                CHECK(BigInt(alt) == chi_line(m, l1, l2));
            }
    }
}

TEST_CASE("Serre duality at the dimension level") {
    for (int c = 0; c <= 4; ++c)
        for (long long l1 = -6; l1 <= 4; ++l1)
            for (long long l2 = -6; l2 <= 5; ++l2) {
                ThreefoldCohomologyTable t = line_cohomology_x(c, l1, l2);
                ThreefoldCohomologyTable d = line_cohomology_x(c, -2 - l1, -1 - l2);
                if (!t.exact() || !d.exact()) continue;
                for (int i = 0; i < 4; ++i) CHECK(t.h[i] == d.h[3 - i]);
            }
}

TEST_CASE("curve models satisfy their stored invariants") {
    for (int c = 0; c <= 4; ++c) {
        ThreefoldModel m = ThreefoldModel::make(c);
        CurveModel L = CurveModel::fiber_line(m);
        CurveModel M = CurveModel::cubic(m);
        CHECK(curve_twisted_chi(L, m.zero()) == BigInt(1));
        CHECK(curve_twisted_chi(M, m.zero()) == BigInt(1));
        CHECK((L.cls * m.polarization()).degree() == Rational(1));
        CHECK((M.cls * m.polarization()).degree() == Rational(3));
    }
}

TEST_CASE("twisted curve Euler characteristics") {
    for (int c = 0; c <= 4; ++c) {
        ThreefoldModel m = ThreefoldModel::make(c);
        CurveModel L = CurveModel::fiber_line(m);
        CurveModel M = CurveModel::cubic(m);
        for (long long t = -4; t <= 4; ++t) {
            ChowElement th = Rational(t) * m.polarization();
            CHECK(curve_twisted_chi(M, th) == BigInt(3 * t + 1));
            CHECK(curve_twisted_chi(L, th) == BigInt(t + 1));
        }
    }
}

TEST_CASE("restriction cohomology on rational curves") {
    ThreefoldModel m = ThreefoldModel::make(2);
    ChowElement xif = m.xi() * m.f();
    auto r1 = restriction_cohomology(xif, divisor(m, 2, -1));
    CHECK(r1.degree == 3);
    CHECK(r1.h0 == 4);
    CHECK(r1.h1 == 0);
    auto r2 = restriction_cohomology(xif, divisor(m, 0, -1));
    CHECK(r2.degree == -1);
    CHECK(r2.h0 == 0);
    CHECK(r2.h1 == 0);
    auto r3 = restriction_cohomology(xif, divisor(m, 0, -2));
    CHECK(r3.degree == -2);
    CHECK(r3.h0 == 0);
    CHECK(r3.h1 == 1);
    // The pairings above are the same on every model.
    for (int c = 0; c <= 4; ++c) {
        ThreefoldModel mc = ThreefoldModel::make(c);
        CHECK(restriction_cohomology(mc.xi() * mc.f(), divisor(mc, 2, -1)).degree == 3);
    }
    CHECK_THROWS_AS(restriction_cohomology(m.xi(), divisor(m, 1, 0)), xc::param_error);
}

TEST_CASE("normal bundle section counts") {
    ThreefoldModel m = ThreefoldModel::make(0);
    auto nm = normal_bundle_sections(CurveModel::cubic(m));
    CHECK(nm.h0 == 5);
    CHECK(nm.h1 == 0);
    auto nl = normal_bundle_sections(CurveModel::fiber_line(m));
    CHECK(nl.h0 == 2);
    CHECK(nl.h1 == 0);
    // Hypothetical splitting (-2, 0) on a rational curve.
    CurveModel ghost = CurveModel::fiber_line(m);
    ghost.normal_splitting = {-2, 0};
    auto ng = normal_bundle_sections(ghost);
    CHECK(ng.h0 == 1);
    CHECK(ng.h1 == 1);
}

TEST_CASE("the degree-1 rank-0 sheaf obeys the degree law") {
    for (int c = 0; c <= 4; ++c) {
        ThreefoldModel m = ThreefoldModel::make(c);
        ChowElement f2 = m.f() * m.f();
        ChowElement c3 = Rational(2) * (m.xi() * f2);
        SheafClass T(m, 0, m.zero(), -f2, c3);
        for (long long t = -3; t <= 3; ++t) {
            ChowElement th = Rational(t) * m.polarization();
            CHECK(euler_characteristic(twist(T, th)) == BigInt(t + 2));
        }
        CHECK(euler_characteristic(twist(T, Rational(-2) * m.polarization())) ==
              BigInt(0));
    }
}

TEST_CASE("bounds-only twists inherit the bracketing") {
    ThreefoldCohomologyTable t = line_cohomology_x(3, -4, 2);
    CHECK(!t.exact());
    CHECK(t.h[0] == xc::DimRange{0, 0});
    CHECK(!t.h[1].exact());
}
