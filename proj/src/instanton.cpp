#include "xc/instanton.hpp"

namespace xc {

namespace {

long long coeff_ll(const ChowElement& e, int basis_index, const char* what) {
    const Rational& q = e.coeff(basis_index);
    if (!q.is_integer() || !q.num().fits_int64())
        throw param_error(std::string(what) + ": expected a small integer coefficient, got " +
                          q.to_string());
    return q.num().as_int64();
}

long long deg_ll(const ChowElement& e, const char* what) {
    return coeff_ll(e, ChowElement::kXiF2, what);
}

} // namespace

InstantonClass instanton_invariants(long long alpha, long long beta, int c) {
    ThreefoldModel model = ThreefoldModel::make(c);
    SheafClass sheaf = orientable_rank2_class(model, alpha, beta);
    InstantonClass out(sheaf, c, alpha, beta);
    out.charge = 3 * alpha + beta + c - 21;
    // Cross-check the charge against -chi(E(-h)).
    BigInt chi = euler_characteristic(twist(sheaf, -model.polarization()));
    if (chi != BigInt(-out.charge))
        throw consistency_error("instanton_invariants: charge disagrees with -chi(E(-h))");
    out.orientable = orientability_check(sheaf);
    out.ulrich = out.charge == 0;
    out.alpha_admissible = alpha >= 5;
    out.charge_admissible = out.charge >= 0;
    // The recorded fiber-line splitting must pair with c1 . f^2.
    ChowElement f2 = model.f() * model.f();
    long long pairing = deg_ll(sheaf.c1 * f2, "instanton_invariants line pairing");
    if (pairing != out.line_splitting[0] + out.line_splitting[1])
        throw consistency_error("instanton_invariants: line splitting record mismatch");
    if (!out.alpha_admissible)
        out.note = "alpha < 5 rules out h-instanton bundles";
    else if (!out.charge_admissible)
        out.note = "negative charge 3a+b+c-21 rules out h-instanton sheaves";
    return out;
}

bool orientability_check(const SheafClass& s) {
    ChowElement target = Rational(s.rank, 2) *
                         (Rational(4) * s.model.polarization() + s.model.canonical_divisor());
    return s.c1 == target;
}

SerreFamily serre_family(long long m, int c) {
    if (m < 1) throw param_error("serre_family: m must be at least 1");
    ThreefoldModel model = ThreefoldModel::make(c);
    const long long alpha = m + 4;
    SerreFamily fam(instanton_invariants(alpha, 2, c), m);
    fam.valid = (c >= 1 && m >= 2) || (c == 0 && m >= 3);
    if (!fam.valid)
        fam.reason = "construction needs alpha >= 6 when c >= 1 and alpha >= 7 when c = 0";
    fam.cls.ext1 = 10 * alpha + 4 * c - 54;
    fam.cls.ext2 = 0;
    // 5m from moving the m curves plus (m-1) from the extension space modulo
    // the section.
    SectionCount nb = normal_bundle_sections(CurveModel::cubic(model));
    if (nb.h1 != 0)
        throw consistency_error("serre_family: obstructed curve moduli");
    fam.family_dim = nb.h0 * m + (serre_ext_dimension(m) - 1);
    if (fam.family_dim != 6 * m - 1)
        throw consistency_error("serre_family: family dimension mismatch");
    fam.codim = 4 * alpha + 4 * c - 27;
    fam.family_dim_caveat = c == 0 && (alpha == 7 || alpha == 8);
    return fam;
}

PullbackFamily pullback_family(long long l, int c) {
    if (l < 1) throw param_error("pullback_family: l must be at least 1");
    ThreefoldModel model = ThreefoldModel::make(c);
    const long long beta = l * l + 2 * l + 3 - c;
    PullbackFamily fam(instanton_invariants(5, beta, c), l);

    // Recompute the Chern data from the resolution
    // 0 -> G -> O(xi+(l+2)f)^(2l+3) -> O(xi+(l+3)f)^(2l+1) -> 0
    // through the Chern character, instead of transcribing it.
    ChowElement d1 = model.xi() + Rational(l + 2) * model.f();
    ChowElement d2 = model.xi() + Rational(l + 3) * model.f();
    auto exp3 = [&](const ChowElement& d) {
        return model.one() + d + Rational(1, 2) * (d * d) +
               Rational(1, 6) * (d * d * d);
    };
    ChowElement ch = Rational(2 * l + 3) * exp3(d1) - Rational(2 * l + 1) * exp3(d2);
    ChowElement c1 = ch.graded_component(1);
    ChowElement ch2 = ch.graded_component(2);
    ChowElement ch3 = ch.graded_component(3);
    ChowElement c2 = Rational(1, 2) * (c1 * c1 - Rational(2) * ch2);
    ChowElement c3 = Rational(2) * ch3 - Rational(1, 3) * (c1 * c1 * c1) + c1 * c2;
    if (!(c1 == fam.cls.sheaf.c1 && c2 == fam.cls.sheaf.c2 && c3 == model.zero()))
        throw consistency_error("pullback_family: resolution Chern data mismatch");

    if (fam.cls.charge != (l - 1) * (l + 3))
        throw consistency_error("pullback_family: charge mismatch");
    fam.cls.ext1 = 4 * l * (l + 2);
    fam.cls.ext2 = 0;
    fam.dim_hom_space = 3 * (2 * l + 3) * (2 * l + 1);
    fam.dim_group = (2 * l + 3) * (2 * l + 3) + (2 * l + 1) * (2 * l + 1) - 1;
    fam.double_count = fam.dim_hom_space - fam.dim_group;
    if (fam.double_count != *fam.cls.ext1)
        throw consistency_error("pullback_family: group quotient count disagrees with ext1");
    return fam;
}

Rank0Data Rank0Data::line_sheaf(const ThreefoldModel& m) {
    ChowElement f2 = m.f() * m.f();
    return Rank0Data{f2, 1, 2};
}

InstantonClass elementary_transform(const InstantonClass& e, const Rank0Data& t) {
    if (t.degree < 0)
        throw param_error("elementary_transform: negative degree");
    if (!t.curve_class.is_homogeneous(2))
        throw param_error("elementary_transform: curve class must have degree 2");
    ThreefoldModel model = ThreefoldModel::make(e.c);
    // For a rank-0 instanton the degree is pinned by chi(T(th)) = d(t+2).
    long long pairing = deg_ll(t.curve_class * model.polarization(),
                               "elementary_transform pairing");
    if (pairing != t.degree)
        throw param_error("elementary_transform: degree must equal deg(class . h)");

    ChowElement new_c2 = e.sheaf.c2 + t.curve_class;
    long long alpha = coeff_ll(new_c2, ChowElement::kXiF, "elementary_transform c2");
    long long beta = coeff_ll(new_c2, ChowElement::kF2, "elementary_transform c2");
    InstantonClass out = instanton_invariants(alpha, beta, e.c);
    if (out.charge != e.charge + t.degree)
        throw consistency_error("elementary_transform: charge bookkeeping failed");
    ChowElement f2 = model.f() * model.f();
    if (t.curve_class == f2 && t.degree == 1) {
        if (e.ext1) out.ext1 = *e.ext1 + 4;
        out.ext2 = e.ext2;
    }
    return out;
}

HoppeRegion hoppe_region(int c, long long amin, long long amax, long long bmin,
                         long long bmax) {
    if (amin > amax || bmin > bmax)
        throw param_error("hoppe_region: empty window");
    ThreefoldModel model = ThreefoldModel::make(c);
    ChowElement h2 = model.polarization() * model.polarization();
    HoppeRegion out;
    out.pair_xi = deg_ll(model.xi() * h2, "hoppe pairing");
    out.pair_f = deg_ll(model.f() * h2, "hoppe pairing");
    ChowElement c1 = Rational(2) * model.xi() + Rational(3) * model.f();
    out.mu = (c1 * h2).degree() / Rational(2);
    out.bound = c - 15;
    for (long long a = amin; a <= amax; ++a)
        for (long long b = bmin; b <= bmax; ++b)
            if (out.pair_xi * a + out.pair_f * b <= out.bound)
                out.points.emplace_back(a, b);
    return out;
}

EffectivityQuadratic effectivity_quadratic(int c, long long a, long long b,
                                           int variant) {
    if (variant != 1 && variant != 2)
        throw param_error("effectivity_quadratic: variant must be 1 or 2");
    ThreefoldModel model = ThreefoldModel::make(c);
    ChowElement xi = model.xi(), f = model.f();
    ChowElement divisor = variant == 1
                              ? Rational(a) * xi + Rational(b + 2) * f
                              : Rational(a + 2) * xi + Rational(b + 1) * f;
    // deg(D . (k xi + f)^2) = deg(D xi^2) k^2 + 2 deg(D xi f) k + deg(D f^2).
    EffectivityQuadratic out;
    out.q2 = deg_ll(divisor * (xi * xi), "effectivity q2");
    out.q1 = 2 * deg_ll(divisor * (xi * f), "effectivity q1");
    out.q0 = deg_ll(divisor * (f * f), "effectivity q0");
    // Double-entry check against the transcribed closed forms.
    long long e2, e1, e0;
    if (variant == 1) {
        e2 = (4 - c) * a + 2 * b + 4;
        e1 = 4 * a + 2 * b + 4;
        e0 = a;
    } else {
        e2 = (4 - c) * a + 2 * b + 10 - 2 * c;
        e1 = 4 * a + 2 * b + 10;
        e0 = a + 2;
    }
    if (out.q2 != e2 || out.q1 != e1 || out.q0 != e0)
        throw consistency_error("effectivity_quadratic: expansion disagrees with closed form");
    bool hypotheses = a >= 0 && (9 - c) * a + 4 * b <= c - 15 &&
                      (variant == 1 || c >= 2);
    out.not_effective = hypotheses && out.q2 < 0;
    return out;
}

long long serre_ext_dimension(long long m) {
    if (m < 0) throw param_error("serre_ext_dimension: m must be nonnegative");
    // The pairing deg(xi f . f) is model independent; any c works here.
    ThreefoldModel model = ThreefoldModel::make(0);
    ChowElement cubic_class = model.xi() * model.f();
    ChowElement minus2f = Rational(-2) * model.f();
    long long total = 0;
    for (long long i = 0; i < m; ++i)
        total += restriction_cohomology(cubic_class, minus2f).h1;
    return total;
}

Rank0SolverResult rank0_constraint_solver(long long window) {
    if (window < 1) throw param_error("rank0_constraint_solver: window must be positive");
    Rank0SolverResult out;
    for (long long eta = -window; eta <= window; ++eta)
        for (long long theta = -window; theta <= window; ++theta)
            if (2 * eta + theta + 1 >= 0 && eta >= 0 && 3 * eta + theta < 0)
                out.all_solutions.push_back({eta, theta});
    if (out.all_solutions.size() != 1 || !(out.all_solutions[0] == Rank0Constraint{0, -1}))
        throw consistency_error("rank0_constraint_solver: solution set is not {(0,-1)}");
    out.solution = out.all_solutions[0];
    // c2(T) = eta xi f + theta f^2 = -f^2; c3 = deg((-2 xi - 3 f) . c2(T)).
    // No xi^2 reduction occurs, so the value is the same on every X_c.
    ThreefoldModel model = ThreefoldModel::make(0);
    ChowElement c2 = Rational(out.solution.eta) * (model.xi() * model.f()) +
                     Rational(out.solution.theta) * (model.f() * model.f());
    ChowElement minus_c1 = Rational(-2) * model.xi() + Rational(-3) * model.f();
    out.c3 = deg_ll(minus_c1 * c2, "rank0 solver c3");
    return out;
}

} // namespace xc
