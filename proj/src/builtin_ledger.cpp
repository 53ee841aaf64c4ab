#include "xc/ledger.hpp"

namespace xc {

// The identities shipped with `verify`. Citations point into the source
// write-up of the geometry (section / numbered statement tags).
const char* builtin_ledger_text() {
    return R"json({
  "version": 1,
  "entries": [
    {"id": "chow.deg.xi3", "kind": "chow-identity",
     "description": "deg(xi^3) = 4 - c on every X_c",
     "citation": "sec. 4",
     "inputs": {"c": "all", "expr": "xi^3"},
     "expected": {"degree": [4, 3, 2, 1, 0]}},
    {"id": "chow.deg.xi2f", "kind": "chow-identity",
     "description": "deg(xi^2 f) = 2",
     "citation": "sec. 4",
     "inputs": {"c": "all", "expr": "xi^2*f"},
     "expected": {"degree": 2}},
    {"id": "chow.deg.xif2", "kind": "chow-identity",
     "description": "deg(xi f^2) = 1",
     "citation": "sec. 4",
     "inputs": {"c": "all", "expr": "xi*f^2"},
     "expected": {"degree": 1}},
    {"id": "chow.deg.f3", "kind": "chow-identity",
     "description": "deg(f^3) = 0",
     "citation": "sec. 4",
     "inputs": {"c": "all", "expr": "f^3"},
     "expected": {"degree": 0}},
    {"id": "chow.deg.h3", "kind": "chow-identity",
     "description": "deg(h^3) = 13 - c for the polarization h = xi + f",
     "citation": "sec. 4",
     "inputs": {"c": "all", "expr": "h^3"},
     "expected": {"degree": [13, 12, 11, 10, 9]}},
    {"id": "chow.rel.xi2.c1", "kind": "chow-identity",
     "description": "xi^2 = 2 xi f - f^2 on X_1",
     "citation": "eq. (4.1)",
     "inputs": {"c": 1, "expr": "xi^2", "equals": "2*xi*f - f^2"},
     "expected": {"equal": true}},
    {"id": "chow.rel.xi2.c2", "kind": "chow-identity",
     "description": "xi^2 = 2 xi f - 2 f^2 on X_2",
     "citation": "eq. (4.1)",
     "inputs": {"c": 2, "expr": "xi^2", "equals": "2*xi*f - 2*f^2"},
     "expected": {"equal": true}},
    {"id": "chow.rel.f3", "kind": "chow-identity",
     "description": "f^3 = 0 in every A(X_c)",
     "citation": "eq. (4.1)",
     "inputs": {"c": "all", "expr": "f*f*f", "equals": "0"},
     "expected": {"equal": true}},
    {"id": "chow.twist.serre-normalization", "kind": "chow-identity",
     "description": "twisting the section bundle by 2f lands on c1 = 2 xi + 3 f, c2 = (m+4) xi f + 2 f^2 (m = 2)",
     "citation": "Prop 5.2",
     "inputs": {"c": "all",
                "twist_class": {"rank": 2, "c1": "2*xi - f", "c2": "2*xi*f", "c3": "0"},
                "by": "2*f"},
     "expected": {"c1": "2*xi + 3*f", "c2": "6*xi*f + 2*f^2", "c3": "0"}},

    {"id": "chi.structure-sheaf", "kind": "chi-identity",
     "description": "chi(O_X) = 1 on every X_c",
     "citation": "Lemma 4.1",
     "inputs": {"c": "all", "class": {"rank": 1, "c1": "0", "c2": "0"}},
     "expected": {"chi": 1}},
    {"id": "chi.charge.minus-h", "kind": "chi-identity",
     "description": "chi(E(-h)) = -3a - b + 21 - c at (a, b) = (6, 2)",
     "citation": "Lemma 5.1",
     "inputs": {"c": "all",
                "class": {"rank": 2, "c1": "2*xi + 3*f", "c2": "6*xi*f + 2*f^2"},
                "twist": "-h"},
     "expected": {"chi": [1, 0, -1, -2, -3]}},
    {"id": "chi.alpha-bound.a6", "kind": "chi-identity",
     "description": "chi(E(-2 xi - f)) = 5 - a at a = 6",
     "citation": "Lemma 5.1",
     "inputs": {"c": "all",
                "class": {"rank": 2, "c1": "2*xi + 3*f", "c2": "6*xi*f + 2*f^2"},
                "twist": "-2*xi - f"},
     "expected": {"chi": -1}},
    {"id": "chi.alpha-bound.a9", "kind": "chi-identity",
     "description": "chi(E(-2 xi - f)) = 5 - a at a = 9",
     "citation": "Lemma 5.1",
     "inputs": {"c": "all",
                "class": {"rank": 2, "c1": "2*xi + 3*f", "c2": "9*xi*f + 5*f^2"},
                "twist": "-2*xi - f"},
     "expected": {"chi": -4}},
    {"id": "chi.rr.constant-term", "kind": "chi-identity",
     "description": "closed form at (0,0) is -6a - 2b + 68 - 4c, checked against the chern route",
     "citation": "Lemma 5.1",
     "inputs": {"c": "all", "rr": {"alpha": 3, "beta": 7, "lambda1": 0, "lambda2": 0}},
     "expected": {"chi": [36, 32, 28, 24, 20]}},
    {"id": "chi.rr.minus-h", "kind": "chi-identity",
     "description": "closed form at (-1,-1) reproduces the charge formula",
     "citation": "Lemma 5.1",
     "inputs": {"c": "all", "rr": {"alpha": 6, "beta": 2, "lambda1": -1, "lambda2": -1}},
     "expected": {"chi": [1, 0, -1, -2, -3]}},
    {"id": "chi.rr.alpha-witness", "kind": "chi-identity",
     "description": "closed form at (-2,-1) equals 5 - a",
     "citation": "Lemma 5.1",
     "inputs": {"c": "all", "rr": {"alpha": 8, "beta": -3, "lambda1": -2, "lambda2": -1}},
     "expected": {"chi": -3}},
    {"id": "chi.endo.orientable", "kind": "chi-identity",
     "description": "chi(E tensor E-dual) agrees with deg((-K)(c1^2 - 4 c2))/2 + 4",
     "citation": "Lemma 5.3",
     "inputs": {"c": "all",
                "endomorphism": {"c1": "2*xi + 3*f", "c2": "6*xi*f + 2*f^2"}},
     "expected": {"chi": [-5, -9, -13, -17, -21]}},
    {"id": "chi.endo.trivial", "kind": "chi-identity",
     "description": "chi(End) of the trivial rank-2 class is 4",
     "citation": "Lemma 5.3",
     "inputs": {"c": "all", "endomorphism": {"c1": "0", "c2": "0"}},
     "expected": {"chi": 4}},
    {"id": "chi.curve.cubic", "kind": "chi-identity",
     "description": "chi(O_M) = 1 through the Koszul resolution of the degree-3 curve",
     "citation": "sec. 4 (4.7)",
     "inputs": {"c": "all", "curve": "cubic"},
     "expected": {"chi": 1}},
    {"id": "chi.curve.cubic-twisted", "kind": "chi-identity",
     "description": "chi(O_M(t h)) = 3t + 1 at t = 2",
     "citation": "sec. 4",
     "inputs": {"c": "all", "curve": "cubic", "twist": "2*h"},
     "expected": {"chi": 7}},
    {"id": "chi.curve.line-twisted", "kind": "chi-identity",
     "description": "chi(O_L(t h)) = t + 1 at t = 5",
     "citation": "sec. 6 (6.1)",
     "inputs": {"c": "all", "curve": "line", "twist": "5*h"},
     "expected": {"chi": 6}},
    {"id": "chi.rank0.degree-law", "kind": "chi-identity",
     "description": "the degree-1 rank-0 sheaf has chi(T(t h)) = t + 2 at t = 3",
     "citation": "Def 2.4 / Lemma 2.8",
     "inputs": {"c": "all",
                "class": {"rank": 0, "c1": "0", "c2": "-f^2", "c3": "2*xi*f^2"},
                "twist": "3*h"},
     "expected": {"chi": 5}},
    {"id": "chi.rank0.vanishing-twist", "kind": "chi-identity",
     "description": "chi(T(-2h)) = 0 for the degree-1 rank-0 sheaf",
     "citation": "Def 2.4",
     "inputs": {"c": "all",
                "class": {"rank": 0, "c1": "0", "c2": "-f^2", "c3": "2*xi*f^2"},
                "twist": "-2*h"},
     "expected": {"chi": 0}},
    {"id": "chi.rank0.solver-affine", "kind": "chi-identity",
     "description": "chi(T_s(a xi + b f)) = a + 2 for the solver's rank-0 class, at (3, -7)",
     "citation": "sec. 6",
     "inputs": {"c": "all",
                "class": {"rank": 0, "c1": "0", "c2": "-f^2", "c3": "2*xi*f^2"},
                "twist": "3*xi - 7*f"},
     "expected": {"chi": 5}},

    {"id": "coh.x.xi-exponent-minus-one", "kind": "cohomology-vanishing",
     "description": "all cohomology of O(-xi + 17 f) vanishes",
     "citation": "Lemma 4.1",
     "inputs": {"space": "threefold", "c": "all", "l1": -1, "l2": 17},
     "expected": {"zero": true}},
    {"id": "coh.x.minus-xi-plus-f", "kind": "cohomology-vanishing",
     "description": "h^i(O(-xi + f)) = 0, used for h^0(E(-h)) = h^0(I_Z(xi))",
     "citation": "Prop 5.2",
     "inputs": {"space": "threefold", "c": "all", "l1": -1, "l2": 1},
     "expected": {"zero": true}},
    {"id": "coh.x.minus-2xi", "kind": "cohomology-vanishing",
     "description": "h^i(O(-2 xi)) = 0, used for h^1(E(-2h)) = h^1(I_Z(-f))",
     "citation": "Prop 5.2",
     "inputs": {"space": "threefold", "c": "all", "l1": -2, "l2": 0},
     "expected": {"zero": true}},
    {"id": "coh.x.minus-f", "kind": "cohomology-vanishing",
     "description": "h^i(O(-f)) = 0, used in the chi(O_M) count",
     "citation": "sec. 4",
     "inputs": {"space": "threefold", "c": "all", "l1": 0, "l2": -1},
     "expected": {"zero": true}},
    {"id": "coh.x.2xi-minus-f", "kind": "cohomology-vanishing",
     "description": "h^2(O(2 xi - f)) = 0 on every X_c (full tables recorded)",
     "citation": "Prop 5.4",
     "inputs": {"space": "threefold", "c": "all", "l1": 2, "l2": -1},
     "expected": {"h": [[13,0,0,0],[9,0,0,0],[5,0,0,0],[1,0,0,0],[0,3,0,0]]}},
    {"id": "coh.x.shifted-line", "kind": "cohomology-vanishing",
     "description": "O(-2 xi + 2 f) has one-dimensional h^1 and nothing else",
     "citation": "Lemma 4.1",
     "inputs": {"space": "threefold", "c": "all", "l1": -2, "l2": 2},
     "expected": {"h": [0, 1, 0, 0]}},
    {"id": "coh.x.bounds.c3", "kind": "cohomology-vanishing",
     "description": "O(-4 xi + 2 f) on X_3 lands in the non-forced band: bounds only",
     "citation": "Lemma 4.1",
     "inputs": {"space": "threefold", "c": 3, "l1": -4, "l2": 2},
     "expected": {"bounds_only": true}},
    {"id": "coh.sym.f4", "kind": "cohomology-vanishing",
     "description": "h^0(F_4) = 3 with no higher cohomology",
     "citation": "Table 1",
     "inputs": {"space": "surface", "c": 4, "m": 1, "b": 0},
     "expected": {"h": [3, 0, 0]}},
    {"id": "coh.sym.global-generation", "kind": "cohomology-vanishing",
     "description": "h^0(F_c) = 7 - c >= 2 and h^1 = h^2 = 0 for every c",
     "citation": "Table 1",
     "inputs": {"space": "surface", "c": "all", "m": 1, "b": 0},
     "expected": {"h": [[7,0,0],[6,0,0],[5,0,0],[4,0,0],[3,0,0]]}},
    {"id": "coh.sym.split.c1", "kind": "cohomology-vanishing",
     "description": "S^2 F_1 (-3) = O(-1)^3 has no cohomology",
     "citation": "Table 1",
     "inputs": {"space": "surface", "c": 1, "m": 2, "b": -3},
     "expected": {"h": [0, 0, 0]}},
    {"id": "coh.sym.split.c0", "kind": "cohomology-vanishing",
     "description": "F_0 = O + O(2) has h^0 = 7",
     "citation": "Table 1",
     "inputs": {"space": "surface", "c": 0, "m": 1, "b": 0},
     "expected": {"h": [7, 0, 0]}},
    {"id": "coh.sym.bott", "kind": "cohomology-vanishing",
     "description": "S^0 F_c (-3) = O(-3) has h^2 = 1 by duality with O(0)",
     "citation": "Lemma 4.1",
     "inputs": {"space": "surface", "c": "all", "m": 0, "b": -3},
     "expected": {"h": [0, 0, 1]}},
    {"id": "coh.sym.bounds.c3", "kind": "cohomology-vanishing",
     "description": "S^2 F_3 (-2) sits in the non-forced band: bounds only",
     "citation": "Table 1",
     "inputs": {"space": "surface", "c": 3, "m": 2, "b": -2},
     "expected": {"bounds_only": true}},
    {"id": "coh.restriction.cubic.positive", "kind": "cohomology-vanishing",
     "description": "deg(xi f . (2 xi - f)) = 3, so the restriction has 4 sections",
     "citation": "Prop 5.4",
     "inputs": {"space": "restriction", "c": "all", "curve_class": "xi*f", "divisor": "2*xi - f"},
     "expected": {"degree": 3, "h0": 4, "h1": 0}},
    {"id": "coh.restriction.cubic.minus-f", "kind": "cohomology-vanishing",
     "description": "deg(xi f . (-f)) = -1 kills sections and h^1",
     "citation": "Prop 5.2",
     "inputs": {"space": "restriction", "c": "all", "curve_class": "xi*f", "divisor": "-f"},
     "expected": {"degree": -1, "h0": 0, "h1": 0}},
    {"id": "coh.restriction.cubic.minus-2f", "kind": "cohomology-vanishing",
     "description": "deg(xi f . (-2f)) = -2 leaves a one-dimensional h^1 per component",
     "citation": "Lemma 4.4",
     "inputs": {"space": "restriction", "c": "all", "curve_class": "xi*f", "divisor": "-2*f"},
     "expected": {"degree": -2, "h0": 0, "h1": 1}},
    {"id": "coh.normal.cubic", "kind": "cohomology-vanishing",
     "description": "h^0(N_{M|X}) = 5 and h^1 = 0 from the splitting O(1) + O(2)",
     "citation": "sec. 4",
     "inputs": {"space": "normal-bundle", "c": "all", "curve": "cubic"},
     "expected": {"h0": 5, "h1": 0}},
    {"id": "coh.normal.line", "kind": "cohomology-vanishing",
     "description": "h^0(N_{L|X}) = 2 and h^1 = 0 from the trivial splitting",
     "citation": "sec. 6",
     "inputs": {"space": "normal-bundle", "c": "all", "curve": "line"},
     "expected": {"h0": 2, "h1": 0}},

    {"id": "inst.invariants.ulrich", "kind": "family-invariant",
     "description": "(a, b, c) = (6, 2, 1) has charge 0: the Ulrich case",
     "citation": "Main Thm 1",
     "inputs": {"family": "invariants", "c": 1, "alpha": 6, "beta": 2},
     "expected": {"charge": 0, "ulrich": true, "alpha_admissible": true,
                  "charge_admissible": true, "orientable": true}},
    {"id": "inst.invariants.pullback-charge", "kind": "family-invariant",
     "description": "(5, l^2+2l+3-c, c) has charge (l-1)(l+3); l = 2, c = 3",
     "citation": "sec. 7",
     "inputs": {"family": "invariants", "c": 3, "alpha": 5, "beta": 8},
     "expected": {"charge": 5, "charge_admissible": true}},
    {"id": "inst.invariants.alpha-too-small", "kind": "family-invariant",
     "description": "alpha = 4 < 5 is flagged inadmissible, not an error",
     "citation": "Lemma 5.1",
     "inputs": {"family": "invariants", "c": 0, "alpha": 4, "beta": 0},
     "expected": {"alpha_admissible": false}},
    {"id": "inst.orientable.rank2", "kind": "family-invariant",
     "description": "c1 = 2 xi + 3 f = 4h + K is the rank-2 orientable normalization",
     "citation": "Def 2.2",
     "inputs": {"family": "orientability", "c": "all", "rank": 2, "c1": "2*xi + 3*f"},
     "expected": {"orientable": true}},
    {"id": "inst.orientable.rank4", "kind": "family-invariant",
     "description": "rank 4 with c1 = 4 xi + 6 f = (4h + K) . 2 is orientable",
     "citation": "Def 2.2",
     "inputs": {"family": "orientability", "c": "all", "rank": 4, "c1": "4*xi + 6*f"},
     "expected": {"orientable": true}},
    {"id": "inst.serre.m2c1", "kind": "family-invariant",
     "description": "m = 2 on X_1: alpha = 6, charge 0, ext1 = 10, family dimension 11",
     "citation": "Prop 5.4 / Lemma 4.4",
     "inputs": {"family": "serre", "c": 1, "m": 2},
     "expected": {"alpha": 6, "beta": 2, "charge": 0, "ulrich": true,
                  "ext1": 10, "ext2": 0, "family_dim": 11, "valid": true}},
    {"id": "inst.serre.m3c0", "kind": "family-invariant",
     "description": "m = 3 on X_0: ext1 = 16, recorded codimension count 1",
     "citation": "Prop 5.4 remark",
     "inputs": {"family": "serre", "c": 0, "m": 3},
     "expected": {"alpha": 7, "ext1": 16, "codim": 1, "valid": true,
                  "family_dim_caveat": true}},
    {"id": "inst.serre.m2c0-invalid", "kind": "family-invariant",
     "description": "m = 2 on X_0 is below the alpha >= 7 threshold",
     "citation": "Prop 5.2",
     "inputs": {"family": "serre", "c": 0, "m": 2},
     "expected": {"valid": false}},
    {"id": "inst.pullback.ulrich", "kind": "family-invariant",
     "description": "l = 1 on X_2: c2 = 5 xi f + 4 f^2, charge 0, ext1 = 12",
     "citation": "sec. 7",
     "inputs": {"family": "pullback", "c": 2, "l": 1},
     "expected": {"alpha": 5, "beta": 4, "charge": 0, "ulrich": true,
                  "ext1": 12, "double_count": 12}},
    {"id": "inst.pullback.double-count", "kind": "family-invariant",
     "description": "group-quotient count equals ext1 = 4l(l+2) for every c at l = 3",
     "citation": "sec. 7",
     "inputs": {"family": "pullback", "c": "all", "l": 3},
     "expected": {"charge": 12, "ext1": 60, "double_count": 60}},
    {"id": "inst.transform.step", "kind": "family-invariant",
     "description": "one elementary transformation along O_L(1): beta and charge rise by 1, ext1 by 4",
     "citation": "Prop 6.2 / Thm sec. 6",
     "inputs": {"family": "transform", "c": 1, "m": 2, "times": 1},
     "expected": {"alpha": 6, "beta": 3, "charge": 1, "ext1": 14, "ext2": 0,
                  "ext_known": true}},
    {"id": "inst.transform.iterated", "kind": "family-invariant",
     "description": "four transformations from beta = 2: charge k + 4, ext1 = 10a + 4b + 4c - 62",
     "citation": "Thm sec. 6",
     "inputs": {"family": "transform", "c": 1, "m": 2, "times": 4},
     "expected": {"alpha": 6, "beta": 6, "charge": 4, "ext1": 26}},

    {"id": "ineq.hoppe.c1-in", "kind": "inequality",
     "description": "(0, -4) satisfies 8a + 4b <= -14 on X_1",
     "citation": "Prop 4.3 / Prop 5.2",
     "inputs": {"c": 1, "a": 0, "b": -4},
     "expected": {"in_region": true}},
    {"id": "ineq.hoppe.c0-in", "kind": "inequality",
     "description": "(1, -6) satisfies 9a + 4b <= -15 on X_0",
     "citation": "Prop 4.3 / Prop 5.2",
     "inputs": {"c": 0, "a": 1, "b": -6},
     "expected": {"in_region": true}},
    {"id": "ineq.hoppe.c1-out", "kind": "inequality",
     "description": "(0, -3) misses the X_1 region since -12 > -14",
     "citation": "Prop 4.3",
     "inputs": {"c": 1, "a": 0, "b": -3},
     "expected": {"in_region": false}},
    {"id": "ineq.effectivity.variant1", "kind": "inequality",
     "description": "a xi + (b+2) f against (k xi + f)^2 at (0, -5): (-6, -6, 0), not effective",
     "citation": "Prop 4.2",
     "inputs": {"c": "all", "effectivity": {"a": 0, "b": -5, "variant": 1}},
     "expected": {"q": [-6, -6, 0], "not_effective": true}},
    {"id": "ineq.effectivity.variant2", "kind": "inequality",
     "description": "(a+2) xi + (b+1) f against (k xi + f)^2 at (0, -4) on X_2",
     "citation": "Prop 4.2",
     "inputs": {"c": 2, "effectivity": {"a": 0, "b": -4, "variant": 2}},
     "expected": {"q": [-2, 2, 2], "not_effective": true}},

    {"id": "enum.rank0-solver", "kind": "enumeration",
     "description": "the constraint system has the single solution (0, -1) with c3 = 2",
     "citation": "Thm sec. 6",
     "inputs": {"solver": {"window": 10}},
     "expected": {"solutions": [[0, -1]], "c3": 2}},
    {"id": "enum.ext-dimension.m2", "kind": "enumeration",
     "description": "dim Ext^1(I_Z(2 xi - f), O) = m summed from h^1(O_M(-2)); m = 2",
     "citation": "Lemma 4.4",
     "inputs": {"ext_dimension": {"m": 2}},
     "expected": {"value": 2}},
    {"id": "enum.ext-dimension.m1", "kind": "enumeration",
     "description": "the same count for a single curve",
     "citation": "Lemma 4.4",
     "inputs": {"ext_dimension": {"m": 1}},
     "expected": {"value": 1}},
    {"id": "enum.hoppe.window", "kind": "enumeration",
     "description": "the X_1 region inside [-1,1] x [-6,-3], with slope and pairing data",
     "citation": "Prop 4.3",
     "inputs": {"hoppe_window": {"c": 1, "amin": -1, "amax": 1, "bmin": -6, "bmax": -3}},
     "expected": {"points": [[-1,-6],[-1,-5],[-1,-4],[-1,-3],[0,-6],[0,-5],[0,-4],[1,-6]],
                  "mu": 14, "pair_xi": 8, "pair_f": 4}}
  ]
})json";
}

} // namespace xc
