#pragma once

#include "xc/sheaf.hpp"
#include "xc/threefold.hpp"

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace xc {

/// Chern data of a rank-2 orientable candidate instanton together with its
/// derived invariants. Inadmissibility is reported through flags and a note
/// instead of errors, so callers can explain why a class fails.
struct InstantonClass {
    InstantonClass(SheafClass sheaf, int c, long long alpha, long long beta)
        : sheaf(std::move(sheaf)), c(c), alpha(alpha), beta(beta) {}

    SheafClass sheaf;  // rank 2, c1 = 2 xi + 3 f, c2 = alpha xi f + beta f^2
    int c = 0;
    long long alpha = 0, beta = 0;
    long long charge = 0;  // 3 alpha + beta + c - 21
    std::optional<long long> ext1, ext2;
    bool orientable = true;
    bool ulrich = false;            // charge == 0
    bool alpha_admissible = false;  // alpha >= 5
    bool charge_admissible = false; // charge >= 0
    // Recorded generic splitting on a fiber line, O_L(1) + O_L(1); its total
    // degree is checked against deg(c1 . f^2).
    std::array<int, 2> line_splitting{1, 1};
    std::string note;
};

/// Populates every derived field; throws param_error only for c outside
/// {0,...,4}. The charge is cross-checked against -chi(E(-h)).
InstantonClass instanton_invariants(long long alpha, long long beta, int c);

/// True iff c1(s) = (4h + K_X) rank/2 as Chow elements.
bool orientability_check(const SheafClass& s);

/// Invariants of the bundles cut out by a section vanishing on m disjoint
/// curves of class xi f, twisted to the orientable normalization.
struct SerreFamily {
    SerreFamily(InstantonClass cls, long long m) : cls(std::move(cls)), m(m) {}

    InstantonClass cls;
    long long m = 0;
    bool valid = false;       // m >= 2 when c >= 1, m >= 3 when c = 0
    std::string reason;
    long long family_dim = 0; // 6m - 1, from 5m curve moduli + (m-1) extensions
    long long codim = 0;      // recorded count 4 alpha + 4c - 27
    bool family_dim_caveat = false;  // c = 0 with alpha in {7, 8}
};

/// Throws param_error when m < 1 or c is out of range.
SerreFamily serre_family(long long m, int c);

/// Invariants of the pullback bundles with alpha = 5 indexed by l >= 1.
struct PullbackFamily {
    PullbackFamily(InstantonClass cls, long long l) : cls(std::move(cls)), l(l) {}

    InstantonClass cls;
    long long l = 0;
    long long dim_hom_space = 0;  // 3(2l+3)(2l+1)
    long long dim_group = 0;      // (2l+3)^2 + (2l+1)^2 - 1
    long long double_count = 0;   // difference; must equal ext1 = 4l(l+2)
};

/// Throws param_error when l < 1 or c is out of range. The Chern data
/// 2 xi + 3 f and 5 xi f + (l^2+2l+3-c) f^2 is recomputed from the defining
/// resolution on X_c rather than transcribed.
PullbackFamily pullback_family(long long l, int c);

/// Chern data of a rank-0 instanton sheaf supported on a curve: the curve
/// class, the degree d = deg(class . h) and the recorded c3 value.
struct Rank0Data {
    ChowElement curve_class;  // in A^2
    long long degree = 0;
    long long c3 = 0;

    /// The structure sheaf of a fiber line twisted to degree 1:
    /// class f^2, degree 1, c3 = 2.
    static Rank0Data line_sheaf(const ThreefoldModel& m);
};

/// Elementary transformation bookkeeping: charge += degree, c2 += class.
/// For the line-sheaf case (class f^2, degree 1) the Ext^1 dimension grows by
/// exactly 4 and Ext^2 stays 0; any other transform clears the Ext fields.
/// Throws param_error for negative degree or degree != deg(class . h).
InstantonClass elementary_transform(const InstantonClass& e, const Rank0Data& t);

/// Integer points (a, b) with (9-c) a + 4 b <= c - 15, together with the
/// slope mu(E) = 15 - c and the pairing coefficients deg(xi.h^2), deg(f.h^2),
/// all computed in the Chow ring.
struct HoppeRegion {
    Rational mu;
    long long pair_xi = 0, pair_f = 0, bound = 0;
    std::vector<std::pair<long long, long long>> points;  // sorted
};

/// Throws param_error when the window is empty or c is out of range.
HoppeRegion hoppe_region(int c, long long amin, long long amax, long long bmin,
                         long long bmax);

/// Coefficients of deg(D . (k xi + f)^2) as a quadratic in k, where D is
/// a xi + (b+2) f (variant 1) or (a+2) xi + (b+1) f (variant 2). Expanded
/// symbolically in the Chow ring and cross-checked against the transcribed
/// closed forms; a mismatch throws consistency_error.
struct EffectivityQuadratic {
    long long q2 = 0, q1 = 0, q0 = 0;
    bool not_effective = false;
};

EffectivityQuadratic effectivity_quadratic(int c, long long a, long long b,
                                           int variant);

/// dim Ext^1(I_Z(2 xi - f), O) for Z a union of m disjoint curves of class
/// xi f, computed as the sum over components of h^1(O_M(-2)) via restriction
/// degrees (not as a constant).
long long serre_ext_dimension(long long m);

struct Rank0Constraint {
    long long eta = 0, theta = 0;
    friend bool operator==(const Rank0Constraint& a, const Rank0Constraint& b) {
        return a.eta == b.eta && a.theta == b.theta;
    }
};

struct Rank0SolverResult {
    Rank0Constraint solution;       // (0, -1)
    std::vector<Rank0Constraint> all_solutions;
    long long c3 = 0;               // deg((-2 xi - 3 f) . (eta xi f + theta f^2)) = 2
};

/// Enumerates integer pairs in [-window, window]^2 satisfying
/// 2 eta + theta + 1 >= 0, eta >= 0, 3 eta + theta < 0 and asserts the
/// solution set is exactly {(0, -1)}; otherwise throws consistency_error.
Rank0SolverResult rank0_constraint_solver(long long window = 10);

} // namespace xc
