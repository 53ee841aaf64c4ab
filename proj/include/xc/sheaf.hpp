#pragma once

#include "xc/chow.hpp"

namespace xc {

/// Chern data of a coherent sheaf on X_c: rank plus homogeneous classes
/// c1 in A^1, c2 in A^2, c3 in A^3, all bound to one model.
struct SheafClass {
    /// Validates grading and rank >= 0; c3 defaults to zero (every locally
    /// free rank-2 class handled here is orientable with c3 = 0).
    SheafClass(const ThreefoldModel& model, long long rank, ChowElement c1,
               ChowElement c2, ChowElement c3);
    SheafClass(const ThreefoldModel& model, long long rank, ChowElement c1,
               ChowElement c2);

    ThreefoldModel model;
    long long rank;
    ChowElement c1, c2, c3;

    friend bool operator==(const SheafClass& a, const SheafClass& b) {
        return a.model == b.model && a.rank == b.rank && a.c1 == b.c1 &&
               a.c2 == b.c2 && a.c3 == b.c3;
    }
};

/// Inputs of the closed-form Riemann-Roch polynomial for the rank-2
/// orientable class with c1 = 2 xi + 3 f and c2 = alpha xi f + beta f^2,
/// twisted by lambda1 xi + lambda2 f on X_c.
struct RRPolynomialInputs {
    long long alpha = 0, beta = 0;
    long long lambda1 = 0, lambda2 = 0;
    int c = 0;
};

/// Generalized binomial coefficient n(n-1)...(n-k+1)/k! for any integer n.
Rational falling_binomial(long long n, int k);

/// Tensor by the line bundle with class D (homogeneous of degree 1):
///   c1 += r D,  c2 += (r-1) c1 D + C(r,2) D^2,
///   c3 += (r-2) c2 D + C(r-1,2) c1 D^2 + C(r,3) D^3.
/// Throws param_error when D is not homogeneous of degree 1.
SheafClass twist(const SheafClass& s, const ChowElement& D);

/// c_i -> (-1)^i c_i.
SheafClass dual(const SheafClass& s);

/// r + c1 + (c1^2 - 2 c2)/2 + (c1^3 - 3 c1 c2 + 3 c3)/6.
ChowElement chern_character(const SheafClass& s);

/// 1 + c1(T)/2 + (c1(T)^2 + c2(T))/12 + c1(T) c2(T)/24.
ChowElement todd_class(const ThreefoldModel& model);

/// deg(ch(s) . td(X)) as an exact rational, with no integrality check.
Rational euler_characteristic_rational(const SheafClass& s);

/// deg(ch(s) . td(X)); throws consistency_error when the result is not an
/// integer (which signals Chern data not realizable by a sheaf).
BigInt euler_characteristic(const SheafClass& s);

/// End(s) = s tensor dual(s) for rank 2: rank 4, c1 = c3 = 0,
/// c2 = 4 c2(s) - c1(s)^2. Throws param_error when rank != 2.
SheafClass endomorphism_class(const SheafClass& s);

/// The explicit polynomial for chi(E(lambda1 xi + lambda2 f)) on X_c where
/// E is rank 2 with c1 = 2 xi + 3 f, c2 = alpha xi f + beta f^2, c3 = 0.
Rational rr_closed_form(const RRPolynomialInputs& in);

/// The rank-2 orientable class with c2 = alpha xi f + beta f^2.
SheafClass orientable_rank2_class(const ThreefoldModel& model, long long alpha,
                                  long long beta);

} // namespace xc
