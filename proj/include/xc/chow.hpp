#pragma once

#include "xc/errors.hpp"
#include "xc/rational.hpp"

#include <array>
#include <string>

namespace xc {

class ChowElement;

/// Fixed geometric data of the ruled threefold X_c = P(F_c) over the plane,
/// with F_c the rank-2 Fano bundle of second Chern class c.
///
/// The Chow ring is Z[xi, f] / (xi^2 - 2 xi f + c f^2, f^3), graded with
/// basis (1; xi, f; xi f, f^2; xi f^2), and the degree map sends xi f^2 to 1.
class ThreefoldModel {
public:
    /// Throws param_error unless 0 <= c <= 4.
    static ThreefoldModel make(int c);

    int c() const { return c_; }

    ChowElement zero() const;
    ChowElement one() const;
    ChowElement xi() const;
    ChowElement f() const;
    /// Polarization h = xi + f.
    ChowElement polarization() const;
    /// Canonical divisor K = -2 xi - f.
    ChowElement canonical_divisor() const;
    ChowElement tangent_c1() const;  // 2 xi + f
    ChowElement tangent_c2() const;  // 6 xi f - 3 f^2

    /// deg(xi^3) = 4 - c, deg(xi^2 f) = 2, deg(xi f^2) = 1, deg(f^3) = 0.
    Rational deg_xi3() const { return Rational(4 - c_); }
    Rational deg_xi2f() const { return Rational(2); }
    Rational deg_xif2() const { return Rational(1); }
    Rational deg_f3() const { return Rational(0); }

    friend bool operator==(const ThreefoldModel& a, const ThreefoldModel& b) {
        return a.c_ == b.c_;
    }

private:
    explicit ThreefoldModel(int c) : c_(c) {}
    int c_ = 0;
};

/// Element of the Chow ring A(X_c) in normal form over the ordered basis
/// (1; xi, f; xi f, f^2; xi f^2). Immutable value type; all operations are
/// pure and safe to share across threads.
class ChowElement {
public:
    /// Basis indices into coeff().
    enum Basis { kOne = 0, kXi = 1, kF = 2, kXiF = 3, kF2 = 4, kXiF2 = 5 };

    ChowElement() = default;
    explicit ChowElement(const ThreefoldModel& m) : c_(m.c()) {}
    ChowElement(const ThreefoldModel& m, std::array<Rational, 6> coeffs)
        : c_(m.c()), a_(std::move(coeffs)) {}

    int model_c() const { return c_; }
    const Rational& coeff(int basis_index) const { return a_[static_cast<size_t>(basis_index)]; }

    bool is_zero() const;
    /// Largest k with a nonzero degree-k component; 0 for the zero element.
    int top_degree() const;
    /// True when every nonzero coefficient sits in degree k.
    bool is_homogeneous(int k) const;

    friend ChowElement operator+(const ChowElement& a, const ChowElement& b);
    friend ChowElement operator-(const ChowElement& a, const ChowElement& b);
    friend ChowElement operator*(const ChowElement& a, const ChowElement& b);
    ChowElement operator-() const;
    friend ChowElement operator*(const Rational& s, const ChowElement& a);

    friend bool operator==(const ChowElement& a, const ChowElement& b);
    friend bool operator!=(const ChowElement& a, const ChowElement& b) { return !(a == b); }

    /// Pushforward to a number: the coefficient of xi f^2.
    Rational degree() const { return a_[kXiF2]; }

    /// Projection onto graded degree k (0 <= k <= 3); throws param_error otherwise.
    ChowElement graded_component(int k) const;

    /// Deterministic rendering in basis order, e.g. "2 - xi + 1/2*f + xi*f^2".
    std::string to_string() const;

private:
    friend class ThreefoldModel;
    static void check_same_model(const ChowElement& a, const ChowElement& b);

    int c_ = 0;
    std::array<Rational, 6> a_{};
};

} // namespace xc
