#include "xc/chow.hpp"

namespace xc {

namespace {
// Graded degree of each basis monomial (1; xi, f; xi f, f^2; xi f^2).
constexpr int kBasisDegree[6] = {0, 1, 1, 2, 2, 3};
constexpr const char* kBasisName[6] = {"", "xi", "f", "xi*f", "f^2", "xi*f^2"};
} // namespace

ThreefoldModel ThreefoldModel::make(int c) {
    if (c < 0 || c > 4)
        throw param_error("ThreefoldModel: c must lie in {0,...,4}, got " + std::to_string(c));
    return ThreefoldModel(c);
}

ChowElement ThreefoldModel::zero() const { return ChowElement(*this); }

ChowElement ThreefoldModel::one() const {
    ChowElement e(*this);
    std::array<Rational, 6> a{};
    a[ChowElement::kOne] = Rational(1);
    return ChowElement(*this, a);
}

ChowElement ThreefoldModel::xi() const {
    std::array<Rational, 6> a{};
    a[ChowElement::kXi] = Rational(1);
    return ChowElement(*this, a);
}

ChowElement ThreefoldModel::f() const {
    std::array<Rational, 6> a{};
    a[ChowElement::kF] = Rational(1);
    return ChowElement(*this, a);
}

ChowElement ThreefoldModel::polarization() const { return xi() + f(); }

ChowElement ThreefoldModel::canonical_divisor() const {
    std::array<Rational, 6> a{};
    a[ChowElement::kXi] = Rational(-2);
    a[ChowElement::kF] = Rational(-1);
    return ChowElement(*this, a);
}

ChowElement ThreefoldModel::tangent_c1() const {
    std::array<Rational, 6> a{};
    a[ChowElement::kXi] = Rational(2);
    a[ChowElement::kF] = Rational(1);
    return ChowElement(*this, a);
}

ChowElement ThreefoldModel::tangent_c2() const {
    std::array<Rational, 6> a{};
    a[ChowElement::kXiF] = Rational(6);
    a[ChowElement::kF2] = Rational(-3);
    return ChowElement(*this, a);
}

void ChowElement::check_same_model(const ChowElement& a, const ChowElement& b) {
    if (a.c_ != b.c_)
        throw model_mismatch_error("ChowElement: operands bound to different models (c=" +
                                   std::to_string(a.c_) + " vs c=" + std::to_string(b.c_) + ")");
}

bool ChowElement::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

int ChowElement::top_degree() const {
    int d = 0;
    for (int i = 0; i < 6; ++i)
        if (!a_[i].is_zero()) d = kBasisDegree[i];
    return d;
}

bool ChowElement::is_homogeneous(int k) const {
    for (int i = 0; i < 6; ++i)
        if (!a_[i].is_zero() && kBasisDegree[i] != k) return false;
    return true;
}

ChowElement operator+(const ChowElement& a, const ChowElement& b) {
    ChowElement::check_same_model(a, b);
    ChowElement r = a;
    for (int i = 0; i < 6; ++i) r.a_[i] += b.a_[i];
    return r;
}

ChowElement operator-(const ChowElement& a, const ChowElement& b) {
    ChowElement::check_same_model(a, b);
    ChowElement r = a;
    for (int i = 0; i < 6; ++i) r.a_[i] -= b.a_[i];
    return r;
}

ChowElement ChowElement::operator-() const {
    ChowElement r = *this;
    for (auto& x : r.a_) x = -x;
    return r;
}

ChowElement operator*(const Rational& s, const ChowElement& a) {
    ChowElement r = a;
    for (auto& x : r.a_) x *= s;
    return r;
}

ChowElement operator*(const ChowElement& a, const ChowElement& b) {
    ChowElement::check_same_model(a, b);
    const Rational c(a.c_);
    const auto& x = a.a_;
    const auto& y = b.a_;
    ChowElement r;
    r.c_ = a.c_;

    // Degree 0.
    r.a_[0] = x[0] * y[0];
    // Degree 1.
    r.a_[1] = x[0] * y[1] + x[1] * y[0];
    r.a_[2] = x[0] * y[2] + x[2] * y[0];
    // Degree 2: xi*xi reduces to 2 xi f - c f^2.
    Rational xixi = x[1] * y[1];
    r.a_[3] = x[0] * y[3] + x[3] * y[0] + (x[1] * y[2] + x[2] * y[1]) + Rational(2) * xixi;
    r.a_[4] = x[0] * y[4] + x[4] * y[0] + x[2] * y[2] - c * xixi;
    // Degree 3: xi * xi f = xi^2 f = 2 xi f^2; xi * f^2 = f * xi f = xi f^2;
    // f * f^2 = f^3 = 0. Formal degree > 3 truncates to zero.
    r.a_[5] = x[0] * y[5] + x[5] * y[0]
            + Rational(2) * (x[1] * y[3] + x[3] * y[1])
            + (x[1] * y[4] + x[4] * y[1])
            + (x[2] * y[3] + x[3] * y[2]);
    return r;
}

bool operator==(const ChowElement& a, const ChowElement& b) {
    if (a.c_ != b.c_) return false;
    for (int i = 0; i < 6; ++i)
        if (a.a_[i] != b.a_[i]) return false;
    return true;
}

ChowElement ChowElement::graded_component(int k) const {
    if (k < 0 || k > 3)
        throw param_error("graded_component: degree must lie in {0,...,3}, got " +
                          std::to_string(k));
    ChowElement r;
    r.c_ = c_;
    for (int i = 0; i < 6; ++i)
        if (kBasisDegree[i] == k) r.a_[i] = a_[i];
    return r;
}

std::string ChowElement::to_string() const {
    std::string out;
    for (int i = 0; i < 6; ++i) {
        const Rational& q = a_[i];
        if (q.is_zero()) continue;
        Rational mag = q.signum() < 0 ? -q : q;
        if (out.empty()) {
            if (q.signum() < 0) out += "-";
        } else {
            out += q.signum() < 0 ? " - " : " + ";
        }
        bool unit_coeff = mag == Rational(1) && i != kOne;
        if (!unit_coeff) out += mag.to_string();
        if (i != kOne) {
            if (!unit_coeff) out += "*";
            out += kBasisName[i];
        }
    }
    return out.empty() ? "0" : out;
}

} // namespace xc
