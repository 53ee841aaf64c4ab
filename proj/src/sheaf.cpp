#include "xc/sheaf.hpp"

namespace xc {

namespace {

void check_homogeneous(const ChowElement& e, int k, const char* what) {
    if (!e.is_homogeneous(k))
        throw param_error(std::string(what) + " must be homogeneous of degree " +
                          std::to_string(k));
}

} // namespace

SheafClass::SheafClass(const ThreefoldModel& model, long long rank, ChowElement c1,
                       ChowElement c2, ChowElement c3)
    : model(model), rank(rank), c1(std::move(c1)), c2(std::move(c2)), c3(std::move(c3)) {
    if (rank < 0) throw param_error("SheafClass: rank must be nonnegative");
    check_homogeneous(this->c1, 1, "c1");
    check_homogeneous(this->c2, 2, "c2");
    check_homogeneous(this->c3, 3, "c3");
    if (this->c1.model_c() != model.c() || this->c2.model_c() != model.c() ||
        this->c3.model_c() != model.c())
        throw model_mismatch_error("SheafClass: Chern classes bound to a different model");
}

SheafClass::SheafClass(const ThreefoldModel& model, long long rank, ChowElement c1,
                       ChowElement c2)
    : SheafClass(model, rank, std::move(c1), std::move(c2), model.zero()) {}

Rational falling_binomial(long long n, int k) {
    Rational acc(1);
    for (int i = 0; i < k; ++i) acc *= Rational(n - i);
    for (int i = 2; i <= k; ++i) acc /= Rational(i);
    return acc;
}

SheafClass twist(const SheafClass& s, const ChowElement& D) {
    check_homogeneous(D, 1, "twist divisor");
    const long long r = s.rank;
    ChowElement D2 = D * D;
    ChowElement c1 = s.c1 + falling_binomial(r, 1) * D;
    ChowElement c2 = s.c2 + Rational(r - 1) * (s.c1 * D) + falling_binomial(r, 2) * D2;
    ChowElement c3 = s.c3 + Rational(r - 2) * (s.c2 * D) +
                     falling_binomial(r - 1, 2) * (s.c1 * D2) +
                     falling_binomial(r, 3) * (D2 * D);
    return SheafClass(s.model, r, std::move(c1), std::move(c2), std::move(c3));
}

SheafClass dual(const SheafClass& s) {
    return SheafClass(s.model, s.rank, -s.c1, s.c2, -s.c3);
}

ChowElement chern_character(const SheafClass& s) {
    const Rational half(1, 2), sixth(1, 6);
    ChowElement c1sq = s.c1 * s.c1;
    ChowElement ch = Rational(s.rank) * s.model.one() + s.c1;
    ch = ch + half * (c1sq - Rational(2) * s.c2);
    ch = ch + sixth * (c1sq * s.c1 - Rational(3) * (s.c1 * s.c2) + Rational(3) * s.c3);
    return ch;
}

ChowElement todd_class(const ThreefoldModel& model) {
    ChowElement t1 = model.tangent_c1();
    ChowElement t2 = model.tangent_c2();
    return model.one() + Rational(1, 2) * t1 +
           Rational(1, 12) * (t1 * t1 + t2) + Rational(1, 24) * (t1 * t2);
}

Rational euler_characteristic_rational(const SheafClass& s) {
    return (chern_character(s) * todd_class(s.model)).degree();
}

BigInt euler_characteristic(const SheafClass& s) {
    Rational chi = euler_characteristic_rational(s);
    if (!chi.is_integer())
        throw consistency_error("euler_characteristic: non-integral value " +
                                chi.to_string() + " (Chern data not realizable)");
    return chi.num();
}

SheafClass endomorphism_class(const SheafClass& s) {
    if (s.rank != 2)
        throw param_error("endomorphism_class: defined for rank-2 classes only");
    ChowElement c2 = Rational(4) * s.c2 - s.c1 * s.c1;
    return SheafClass(s.model, 4, s.model.zero(), std::move(c2), s.model.zero());
}

Rational rr_closed_form(const RRPolynomialInputs& in) {
    const Rational l1(in.lambda1), l2(in.lambda2);
    const Rational a(in.alpha), b(in.beta), c(in.c);
    Rational third(1, 3);
    Rational chi = third * Rational(4 - in.c) * l1.pow(3);
    chi += Rational(2) * l1 * l1 * l2;
    chi += l1 * l2 * l2;
    chi += Rational(12 - 2 * static_cast<long long>(in.c)) * l1 * l1;
    chi += Rational(12) * l1 * l2;
    chi += Rational(2) * l2 * l2;
    chi += (third * Rational(143 - 14 * static_cast<long long>(in.c)) - Rational(2) * a - b) * l1;
    chi += (Rational(21) - a) * l2;
    chi += Rational(-6) * a - Rational(2) * b + Rational(68) - Rational(4) * c;
    return chi;
}

SheafClass orientable_rank2_class(const ThreefoldModel& model, long long alpha,
                                  long long beta) {
    ChowElement c1 = Rational(2) * model.xi() + Rational(3) * model.f();
    ChowElement c2 = Rational(alpha) * (model.xi() * model.f()) +
                     Rational(beta) * (model.f() * model.f());
    return SheafClass(model, 2, std::move(c1), std::move(c2));
}

} // namespace xc
