#include <doctest.h>

#include "xc/expr.hpp"

using xc::ChowElement;
using xc::Rational;
using xc::ThreefoldModel;
using xc::parse_expression;

TEST_CASE("atoms and expansion of h and K") {
    ThreefoldModel m = ThreefoldModel::make(1);
    CHECK(parse_expression("xi", m) == m.xi());
    CHECK(parse_expression("f", m) == m.f());
    CHECK(parse_expression("h", m) == m.xi() + m.f());
    CHECK(parse_expression("K", m) == Rational(-2) * m.xi() - m.f());
    CHECK(parse_expression("3/4", m) == Rational(xc::BigInt(3), xc::BigInt(4)) * m.one());
}

TEST_CASE("the relation through the parser") {
    ThreefoldModel m = ThreefoldModel::make(1);
    ChowElement expect = Rational(2) * (m.xi() * m.f()) - m.f() * m.f();
    CHECK(parse_expression("xi^2", m) == expect);
    ThreefoldModel m3 = ThreefoldModel::make(3);
    CHECK(parse_expression("h^3", m3).degree() == Rational(10));
}

TEST_CASE("precedence and unary minus") {
    ThreefoldModel m = ThreefoldModel::make(0);
    CHECK(parse_expression("-2^2", m) == Rational(-4) * m.one());
    CHECK(parse_expression("2*xi + 3*f - f", m) ==
          Rational(2) * m.xi() + Rational(2) * m.f());
    CHECK(parse_expression("(xi + f)^3", m) == parse_expression("h^3", m));
    CHECK(parse_expression("2 - -3", m) == Rational(5) * m.one());
    CHECK(parse_expression("xi*f^2", m) == m.xi() * (m.f() * m.f()));
    // Powers above the grading truncate to zero.
    CHECK(parse_expression("xi^7", m).is_zero());
}

TEST_CASE("errors carry 1-based byte offsets") {
    ThreefoldModel m = ThreefoldModel::make(0);
    try {
        parse_expression("xi*(f+f", m);
        FAIL("expected parse_error");
    } catch (const xc::parse_error& e) {
        CHECK(e.offset == 8);
    }
    try {
        parse_expression("xi + + f", m);
        FAIL("expected parse_error");
    } catch (const xc::parse_error& e) {
        CHECK(e.offset == 6);
    }
    CHECK_THROWS_AS(parse_expression("1/0", m), xc::parse_error);
    CHECK_THROWS_AS(parse_expression("xi xi", m), xc::parse_error);
    CHECK_THROWS_AS(parse_expression("", m), xc::parse_error);
    CHECK_THROWS_AS(parse_expression("q", m), xc::parse_error);
    CHECK_THROWS_AS(parse_expression("2^", m), xc::parse_error);
}

TEST_CASE("whitespace is insignificant and literals can be huge") {
    ThreefoldModel m = ThreefoldModel::make(2);
    CHECK(parse_expression("  xi *   ( f+f )", m) == Rational(2) * (m.xi() * m.f()));
    CHECK(parse_expression("3 / 4", m) == parse_expression("3/4", m));
    CHECK(parse_expression("1 / 2 * xi ^ 2", m) ==
          Rational(xc::BigInt(1), xc::BigInt(2)) * parse_expression("xi^2", m));
    ChowElement big = parse_expression("10000000000000000000000/3 * xi", m);
    CHECK(big.coeff(ChowElement::kXi) ==
          Rational(xc::BigInt::from_string("10000000000000000000000"), xc::BigInt(3)));
    // (2/3)^40 stays exact.
    ChowElement p = parse_expression("2/3^40 - 2/3^40", m);
    CHECK(p.is_zero());
}
