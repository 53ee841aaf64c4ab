#include <doctest.h>

#include "xc/rational.hpp"

#include <random>

using xc::BigInt;
using xc::Rational;

namespace {

Rational random_rational(std::mt19937_64& rng) {
    long long num = static_cast<long long>(rng() % 2001) - 1000;
    long long den = 1 + static_cast<long long>(rng() % 40);
    return Rational(BigInt(num), BigInt(den));
}

} // namespace

TEST_CASE("normalization") {
    CHECK(Rational(BigInt(2), BigInt(4)) == Rational(BigInt(1), BigInt(2)));
    CHECK(Rational(BigInt(-2), BigInt(-4)) == Rational(BigInt(1), BigInt(2)));
    CHECK(Rational(BigInt(2), BigInt(-4)).to_string() == "-1/2");
    CHECK(Rational(BigInt(0), BigInt(-9)).to_string() == "0");
    CHECK_THROWS(Rational(BigInt(1), BigInt(0)));
}

TEST_CASE("field axioms on random values") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 5000; ++i) {
        Rational a = random_rational(rng), b = random_rational(rng), c = random_rational(rng);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == Rational(0));
        if (!b.is_zero()) CHECK(a / b * b == a);
    }
}

TEST_CASE("pow and parsing") {
    CHECK(Rational(BigInt(2), BigInt(3)).pow(3) == Rational(BigInt(8), BigInt(27)));
    CHECK(Rational(5).pow(0) == Rational(1));
    CHECK(Rational::from_string("-10/4") == Rational(BigInt(-5), BigInt(2)));
    CHECK(Rational::from_string("17").is_integer());
    // Exactness survives magnitudes past 64 bits.
    Rational big = Rational(BigInt(7), BigInt(9)).pow(40);
    CHECK(big * Rational(BigInt(9), BigInt(7)).pow(40) == Rational(1));
}

TEST_CASE("ordering") {
    CHECK(Rational(BigInt(1), BigInt(3)) < Rational(BigInt(1), BigInt(2)));
    CHECK(Rational(-1) < Rational(BigInt(-1), BigInt(2)));
    CHECK(Rational(BigInt(7), BigInt(2)) > Rational(3));
}
