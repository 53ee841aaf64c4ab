#pragma once

// Shared helpers for the test binaries: an independent naive rewriter for
// Chow normal forms and random generators for elements and K-theory classes.

#include "xc/chow.hpp"
#include "xc/sheaf.hpp"

#include <map>
#include <random>
#include <utility>

namespace xc::testsupport {

// Formal sums of xi^i f^j reduced one rewrite at a time with
// xi^2 -> 2 xi f - c f^2 and f^3 -> 0. Independent of ChowElement's
// multiplication table.
using Formal = std::map<std::pair<int, int>, Rational>;

inline void formal_add(Formal& p, std::pair<int, int> key, const Rational& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = p.emplace(key, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) p.erase(it);
    }
}

inline Formal reduce_naive(Formal p, int c) {
    for (;;) {
        bool changed = false;
        for (auto it = p.begin(); it != p.end(); ++it) {
            auto [i, j] = it->first;
            Rational coeff = it->second;
            if (j >= 3) {
                p.erase(it);
                changed = true;
                break;
            }
            if (i >= 2) {
                p.erase(it);
                formal_add(p, {i - 1, j + 1}, Rational(2) * coeff);
                formal_add(p, {i - 2, j + 2}, Rational(-c) * coeff);
                changed = true;
                break;
            }
        }
        if (!changed) return p;
    }
}

inline Formal to_formal(const ChowElement& e) {
    static const std::pair<int, int> basis[6] = {{0, 0}, {1, 0}, {0, 1},
                                                 {1, 1}, {0, 2}, {1, 2}};
    Formal p;
    for (int k = 0; k < 6; ++k)
        if (!e.coeff(k).is_zero()) p.emplace(basis[k], e.coeff(k));
    return p;
}

inline ChowElement monomial_power(const ThreefoldModel& m, int i, int j) {
    ChowElement acc = m.one();
    for (int k = 0; k < i; ++k) acc = acc * m.xi();
    for (int k = 0; k < j; ++k) acc = acc * m.f();
    return acc;
}

inline ChowElement random_element(const ThreefoldModel& m, std::mt19937_64& rng) {
    std::array<Rational, 6> coeffs;
    for (auto& q : coeffs) {
        long long num = static_cast<long long>(rng() % 21) - 10;
        long long den = 1 + static_cast<long long>(rng() % 6);
        q = Rational(BigInt(num), BigInt(den));
    }
    return ChowElement(m, coeffs);
}

// An integer combination of line-bundle classes: the lattice of honest
// K-theory classes, on which chi must be integral.
inline SheafClass random_k_class(const ThreefoldModel& m, std::mt19937_64& rng) {
    ChowElement ch = m.zero();
    long long rank = 0;
    for (int t = 0; t < 4; ++t) {
        long long n = static_cast<long long>(rng() % 7) - 3;
        long long a = static_cast<long long>(rng() % 7) - 3;
        long long b = static_cast<long long>(rng() % 9) - 4;
        ChowElement d = Rational(a) * m.xi() + Rational(b) * m.f();
        ChowElement e = m.one() + d + Rational(1, 2) * (d * d) +
                        Rational(1, 6) * (d * d * d);
        ch = ch + Rational(n) * e;
        rank += n;
    }
    if (rank < 0) {
        ch = ch + Rational(-rank) * m.one();
        rank = 0;
    }
    ChowElement c1 = ch.graded_component(1);
    ChowElement ch2 = ch.graded_component(2);
    ChowElement ch3 = ch.graded_component(3);
    ChowElement c2 = Rational(1, 2) * (c1 * c1 - Rational(2) * ch2);
    ChowElement c3 = Rational(2) * ch3 - Rational(1, 3) * (c1 * c1 * c1) + c1 * c2;
    return SheafClass(m, rank, c1, c2, c3);
}

} // namespace xc::testsupport
