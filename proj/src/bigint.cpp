#include "xc/bigint.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace xc {

namespace {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using Mag = std::vector<u32>;

constexpr u64 kBase = u64(1) << 32;

void trim(Mag& m) {
    while (!m.empty() && m.back() == 0) m.pop_back();
}

u64 abs_u64(long long v) {
    return v < 0 ? ~static_cast<u64>(v) + 1 : static_cast<u64>(v);
}

Mag mag_from_u64(u64 v) {
    Mag m;
    if (v) m.push_back(static_cast<u32>(v));
    if (v >> 32) m.push_back(static_cast<u32>(v >> 32));
    return m;
}

int cmp_mag(const Mag& a, const Mag& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

Mag add_mag(const Mag& a, const Mag& b) {
    const Mag& lo = a.size() < b.size() ? a : b;
    const Mag& hi = a.size() < b.size() ? b : a;
    Mag r(hi.size() + 1, 0);
    u64 carry = 0;
    for (size_t i = 0; i < hi.size(); ++i) {
        u64 s = carry + hi[i] + (i < lo.size() ? lo[i] : 0);
        r[i] = static_cast<u32>(s);
        carry = s >> 32;
    }
    r[hi.size()] = static_cast<u32>(carry);
    trim(r);
    return r;
}

// Requires a >= b.
Mag sub_mag(const Mag& a, const Mag& b) {
    Mag r(a.size(), 0);
    long long borrow = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        long long d = static_cast<long long>(a[i]) - (i < b.size() ? b[i] : 0) - borrow;
        borrow = d < 0;
        if (d < 0) d += static_cast<long long>(kBase);
        r[i] = static_cast<u32>(d);
    }
    trim(r);
    return r;
}

Mag mul_mag(const Mag& a, const Mag& b) {
    if (a.empty() || b.empty()) return {};
    Mag r(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        u64 carry = 0;
        for (size_t j = 0; j < b.size(); ++j) {
            u64 cur = static_cast<u64>(a[i]) * b[j] + r[i + j] + carry;
            r[i + j] = static_cast<u32>(cur);
            carry = cur >> 32;
        }
        r[i + b.size()] = static_cast<u32>(carry);
    }
    trim(r);
    return r;
}

Mag shl_bits(const Mag& a, unsigned s) {
    if (s == 0 || a.empty()) return a;
    Mag r(a.size() + 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        r[i] |= a[i] << s;
        r[i + 1] = a[i] >> (32 - s);
    }
    trim(r);
    return r;
}

Mag shr_bits(const Mag& a, unsigned s) {
    if (s == 0 || a.empty()) return a;
    Mag r(a.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        r[i] = a[i] >> s;
        if (i + 1 < a.size()) r[i] |= a[i + 1] << (32 - s);
    }
    trim(r);
    return r;
}

// Knuth algorithm D, base 2^32.
void divmod_mag(const Mag& u_in, const Mag& v_in, Mag& q, Mag& r) {
    if (cmp_mag(u_in, v_in) < 0) {
        q.clear();
        r = u_in;
        return;
    }
    if (v_in.size() == 1) {
        u64 d = v_in[0], rem = 0;
        q.assign(u_in.size(), 0);
        for (size_t i = u_in.size(); i-- > 0;) {
            u64 cur = (rem << 32) | u_in[i];
            q[i] = static_cast<u32>(cur / d);
            rem = cur % d;
        }
        trim(q);
        r = mag_from_u64(rem);
        return;
    }
    unsigned shift = 0;
    for (u32 top = v_in.back(); !(top & 0x80000000u); top <<= 1) ++shift;
    Mag v = shl_bits(v_in, shift);
    Mag u = shl_bits(u_in, shift);
    const size_t n = v.size();
    u.resize(std::max(u.size(), n) + 1, 0);
    const size_t m = u.size() - n - 1;
    q.assign(m + 1, 0);
    for (size_t j = m + 1; j-- > 0;) {
        u64 top2 = (static_cast<u64>(u[j + n]) << 32) | u[j + n - 1];
        u64 qhat = top2 / v[n - 1];
        u64 rhat = top2 % v[n - 1];
        while (qhat >= kBase ||
               qhat * v[n - 2] > ((rhat << 32) | u[j + n - 2])) {
            --qhat;
            rhat += v[n - 1];
            if (rhat >= kBase) break;
        }
        // Multiply-subtract qhat * v from u[j .. j+n].
        long long borrow = 0;
        u64 carry = 0;
        for (size_t i = 0; i < n; ++i) {
            u64 p = qhat * v[i] + carry;
            carry = p >> 32;
            long long d = static_cast<long long>(u[i + j]) -
                          static_cast<long long>(static_cast<u32>(p)) - borrow;
            borrow = d < 0;
            if (d < 0) d += static_cast<long long>(kBase);
            u[i + j] = static_cast<u32>(d);
        }
        long long d = static_cast<long long>(u[j + n]) -
                      static_cast<long long>(carry) - borrow;
        bool neg = d < 0;
        if (d < 0) d += static_cast<long long>(kBase);
        u[j + n] = static_cast<u32>(d);
        if (neg) {
            // qhat was one too large; add v back.
            --qhat;
            u64 c2 = 0;
            for (size_t i = 0; i < n; ++i) {
                u64 s = static_cast<u64>(u[i + j]) + v[i] + c2;
                u[i + j] = static_cast<u32>(s);
                c2 = s >> 32;
            }
            u[j + n] = static_cast<u32>(u[j + n] + c2);
        }
        q[j] = static_cast<u32>(qhat);
    }
    trim(q);
    u.resize(n);
    r = shr_bits(u, shift);
    trim(r);
}

} // namespace

BigInt BigInt::from_parts(int sign, std::vector<std::uint32_t> mag) {
    trim(mag);
    BigInt out;
    if (mag.empty()) return out;
    // Demote when the magnitude fits a signed 64-bit value.
    if (mag.size() <= 2) {
        u64 v = mag[0];
        if (mag.size() == 2) v |= static_cast<u64>(mag[1]) << 32;
        if (sign > 0 && v <= static_cast<u64>(INT64_MAX)) {
            out.small_ = static_cast<long long>(v);
            return out;
        }
        if (sign < 0 && v <= abs_u64(INT64_MIN)) {
            out.small_ = (v == abs_u64(INT64_MIN)) ? INT64_MIN
                                                   : -static_cast<long long>(v);
            return out;
        }
    }
    out.sign_ = sign;
    out.limbs_ = std::move(mag);
    return out;
}

std::pair<int, std::vector<std::uint32_t>> BigInt::to_parts() const {
    if (!limbs_.empty()) return {sign_, limbs_};
    if (small_ == 0) return {0, {}};
    return {small_ < 0 ? -1 : 1, mag_from_u64(abs_u64(small_))};
}

int BigInt::signum() const {
    if (!limbs_.empty()) return sign_;
    return small_ == 0 ? 0 : (small_ < 0 ? -1 : 1);
}

long long BigInt::as_int64() const {
    if (!fits_int64()) throw std::overflow_error("BigInt: value exceeds 64 bits");
    return small_;
}

BigInt BigInt::operator-() const {
    if (limbs_.empty()) {
        if (small_ != INT64_MIN) {
            BigInt r;
            r.small_ = -small_;
            return r;
        }
    }
    auto [s, m] = to_parts();
    return from_parts(-s, std::move(m));
}

BigInt BigInt::abs() const { return is_negative() ? -*this : *this; }

BigInt operator+(const BigInt& a, const BigInt& b) {
    if (a.limbs_.empty() && b.limbs_.empty()) {
        long long r;
        if (!__builtin_add_overflow(a.small_, b.small_, &r)) {
            BigInt out;
            out.small_ = r;
            return out;
        }
    }
    auto [sa, ma] = a.to_parts();
    auto [sb, mb] = b.to_parts();
    if (sa == 0) return b;
    if (sb == 0) return a;
    if (sa == sb) return BigInt::from_parts(sa, add_mag(ma, mb));
    int c = cmp_mag(ma, mb);
    if (c == 0) return BigInt();
    return c > 0 ? BigInt::from_parts(sa, sub_mag(ma, mb))
                 : BigInt::from_parts(sb, sub_mag(mb, ma));
}

BigInt operator-(const BigInt& a, const BigInt& b) {
    if (a.limbs_.empty() && b.limbs_.empty()) {
        long long r;
        if (!__builtin_sub_overflow(a.small_, b.small_, &r)) {
            BigInt out;
            out.small_ = r;
            return out;
        }
    }
    return a + (-b);
}

BigInt operator*(const BigInt& a, const BigInt& b) {
    if (a.limbs_.empty() && b.limbs_.empty()) {
        long long r;
        if (!__builtin_mul_overflow(a.small_, b.small_, &r)) {
            BigInt out;
            out.small_ = r;
            return out;
        }
    }
    auto [sa, ma] = a.to_parts();
    auto [sb, mb] = b.to_parts();
    if (sa == 0 || sb == 0) return BigInt();
    return BigInt::from_parts(sa * sb, mul_mag(ma, mb));
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    if (b.is_zero()) throw std::domain_error("BigInt: division by zero");
    if (a.limbs_.empty() && b.limbs_.empty() &&
        !(a.small_ == INT64_MIN && b.small_ == -1)) {
        q = BigInt(a.small_ / b.small_);
        r = BigInt(a.small_ % b.small_);
        return;
    }
    auto [sa, ma] = a.to_parts();
    auto [sb, mb] = b.to_parts();
    Mag qm, rm;
    divmod_mag(ma, mb, qm, rm);
    q = from_parts(sa * sb, std::move(qm));
    r = from_parts(sa, std::move(rm));
}

BigInt operator/(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    return q;
}

BigInt operator%(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    return r;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
    a = a.abs();
    b = b.abs();
    while (!b.is_zero()) {
        BigInt q, r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

int BigInt::compare(const BigInt& a, const BigInt& b) {
    if (a.limbs_.empty() && b.limbs_.empty()) {
        if (a.small_ == b.small_) return 0;
        return a.small_ < b.small_ ? -1 : 1;
    }
    int sa = a.signum(), sb = b.signum();
    if (sa != sb) return sa < sb ? -1 : 1;
    auto [s1, m1] = a.to_parts();
    auto [s2, m2] = b.to_parts();
    int c = cmp_mag(m1, m2);
    return sa >= 0 ? c : -c;
}

BigInt BigInt::from_string(std::string_view s) {
    size_t i = 0;
    bool neg = false;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
        neg = s[i] == '-';
        ++i;
    }
    if (i == s.size()) throw std::invalid_argument("BigInt: empty numeral");
    BigInt out;
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9')
            throw std::invalid_argument("BigInt: invalid digit in numeral");
        out = out * BigInt(10) + BigInt(s[i] - '0');
    }
    return neg ? -out : out;
}

std::string BigInt::to_string() const {
    if (limbs_.empty()) return std::to_string(small_);
    Mag m = limbs_;
    std::string digits;
    while (!m.empty()) {
        Mag q, r;
        divmod_mag(m, {1000000000u}, q, r);
        u64 chunk = r.empty() ? 0 : r[0];
        for (int k = 0; k < 9; ++k) {
            digits.push_back(static_cast<char>('0' + chunk % 10));
            chunk /= 10;
        }
        m = std::move(q);
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    if (sign_ < 0) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

} // namespace xc
