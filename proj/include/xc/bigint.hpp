#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

namespace xc {

/// Arbitrary-precision signed integer.
///
/// Values that fit in a signed 64-bit word are kept inline; the limb
/// representation (base 2^32, little-endian) only kicks in past that range,
/// so ordinary ring arithmetic never allocates.
class BigInt {
public:
    BigInt() = default;
    template <typename T,
              typename = std::enable_if_t<std::is_integral_v<T> && std::is_signed_v<T>>>
    BigInt(T v) : small_(static_cast<long long>(v)) {}

    /// Parses an optionally signed decimal string. Throws std::invalid_argument
    /// on empty or malformed input.
    static BigInt from_string(std::string_view s);

    bool fits_int64() const { return limbs_.empty(); }
    /// Throws std::overflow_error when the value does not fit.
    long long as_int64() const;

    bool is_zero() const { return limbs_.empty() && small_ == 0; }
    bool is_negative() const { return limbs_.empty() ? small_ < 0 : sign_ < 0; }
    int signum() const;

    BigInt operator-() const;
    BigInt abs() const;

    friend BigInt operator+(const BigInt& a, const BigInt& b);
    friend BigInt operator-(const BigInt& a, const BigInt& b);
    friend BigInt operator*(const BigInt& a, const BigInt& b);
    /// Truncating division (C semantics: quotient toward zero, remainder has
    /// the sign of the dividend). Throws std::domain_error on division by zero.
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);
    friend BigInt operator/(const BigInt& a, const BigInt& b);
    friend BigInt operator%(const BigInt& a, const BigInt& b);

    BigInt& operator+=(const BigInt& o) { *this = *this + o; return *this; }
    BigInt& operator-=(const BigInt& o) { *this = *this - o; return *this; }
    BigInt& operator*=(const BigInt& o) { *this = *this * o; return *this; }

    /// Nonnegative gcd; gcd(0, 0) == 0.
    static BigInt gcd(BigInt a, BigInt b);

    /// Three-way comparison: -1, 0, +1.
    static int compare(const BigInt& a, const BigInt& b);
    friend bool operator==(const BigInt& a, const BigInt& b) { return compare(a, b) == 0; }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return compare(a, b) != 0; }
    friend bool operator<(const BigInt& a, const BigInt& b) { return compare(a, b) < 0; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return compare(a, b) <= 0; }
    friend bool operator>(const BigInt& a, const BigInt& b) { return compare(a, b) > 0; }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return compare(a, b) >= 0; }

    std::string to_string() const;

private:
    // Small form: limbs_ empty, value held in small_.
    // Big form: sign_ in {-1, +1}, limbs_ nonempty with nonzero top limb.
    long long small_ = 0;
    int sign_ = 0;
    std::vector<std::uint32_t> limbs_;

    static BigInt from_parts(int sign, std::vector<std::uint32_t> mag);
    std::pair<int, std::vector<std::uint32_t>> to_parts() const;
};

} // namespace xc
