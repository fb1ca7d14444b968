#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <type_traits>

namespace faulhaber {

using BigInt = mpz_class;

/// Arbitrary-precision fraction, always held in lowest terms with a positive
/// denominator. Zero is 0/1.
class Rational {
public:
    Rational() = default;
    template <std::integral T>
    Rational(T value)  // NOLINT(google-explicit-constructor)
        : value_(narrow(value))
    {
    }
    explicit Rational(const BigInt& value) : value_(value) {}
    Rational(const BigInt& numerator, const BigInt& denominator);
    Rational(long numerator, long denominator);

    /// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed
    /// text or a zero denominator.
    static Rational parse(std::string_view text);

    BigInt numerator() const { return value_.get_num(); }
    BigInt denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    /// Reduced "p/q" text; integers print without the denominator.
    std::string to_string() const;

    Rational& operator+=(const Rational& rhs) { value_ += rhs.value_; return *this; }
    Rational& operator-=(const Rational& rhs) { value_ -= rhs.value_; return *this; }
    Rational& operator*=(const Rational& rhs) { value_ *= rhs.value_; return *this; }
    /// Throws std::domain_error on division by zero.
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
    Rational operator-() const;

    friend bool operator==(const Rational& lhs, const Rational& rhs) { return lhs.value_ == rhs.value_; }
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    template <std::integral T>
    static auto narrow(T value)
    {
        if constexpr (std::is_signed_v<T>)
            return static_cast<long>(value);
        else
            return static_cast<unsigned long>(value);
    }

    explicit Rational(mpq_class value) : value_(std::move(value)) {}

    mpq_class value_;
};

/// 2^exponent for any sign of exponent.
Rational power_of_two(long exponent);

/// Exact binomial coefficient C(n, k) by the multiplicative formula; 0 when k > n.
BigInt binomial(unsigned long n, unsigned long k);

}  // namespace faulhaber
