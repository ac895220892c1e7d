#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace cantor {

using BigInt = mpz_class;

/// Exact fraction, always stored in lowest terms with a positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(long long value) : q_(static_cast<long>(value)) {}  // NOLINT(google-explicit-constructor)
    Rational(const BigInt& value) : q_(value) {}                 // NOLINT(google-explicit-constructor)
    Rational(const BigInt& numerator, const BigInt& denominator);
    Rational(long long numerator, long long denominator)
        : Rational(BigInt(static_cast<long>(numerator)), BigInt(static_cast<long>(denominator))) {}

    /// Accepts `p/q`, `-p/q`, a bare integer or a finite decimal like `0.25`.
    static Rational parse(std::string_view text);

    BigInt numerator() const { return q_.get_num(); }
    BigInt denominator() const { return q_.get_den(); }
    const mpq_class& raw() const noexcept { return q_; }

    bool is_zero() const noexcept { return sgn(q_) == 0; }
    bool is_integer() const noexcept { return q_.get_den() == 1; }
    int sign() const noexcept { return sgn(q_); }

    BigInt floor() const;

    /// `p/q`, or just `p` for integers.
    std::string str() const;
    /// Decimal truncated toward zero after `digits` fractional digits.
    std::string decimal(int digits) const;
    double to_double() const { return q_.get_d(); }

    Rational& operator+=(const Rational& rhs) { q_ += rhs.q_; return *this; }
    Rational& operator-=(const Rational& rhs) { q_ -= rhs.q_; return *this; }
    Rational& operator*=(const Rational& rhs) { q_ *= rhs.q_; return *this; }
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
    friend Rational operator-(const Rational& value) {
        Rational out;
        out.q_ = -value.q_;
        return out;
    }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& value);

/// base^exponent as an exact integer.
BigInt big_pow(std::size_t base, std::size_t exponent);

}  // namespace cantor
