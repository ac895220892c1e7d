#include "cantor/rational.hpp"

#include <algorithm>
#include <ostream>

#include "cantor/errors.hpp"

namespace cantor {
namespace {

bool all_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

BigInt parse_integer(std::string_view s, std::string_view whole) {
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) {
        throw error(errc::parse_error, "not a rational: '" + std::string(whole) + "'");
    }
    BigInt value(std::string(s), 10);
    return negative ? BigInt(-value) : value;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r' || s.front() == '\n')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n')) {
        s.remove_suffix(1);
    }
    return s;
}

}  // namespace

Rational::Rational(const BigInt& numerator, const BigInt& denominator) {
    if (denominator == 0) {
        throw error(errc::invalid_data, "zero denominator");
    }
    q_ = mpq_class(numerator, denominator);
    q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    const std::string_view s = trim(text);
    const auto slash = s.find('/');
    const auto dot = s.find('.');
    if (slash == std::string_view::npos && dot != std::string_view::npos) {
        // Finite decimal such as 0.25 or -1.5.
        const std::string_view frac = s.substr(dot + 1);
        std::string_view whole = s.substr(0, dot);
        const bool negative = !whole.empty() && whole.front() == '-';
        if (!all_digits(frac)) {
            throw error(errc::parse_error, "not a rational: '" + std::string(text) + "'");
        }
        if (whole == "-" || whole == "+" || whole.empty()) whole = whole.empty() ? "0" : (negative ? "-0" : "0");
        BigInt num = abs(parse_integer(whole, text)) * big_pow(10, frac.size()) + BigInt(std::string(frac), 10);
        if (negative) num = -num;
        return Rational(num, big_pow(10, frac.size()));
    }
    if (slash == std::string_view::npos) {
        return Rational(parse_integer(s, text));
    }
    const BigInt num = parse_integer(trim(s.substr(0, slash)), text);
    const std::string_view den_text = trim(s.substr(slash + 1));
    if (!all_digits(den_text)) {
        throw error(errc::parse_error, "not a rational: '" + std::string(text) + "'");
    }
    const BigInt den(std::string(den_text), 10);
    if (den == 0) {
        throw error(errc::parse_error, "zero denominator in '" + std::string(text) + "'");
    }
    return Rational(num, den);
}

BigInt Rational::floor() const {
    BigInt out;
    mpz_fdiv_q(out.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return out;
}

std::string Rational::str() const {
    if (is_integer()) {
        return q_.get_num().get_str();
    }
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::string Rational::decimal(int digits) const {
    digits = std::max(digits, 0);
    BigInt scale = big_pow(10, static_cast<std::size_t>(digits));
    BigInt scaled = abs(q_.get_num()) * scale;
    BigInt truncated;
    mpz_tdiv_q(truncated.get_mpz_t(), scaled.get_mpz_t(), q_.get_den_mpz_t());
    std::string body = truncated.get_str();
    if (digits > 0) {
        if (body.size() <= static_cast<std::size_t>(digits)) {
            body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
        }
        body.insert(body.size() - static_cast<std::size_t>(digits), ".");
    }
    return (sign() < 0 && truncated != 0 ? "-" : "") + body;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) {
        throw error(errc::invalid_data, "division by zero");
    }
    q_ /= rhs.q_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& value) { return os << value.str(); }

BigInt big_pow(std::size_t base, std::size_t exponent) {
    BigInt out;
    mpz_ui_pow_ui(out.get_mpz_t(), base, exponent);
    return out;
}

}  // namespace cantor
