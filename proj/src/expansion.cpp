#include "cantor/expansion.hpp"

#include <algorithm>
#include <string>

#include "cantor/errors.hpp"
#include "cantor/limits.hpp"

namespace cantor {
namespace {

void check_base(std::size_t base) {
    if (base < 2) {
        throw error(errc::out_of_range, "expansion base must be at least 2");
    }
}

char digit_char(Digit d) { return static_cast<char>(d < 10 ? '0' + d : 'a' + (d - 10)); }

Digit char_digit(char c) {
    if (c >= '0' && c <= '9') return static_cast<Digit>(c - '0');
    if (c >= 'a' && c <= 'z') return static_cast<Digit>(c - 'a' + 10);
    if (c >= 'A' && c <= 'Z') return static_cast<Digit>(c - 'A' + 10);
    throw error(errc::parse_error, std::string("bad digit '") + c + "'");
}

std::string format_digits(const std::vector<Digit>& digits, std::size_t base) {
    std::string out;
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (base <= 36) {
            out += digit_char(digits[i]);
        } else {
            if (i > 0) out += '.';
            out += std::to_string(digits[i]);
        }
    }
    return out;
}

std::vector<Digit> parse_digits(std::string_view text, std::size_t base) {
    std::vector<Digit> out;
    if (base <= 36) {
        for (char c : text) out.push_back(char_digit(c));
    } else if (!text.empty()) {
        std::size_t start = 0;
        while (start <= text.size()) {
            const auto dot = text.find('.', start);
            const auto piece = text.substr(start, dot == std::string_view::npos ? std::string_view::npos : dot - start);
            if (piece.empty() || !std::all_of(piece.begin(), piece.end(), [](char c) { return c >= '0' && c <= '9'; })) {
                throw error(errc::parse_error, "bad digit list '" + std::string(text) + "'");
            }
            out.push_back(static_cast<Digit>(std::stoul(std::string(piece))));
            if (dot == std::string_view::npos) break;
            start = dot + 1;
        }
    }
    for (Digit d : out) {
        if (d >= base) {
            throw error(errc::parse_error, "digit " + std::to_string(d) + " out of range for base " + std::to_string(base));
        }
    }
    return out;
}

}  // namespace

std::size_t preperiod_length(const BigInt& denominator, std::size_t base) {
    check_base(base);
    BigInt rest = denominator;
    const BigInt n(static_cast<unsigned long>(base));
    std::size_t s = 0;
    for (;;) {
        BigInt g;
        mpz_gcd(g.get_mpz_t(), rest.get_mpz_t(), n.get_mpz_t());
        if (g == 1) break;
        rest /= g;
        ++s;
    }
    return s;
}

PeriodicExpansion to_expansion(const Rational& x, std::size_t base) {
    check_base(base);
    if (x.sign() < 0 || x >= Rational(1)) {
        throw error(errc::out_of_range, "to_expansion needs 0 <= x < 1, got " + x.str());
    }
    const BigInt den = x.denominator();
    const std::size_t s = preperiod_length(den, base);
    const std::size_t cap = max_bits();

    PeriodicExpansion e;
    e.base = base;
    BigInt r = x.numerator();
    BigInt d;
    auto step = [&]() {
        r *= static_cast<unsigned long>(base);
        mpz_fdiv_qr(d.get_mpz_t(), r.get_mpz_t(), r.get_mpz_t(), den.get_mpz_t());
        return static_cast<Digit>(d.get_ui());
    };
    e.preperiod.reserve(s);
    for (std::size_t i = 0; i < s; ++i) {
        e.preperiod.push_back(step());
    }
    const BigInt start = r;
    do {
        if (e.period.size() >= cap) {
            throw error(errc::resource_limit, "period of " + x.str() + " exceeds the length cap");
        }
        e.period.push_back(step());
    } while (r != start);
    return e;
}

std::optional<PeriodicExpansion> alternate_expansion(const Rational& x, std::size_t base) {
    check_base(base);
    if (x.sign() <= 0 || x > Rational(1)) {
        return std::nullopt;
    }
    PeriodicExpansion e;
    e.base = base;
    e.period = {static_cast<Digit>(base - 1)};
    if (x == Rational(1)) {
        return e;
    }
    PeriodicExpansion canonical = to_expansion(x, base);
    if (canonical.period != std::vector<Digit>{0}) {
        return std::nullopt;
    }
    // x > 0 terminates, so the minimal preperiod ends in a nonzero digit.
    e.preperiod = std::move(canonical.preperiod);
    e.preperiod.back() -= 1;
    return e;
}

Rational from_expansion(const PeriodicExpansion& e) {
    check_base(e.base);
    if (e.period.empty()) {
        throw error(errc::invalid_data, "expansion period must be nonempty");
    }
    const unsigned long n = static_cast<unsigned long>(e.base);
    BigInt pre = 0;
    for (Digit d : e.preperiod) {
        if (d >= e.base) throw error(errc::invalid_data, "expansion digit out of range");
        pre = pre * n + d;
    }
    BigInt block = 0;
    for (Digit d : e.period) {
        if (d >= e.base) throw error(errc::invalid_data, "expansion digit out of range");
        block = block * n + d;
    }
    const BigInt pre_scale = big_pow(e.base, e.preperiod.size());
    const BigInt cycle = big_pow(e.base, e.period.size()) - 1;
    // pre/N^p + block/(N^p (N^q - 1))
    return Rational(pre * cycle + block, pre_scale * cycle);
}

PeriodicExpansion canonicalize(const PeriodicExpansion& e) {
    const Rational value = from_expansion(e);
    if (value == Rational(1)) {
        throw error(errc::out_of_range, "expansion has value 1, which has no canonical form");
    }
    return to_expansion(value, e.base);
}

std::string format_expansion(const PeriodicExpansion& e) {
    return std::to_string(e.base) + ":" + format_digits(e.preperiod, e.base) + "(" + format_digits(e.period, e.base) + ")";
}

PeriodicExpansion parse_expansion(std::string_view text) {
    const auto colon = text.find(':');
    const auto open = text.find('(');
    const auto close = text.rfind(')');
    if (colon == std::string_view::npos || open == std::string_view::npos || close == std::string_view::npos ||
        open < colon || close < open || close + 1 != text.size()) {
        throw error(errc::parse_error, "expected base:pre(per), got '" + std::string(text) + "'");
    }
    const std::string base_text(text.substr(0, colon));
    if (base_text.empty() || !std::all_of(base_text.begin(), base_text.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        throw error(errc::parse_error, "bad base in '" + std::string(text) + "'");
    }
    PeriodicExpansion e;
    e.base = std::stoul(base_text);
    check_base(e.base);
    e.preperiod = parse_digits(text.substr(colon + 1, open - colon - 1), e.base);
    e.period = parse_digits(text.substr(open + 1, close - open - 1), e.base);
    if (e.period.empty()) {
        throw error(errc::parse_error, "empty period in '" + std::string(text) + "'");
    }
    return e;
}

}  // namespace cantor
