#include "cantor/cdf.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "cantor/errors.hpp"
#include "cantor/expansion.hpp"
#include "cantor/limits.hpp"

namespace cantor {
namespace {

bool all_kept(const DigitVector& v, const std::vector<Digit>& digits) {
    return std::all_of(digits.begin(), digits.end(), [&](Digit d) { return v.bit(d); });
}

std::vector<Digit> stream_digits(DigitStream& x, std::size_t base, std::size_t depth) {
    return convert_digits(x, base, depth, default_fetch_budget(x.base(), base, depth));
}

}  // namespace

Rational eval(const DigitVector& v, const Rational& x) {
    if (x.sign() <= 0) return Rational(0);
    if (x >= Rational(1)) return Rational(1);

    const std::size_t n = v.base();
    const unsigned long base = static_cast<unsigned long>(n);
    const unsigned long w = static_cast<unsigned long>(v.weight());
    const auto g = v.cumulative_table();
    const BigInt den = x.denominator();
    const std::size_t s = preperiod_length(den, n);

    BigInt r = x.numerator();
    BigInt d;
    auto next_digit = [&]() {
        r *= base;
        mpz_fdiv_qr(d.get_mpz_t(), r.get_mpz_t(), r.get_mpz_t(), den.get_mpz_t());
        return static_cast<std::size_t>(d.get_ui());
    };

    // Preperiod: S = sum g(d_i) W^(s-i).
    BigInt sum = 0;
    for (std::size_t i = 1; i <= s; ++i) {
        const std::size_t digit = next_digit();
        sum = sum * w + g[digit];
        if (!v.bit(digit)) {
            return Rational(sum, big_pow(w, i));
        }
    }

    const BigInt start = r;
    BigInt block = 0;
    std::size_t q = 0;
    const std::size_t cap = max_bits();
    do {
        if (q >= cap) {
            throw error(errc::resource_limit, "period of " + x.str() + " exceeds the length cap");
        }
        const std::size_t digit = next_digit();
        ++q;
        block = block * w + g[digit];
        if (!v.bit(digit)) {
            return Rational(sum * big_pow(w, q) + block, big_pow(w, s + q));
        }
    } while (r != start);

    const BigInt cycle = big_pow(w, q) - 1;
    return Rational(sum * cycle + block, big_pow(w, s) * cycle);
}

Enclosure eval_stream(const DigitVector& v, DigitStream& x, std::size_t depth) {
    if (depth == 0) {
        throw error(errc::out_of_range, "enclosure depth must be at least 1");
    }
    const std::size_t n = v.base();
    const auto digits = stream_digits(x, n, depth);
    BigInt num = 0;
    for (Digit d : digits) num = num * static_cast<unsigned long>(n) + d;
    const BigInt scale = big_pow(n, depth);
    return {eval(v, Rational(num, scale)), eval(v, Rational(num + 1, scale))};
}

std::vector<PlotPoint> piecewise_points(const DigitVector& v, std::size_t level) {
    if (level == 0) {
        throw error(errc::out_of_range, "approximation level must be at least 1");
    }
    const std::size_t count = checked_pow(v.base(), level, max_bits());
    if (count == 0) {
        throw error(errc::resource_limit, "level " + std::to_string(level) + " needs more than " +
                                              std::to_string(max_bits()) + " points");
    }
    const std::size_t n = v.base();
    const std::size_t w = v.weight();
    const auto g = v.cumulative_table();
    const BigInt y_scale = big_pow(w, level);
    std::vector<PlotPoint> out;
    out.reserve(count + 1);
    std::vector<std::size_t> digits(level);
    for (std::size_t k = 0; k < count; ++k) {
        std::size_t rest = k;
        for (std::size_t i = level; i-- > 0;) {
            digits[i] = rest % n;
            rest /= n;
        }
        // Value at k/N^n: the digit sum stops after the first dropped digit.
        BigInt y = 0;
        std::size_t used = 0;
        for (; used < level; ++used) {
            y = y * static_cast<unsigned long>(w) + g[digits[used]];
            if (!v.bit(digits[used])) {
                ++used;
                break;
            }
        }
        y *= big_pow(w, level - used);
        out.emplace_back(Rational(BigInt(static_cast<unsigned long>(k)), big_pow(n, level)), Rational(y, y_scale));
    }
    out.emplace_back(Rational(1), Rational(1));
    return out;
}

bool member_rational(const DigitVector& v, const Rational& x) {
    if (x.sign() < 0 || x > Rational(1)) {
        throw error(errc::out_of_range, "membership needs 0 <= x <= 1, got " + x.str());
    }
    const std::size_t n = v.base();
    if (x == Rational(1)) {
        return v.bit(n - 1);
    }
    const PeriodicExpansion e = to_expansion(x, n);
    if (all_kept(v, e.preperiod) && all_kept(v, e.period)) {
        return true;
    }
    const auto alt = alternate_expansion(x, n);
    return alt && all_kept(v, alt->preperiod) && all_kept(v, alt->period);
}

Classification classify(const DigitVector& v, const Rational& x) { return RationalValue{eval(v, x)}; }

Classification classify(const DigitVector& v, DigitStream& x, std::size_t depth) {
    if (depth == 0) {
        throw error(errc::out_of_range, "classification depth must be at least 1");
    }
    const std::size_t n = v.base();
    if (x.base() == n) {
        for (std::size_t i = 0; i < depth; ++i) {
            if (!v.bit(x.digit(i))) return NotMemberAt{i + 1};
        }
        return IrrationalAtDepth{depth};
    }
    BaseConverter conv(x, n, default_fetch_budget(x.base(), n, depth));
    for (std::size_t i = 0; i < depth; ++i) {
        const auto d = conv.next();
        if (!d) {
            throw error(errc::insufficient_prefix, "could not certify base-" + std::to_string(n) + " digit " +
                                                       std::to_string(i + 1));
        }
        if (!v.bit(*d)) return NotMemberAt{i + 1};
    }
    return IrrationalAtDepth{depth};
}

bool check_invariance(const DigitVector& v, const Rational& x) {
    const Rational lhs = eval(v, x);
    const Rational w(static_cast<long long>(v.weight()));
    Rational rhs = 0;
    const Rational scaled = x * Rational(static_cast<long long>(v.base()));
    for (std::size_t k = 0; k < v.base(); ++k) {
        if (v.bit(k)) {
            rhs += eval(v, scaled - Rational(static_cast<long long>(k)));
        }
    }
    return lhs == rhs / w;
}

Rational reverse_value(const DigitVector& v, const Rational& x) {
    const Rational mirrored = Rational(1) - eval(v, Rational(1) - x);
    if (mirrored != eval(reverse(v), x)) {
        throw std::logic_error("reversal identity failed at " + x.str());
    }
    return mirrored;
}

}  // namespace cantor
