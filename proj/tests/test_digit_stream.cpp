#include "cantor/digit_stream.hpp"
#include "support.hpp"

using namespace cantor;

TEST_CASE("seeded streams are reproducible and stay in their alphabet") {
    auto a = DigitStream::seeded(3, {0, 2}, 42);
    auto b = DigitStream::seeded(3, {0, 2}, 42);
    const auto pa = a.prefix(200);
    const auto pb = b.prefix(200);
    CHECK(std::equal(pa.begin(), pa.end(), pb.begin()));
    CHECK(std::all_of(pa.begin(), pa.end(), [](Digit d) { return d == 0 || d == 2; }));
    auto copy = a;
    CHECK(copy.digit(250) == a.digit(250));
    CHECK_ERRC(DigitStream::seeded(3, {0, 3}, 1), errc::invalid_data);
    CHECK_ERRC(DigitStream::seeded(3, {}, 1), errc::invalid_data);
}

TEST_CASE("expansion streams and prefix values") {
    auto s = DigitStream::from_expansion(to_expansion(R("1/4"), 3));
    CHECK(s.digit(0) == 0);
    CHECK(s.digit(1) == 2);
    CHECK(s.digit(5) == 2);
    CHECK(s.prefix_value(2) == R("2/9"));
    CHECK(s.fetched() == 6);
}

namespace {

// Base-M digits of a rational by floor arithmetic, for comparison.
std::vector<Digit> rational_digits(const Rational& x, std::size_t base, std::size_t count) {
    std::vector<Digit> out;
    Rational r = x;
    for (std::size_t i = 0; i < count; ++i) {
        r = r * Rational(static_cast<long long>(base));
        const BigInt d = r.floor();
        out.push_back(static_cast<Digit>(d.get_ui()));
        r = r - Rational(d);
    }
    return out;
}

}  // namespace

TEST_CASE("base conversion of periodic streams matches direct digits") {
    for (const char* x : {"1/4", "1/7", "5/13", "2/3", "7/10"}) {
        for (std::size_t from : {2, 3, 7, 10}) {
            for (std::size_t to : {2, 3, 5, 9, 10}) {
                const Rational v = R(x);
                auto s = DigitStream::from_expansion(to_expansion(v, from));
                // A point with a terminating base-`to` expansion sits on a
                // digit boundary forever, so only the others can convert.
                if (to_expansion(v, to).period == std::vector<Digit>{0}) continue;
                const auto direct = rational_digits(v, to, 40);
                CHECK(convert_digits(s, to, 40, 10000) == direct);
            }
        }
    }
}

TEST_CASE("conversion never guesses") {
    // 0.0222... in base 3 is exactly 1/9, whose base-9 expansion is 0.1;
    // the digit cannot be certified from any finite prefix.
    auto s = DigitStream::from_function(3, [](std::size_t i) -> Digit { return i == 0 ? 0 : 2; });
    BaseConverter conv(s, 9, 200);
    CHECK_FALSE(conv.next().has_value());
    CHECK(conv.source_digits_used() == 200);
    auto t = DigitStream::from_function(3, [](std::size_t i) -> Digit { return i == 0 ? 0 : 2; });
    CHECK_ERRC(convert_digits(t, 9, 1, 50), errc::insufficient_prefix);
}

TEST_CASE("same-base conversion is a passthrough") {
    auto s = DigitStream::seeded(5, {1, 4}, 3);
    auto copy = s;
    const auto direct = copy.prefix(30);
    CHECK(convert_digits(s, 5, 30, 30) == std::vector<Digit>(direct.begin(), direct.end()));
    CHECK_ERRC(convert_digits(s, 5, 31, 30), errc::insufficient_prefix);
}

TEST_CASE("converted random streams stay inside the prefix interval") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto s = DigitStream::seeded(3, {0, 2}, seed);
        auto copy = s;
        const auto digits = convert_digits(s, 2, 64, 200);
        BigInt num = 0;
        for (Digit d : digits) num = num * 2 + d;
        const Rational lo(num, big_pow(2, 64));
        const Rational hi(num + 1, big_pow(2, 64));
        const Rational p = copy.prefix_value(200);
        const Rational width(BigInt(1), big_pow(3, 200));
        CHECK(lo <= p);
        CHECK(p + width <= hi);
    }
}
