#include <random>

#include "cantor/cdf.hpp"
#include "cantor/interpolation.hpp"
#include "support.hpp"

using namespace cantor;

namespace {

std::vector<DataPoint> data(std::initializer_list<std::pair<const char*, const char*>> pts) {
    std::vector<DataPoint> out;
    for (const auto& [x, y] : pts) out.push_back({R(x), R(y)});
    return out;
}

// Brute-force smallest admissible common denominator.
std::size_t smallest_scale(const std::vector<DataPoint>& pts) {
    BigInt xl = 1;
    BigInt yl = 1;
    for (const auto& p : pts) {
        mpz_lcm(xl.get_mpz_t(), xl.get_mpz_t(), p.x.denominator().get_mpz_t());
        mpz_lcm(yl.get_mpz_t(), yl.get_mpz_t(), p.y.denominator().get_mpz_t());
    }
    for (std::size_t n = xl.get_ui();; n += xl.get_ui()) {
        long prev_a = 0;
        long prev_c = 0;
        bool ok = true;
        for (const auto& p : pts) {
            const long a = (p.x * Rational(static_cast<long long>(n))).numerator().get_si();
            const long c = (p.y * Rational(yl)).numerator().get_si();
            ok = ok && a - prev_a >= c - prev_c + 1;
            prev_a = a;
            prev_c = c;
        }
        ok = ok && static_cast<long>(n) - prev_a >= yl.get_si() - prev_c + 1;
        if (ok) return n;
    }
}

}  // namespace

TEST_CASE("normalization examples") {
    auto n = normalize(data({{"1/3", "1/2"}}));
    CHECK(n.scale == 6);
    CHECK(n.weight == 2);
    CHECK(n.a == std::vector<std::size_t>{2});
    CHECK(n.c == std::vector<std::size_t>{1});
    n = normalize(data({{"1/2", "1/2"}}));
    CHECK(n.scale == 4);
    n = normalize(data({{"1/4", "1/3"}, {"1/2", "2/3"}}));
    CHECK(n.scale == 8);
    CHECK(n.weight == 3);
    CHECK(n.a == std::vector<std::size_t>{2, 4});
    CHECK(n.c == std::vector<std::size_t>{1, 2});
}

TEST_CASE("interpolation examples") {
    CHECK(interpolate(data({{"1/3", "1/2"}})) == V("101000"));
    const auto v = interpolate(data({{"1/4", "1/3"}, {"1/2", "2/3"}}));
    CHECK(v == V("10101000"));
    CHECK(eval(v, R("1/4")) == R("1/3"));
    CHECK(eval(v, R("1/2")) == R("2/3"));
}

TEST_CASE("invalid datasets") {
    CHECK_ERRC(interpolate({}), errc::invalid_data);
    CHECK_ERRC(interpolate(data({{"0", "1/2"}})), errc::invalid_data);
    CHECK_ERRC(interpolate(data({{"1/2", "1"}})), errc::invalid_data);
    CHECK_ERRC(interpolate(data({{"1/4", "1/2"}, {"1/2", "1/3"}})), errc::invalid_data);
    CHECK_ERRC(interpolate(data({{"1/4", "1/2"}, {"1/4", "1/2"}})), errc::invalid_data);
    CHECK_ERRC(interpolate_at_scale(data({{"1/3", "1/2"}}), 4), errc::invalid_data);
}

TEST_CASE("random datasets: exact, minimal, non-unique") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<DataPoint> pts;
        const int k = 1 + static_cast<int>(rng() % 5);
        std::vector<Rational> xs;
        std::vector<Rational> ys;
        while (static_cast<int>(xs.size()) < k) {
            const long den = 2 + static_cast<long>(rng() % 11);
            const Rational x(1 + static_cast<long>(rng() % (den - 1)), den);
            if (std::find(xs.begin(), xs.end(), x) == xs.end()) xs.push_back(x);
        }
        for (int i = 0; i < k; ++i) {
            const long den = 2 + static_cast<long>(rng() % 11);
            ys.emplace_back(1 + static_cast<long>(rng() % (den - 1)), den);
        }
        std::sort(xs.begin(), xs.end());
        std::sort(ys.begin(), ys.end());
        for (int i = 0; i < k; ++i) pts.push_back({xs[i], ys[i]});

        const auto n = normalize(pts);
        CHECK(n.scale == smallest_scale(pts));
        const auto v = build_interpolant(n);
        const auto w = interpolate_at_scale(pts, 2 * n.scale);
        CHECK_FALSE(v == w);
        for (const auto& p : pts) {
            CHECK(eval(v, p.x) == p.y);
            CHECK(eval(w, p.x) == p.y);
        }
        const Rational bound = max_error(pts);
        for (int i = 0; i < 20; ++i) {
            const Rational x = from_q(oracle::random_unit(rng, 997));
            Rational d = eval(v, x) - eval(w, x);
            if (d.sign() < 0) d = -d;
            CHECK(d <= bound);
        }
    }
}

TEST_CASE("max error") {
    CHECK(max_error(data({{"1/4", "1/3"}, {"3/4", "2/3"}})) == R("1/3"));
    CHECK(max_error(data({{"1/2", "1/2"}})) == R("1/2"));
    for (long k = 1; k <= 9; ++k) {
        std::vector<DataPoint> pts;
        for (long i = 1; i <= k; ++i) pts.push_back({Rational(i, k + 1), Rational(i, k + 1)});
        CHECK(max_error(pts) == Rational(1, k + 1));
    }
}

namespace {

DigitStream sqrt_half_digits() {
    // 0.70710678118654752440... (sqrt(2)/2), enough digits for the tests.
    static const std::string digits = "70710678118654752440084436210484903928";
    return DigitStream::from_function(10, [](std::size_t i) -> Digit {
        return static_cast<Digit>(digits.at(i) - '0');
    });
}

}  // namespace

TEST_CASE("bracketing streams") {
    std::vector<MixedPoint> pts;
    pts.push_back({sqrt_half_digits(), R("1/2")});
    const auto brackets = bracket_points(pts, 4);
    REQUIRE(brackets.size() == 2);
    CHECK(brackets[0].x == R("7070/10000"));
    CHECK(brackets[1].x == R("7072/10000"));
    const auto v = interpolate_bracketing(pts, 4);
    CHECK(eval(v, R("7070/10000")) == R("1/2"));
    CHECK(eval(v, R("7072/10000")) == R("1/2"));
    CHECK(eval(v, R("7071/10000")) == R("1/2"));

    std::vector<MixedPoint> close;
    close.push_back({sqrt_half_digits(), R("1/3")});
    close.push_back({DigitStream::from_function(10, [](std::size_t i) -> Digit { return i < 4 ? "7071"[i] - '0' : 9; }),
                     R("2/3")});
    CHECK_ERRC(bracket_points(close, 4), errc::insufficient_precision);
    CHECK_NOTHROW(bracket_points(std::move(close), 8));

    std::vector<MixedPoint> edge;
    edge.push_back({DigitStream::from_function(10, [](std::size_t) -> Digit { return 0; }), R("1/2")});
    CHECK_ERRC(bracket_points(std::move(edge), 3), errc::insufficient_precision);

    std::vector<MixedPoint> exact;
    exact.push_back({R("1/4"), R("1/3")});
    exact.push_back({R("1/2"), R("2/3")});
    CHECK(interpolate_bracketing(std::move(exact), 3) == interpolate(data({{"1/4", "1/3"}, {"1/2", "2/3"}})));
}
