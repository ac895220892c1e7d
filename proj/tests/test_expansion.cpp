#include <random>

#include "cantor/expansion.hpp"
#include "support.hpp"

using namespace cantor;

TEST_CASE("canonical expansions") {
    CHECK(format_expansion(to_expansion(R("1/4"), 3)) == "3:(02)");
    CHECK(format_expansion(to_expansion(R("1/3"), 3)) == "3:1(0)");
    CHECK(format_expansion(to_expansion(R("1/2"), 3)) == "3:(1)");
    CHECK(format_expansion(to_expansion(R("0"), 5)) == "5:(0)");
    CHECK(format_expansion(to_expansion(R("1/6"), 10)) == "10:1(6)");
    CHECK(format_expansion(to_expansion(R("3/8"), 4)) == "4:12(0)");
    CHECK_ERRC(to_expansion(R("1"), 3), errc::out_of_range);
    CHECK_ERRC(to_expansion(R("-1/2"), 3), errc::out_of_range);
    CHECK_ERRC(to_expansion(R("1/2"), 1), errc::out_of_range);
}

TEST_CASE("alternate expansions") {
    CHECK(format_expansion(*alternate_expansion(R("1/3"), 3)) == "3:0(2)");
    CHECK(format_expansion(*alternate_expansion(R("1"), 3)) == "3:(2)");
    CHECK(format_expansion(*alternate_expansion(R("3/8"), 4)) == "4:11(3)");
    CHECK_FALSE(alternate_expansion(R("1/4"), 3).has_value());
    CHECK_FALSE(alternate_expansion(R("0"), 3).has_value());
}

TEST_CASE("preperiod length") {
    CHECK(preperiod_length(12, 10) == 2);
    CHECK(preperiod_length(7, 10) == 0);
    CHECK(preperiod_length(8, 4) == 2);
    CHECK(preperiod_length(1, 3) == 0);
}

TEST_CASE("expansions agree with long division") {
    std::mt19937_64 rng(101);
    for (unsigned base = 2; base <= 16; ++base) {
        for (int i = 0; i < 300; ++i) {
            oracle::Q x = oracle::random_unit(rng, 2000);
            if (x == 1) continue;
            const auto ref = oracle::long_division(x.get_num(), x.get_den(), base);
            const auto e = to_expansion(from_q(x), base);
            CHECK(std::vector<unsigned>(e.preperiod.begin(), e.preperiod.end()) == ref.pre);
            CHECK(std::vector<unsigned>(e.period.begin(), e.period.end()) == ref.period);
            CHECK(from_expansion(e) == from_q(x));
            CHECK(e.preperiod.size() == preperiod_length(x.get_den(), base));
        }
    }
}

TEST_CASE("canonicalize rewrites non-minimal forms") {
    PeriodicExpansion e{3, {0, 2, 0}, {2, 0}};
    CHECK(from_expansion(e) == R("1/4"));
    CHECK(canonicalize(e) == to_expansion(R("1/4"), 3));
    PeriodicExpansion nines{10, {}, {9}};
    CHECK_ERRC(canonicalize(nines), errc::out_of_range);
    PeriodicExpansion half_alt{10, {4}, {9}};
    CHECK(format_expansion(canonicalize(half_alt)) == "10:5(0)");
}

TEST_CASE("text round trip") {
    for (const char* text : {"3:(02)", "3:1(0)", "10:1(6)", "2:(1)", "16:a(f0)"}) {
        CHECK(format_expansion(parse_expansion(text)) == text);
    }
    const auto wide = parse_expansion("40:39.1(0)");
    CHECK(wide.preperiod == std::vector<Digit>{39, 1});
    CHECK(format_expansion(wide) == "40:39.1(0)");
    CHECK_ERRC(parse_expansion("3:(03)"), errc::parse_error);
    CHECK_ERRC(parse_expansion("3:12"), errc::parse_error);
    CHECK_ERRC(parse_expansion("3:1()"), errc::parse_error);
    CHECK_ERRC(parse_expansion("x:(0)"), errc::parse_error);
}
