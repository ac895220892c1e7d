#include <sstream>

#include "support.hpp"

using cantor::Rational;
using cantor::errc;

TEST_CASE("rational parsing and printing") {
    CHECK(R("2/4") == Rational(1, 2));
    CHECK(R(" -3/9 ") == Rational(-1, 3));
    CHECK(R("7") == Rational(7));
    CHECK(R("0.25") == Rational(1, 4));
    CHECK(R("-1.5") == Rational(-3, 2));
    CHECK(R("6/3").str() == "2");
    CHECK(R("1/3").str() == "1/3");
    CHECK_ERRC(R("1/0"), errc::parse_error);
    CHECK_ERRC(R("abc"), errc::parse_error);
    CHECK_ERRC(R("1/-2"), errc::parse_error);
    CHECK_ERRC(R(""), errc::parse_error);
}

TEST_CASE("decimal output truncates toward zero") {
    CHECK(R("2/3").decimal(4) == "0.6666");
    CHECK(R("-2/3").decimal(2) == "-0.66");
    CHECK(R("1/8").decimal(1) == "0.1");
    CHECK(R("5/2").decimal(0) == "2");
    CHECK(R("1/1000").decimal(2) == "0.00");
}

TEST_CASE("arithmetic and ordering") {
    CHECK(R("1/2") + R("1/3") == R("5/6"));
    CHECK(R("1/2") - R("1/3") == R("1/6"));
    CHECK(R("2/3") * R("3/4") == R("1/2"));
    CHECK(R("1/2") / R("1/4") == Rational(2));
    CHECK(R("1/3") < R("1/2"));
    CHECK(R("-7/2").floor() == -4);
    CHECK_ERRC(R("1/2") / Rational(0), errc::invalid_data);
    std::ostringstream os;
    os << R("3/6");
    CHECK(os.str() == "1/2");
}

TEST_CASE("big_pow") {
    CHECK(cantor::big_pow(3, 0) == 1);
    CHECK(cantor::big_pow(10, 20).get_str() == "100000000000000000000");
}
