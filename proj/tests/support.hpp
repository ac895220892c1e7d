#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <doctest.h>

#include "cantor/digit_vector.hpp"
#include "cantor/errors.hpp"
#include "cantor/rational.hpp"
#include "oracles.hpp"

inline cantor::Rational R(const char* text) { return cantor::Rational::parse(text); }

inline cantor::Rational from_q(const oracle::Q& value) { return cantor::Rational(value.get_num(), value.get_den()); }

inline cantor::DigitVector V(const char* bits) { return cantor::DigitVector::from_bit_string(bits); }

inline cantor::DigitVector from_bits(const std::vector<int>& bits) {
    std::vector<std::uint8_t> raw(bits.begin(), bits.end());
    return cantor::DigitVector::validate(raw.size(), raw);
}

inline std::vector<int> to_bits(const cantor::DigitVector& v) { return {v.bits().begin(), v.bits().end()}; }

#define CHECK_ERRC(expr, expected)                                      \
    do {                                                                \
        bool thrown_ = false;                                           \
        try {                                                           \
            (void)(expr);                                               \
        } catch (const cantor::error& e) {                              \
            thrown_ = true;                                             \
            CHECK_MESSAGE(e.code() == (expected), e.what());            \
        }                                                               \
        CHECK_MESSAGE(thrown_, "expected " #expected " from " #expr);  \
    } while (false)
