#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cantor/rational.hpp"

namespace cantor {

using Digit = std::uint32_t;

/// Eventually periodic base-N digit sequence 0.pre(per)(per)...
struct PeriodicExpansion {
    std::size_t base = 10;
    std::vector<Digit> preperiod;
    std::vector<Digit> period;

    friend bool operator==(const PeriodicExpansion&, const PeriodicExpansion&) = default;
};

/// Canonical expansion of 0 <= x < 1. Terminating rationals get the
/// trailing-zero form; periods are primitive and never all (base-1).
PeriodicExpansion to_expansion(const Rational& x, std::size_t base);

/// Trailing-(base-1) form of a base-adic x in (0, 1]; nullopt otherwise.
std::optional<PeriodicExpansion> alternate_expansion(const Rational& x, std::size_t base);

Rational from_expansion(const PeriodicExpansion& e);

/// Rewrites any valid expansion into the form to_expansion would produce
/// for its value (value 1 is not representable and throws out_of_range).
PeriodicExpansion canonicalize(const PeriodicExpansion& e);

/// Minimal number of preperiod digits of a/b in base N: the smallest s with
/// b | N^s * b', b' coprime to N.
std::size_t preperiod_length(const BigInt& denominator, std::size_t base);

/// Text form `base:pre(per)`, e.g. `3:(02)` or `3:1(0)`. Digits above 9
/// use letters up to base 36; larger bases separate digits with '.'.
std::string format_expansion(const PeriodicExpansion& e);
PeriodicExpansion parse_expansion(std::string_view text);

}  // namespace cantor
