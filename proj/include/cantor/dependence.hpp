#pragma once

#include <cstdint>
#include <optional>

namespace cantor {

/// r ~ s: r^m = s^n for integers m, n not both zero. Defined for r, s >= 1;
/// 1 is dependent on everything (1^1 = s^0).
bool multiplicatively_dependent(std::uint64_t r, std::uint64_t s);

struct CommonPower {
    std::uint64_t root;  // J
    unsigned left;       // r = J^left
    unsigned right;      // s = J^right

    friend bool operator==(const CommonPower&, const CommonPower&) = default;
};

/// Minimal J with r = J^p and s = J^q, for r, s >= 2; nullopt when r and s
/// are multiplicatively independent.
std::optional<CommonPower> common_power(std::uint64_t r, std::uint64_t s);

struct PerfectPower {
    std::uint64_t root;
    unsigned exponent;
};

/// Smallest J with n = J^k, together with k (n >= 2).
PerfectPower perfect_power_root(std::uint64_t n);

}  // namespace cantor
