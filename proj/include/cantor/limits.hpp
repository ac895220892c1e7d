#pragma once

#include <cstddef>

namespace cantor {

/// Upper bound on the length of any digit vector built by power/lift
/// operations and on enumerations that scale with it. Defaults to 10^6 and
/// can be overridden with the CANTOR_CDF_MAX_BITS environment variable.
std::size_t max_bits() noexcept;
void set_max_bits(std::size_t cap) noexcept;

/// base^exponent, or 0 when the result would exceed `cap`.
std::size_t checked_pow(std::size_t base, std::size_t exponent, std::size_t cap) noexcept;

}  // namespace cantor
