#include "cantor/dependence.hpp"

#include <bit>

#include <gmpxx.h>

#include "cantor/errors.hpp"

namespace cantor {

PerfectPower perfect_power_root(std::uint64_t n) {
    if (n < 2) {
        throw error(errc::out_of_range, "perfect_power_root needs n >= 2");
    }
    const mpz_class value(std::to_string(n));
    const unsigned top = static_cast<unsigned>(std::bit_width(n)) - 1;
    // Largest exponent first gives the smallest root.
    for (unsigned k = top; k >= 2; --k) {
        mpz_class root;
        if (mpz_root(root.get_mpz_t(), value.get_mpz_t(), k) != 0) {
            return {root.get_ui(), k};
        }
    }
    return {n, 1};
}

std::optional<CommonPower> common_power(std::uint64_t r, std::uint64_t s) {
    if (r < 2 || s < 2) {
        throw error(errc::out_of_range, "common_power needs both bases >= 2");
    }
    const PerfectPower pr = perfect_power_root(r);
    const PerfectPower ps = perfect_power_root(s);
    if (pr.root != ps.root) {
        return std::nullopt;
    }
    return CommonPower{pr.root, pr.exponent, ps.exponent};
}

bool multiplicatively_dependent(std::uint64_t r, std::uint64_t s) {
    if (r == 0 || s == 0) {
        throw error(errc::out_of_range, "multiplicative dependence is defined for positive integers");
    }
    if (r == 1 || s == 1) {
        return true;
    }
    return common_power(r, s).has_value();
}

}  // namespace cantor
