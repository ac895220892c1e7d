#include "cantor/limits.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

namespace cantor {
namespace {

std::size_t initial_cap() {
    constexpr std::size_t fallback = 1'000'000;
    const char* env = std::getenv("CANTOR_CDF_MAX_BITS");
    if (env == nullptr || *env == '\0') {
        return fallback;
    }
    try {
        std::size_t used = 0;
        const unsigned long long value = std::stoull(env, &used);
        if (used == std::string(env).size() && value > 0) {
            return static_cast<std::size_t>(value);
        }
    } catch (const std::exception&) {
    }
    return fallback;
}

std::atomic<std::size_t>& cap_storage() {
    static std::atomic<std::size_t> cap{initial_cap()};
    return cap;
}

}  // namespace

std::size_t max_bits() noexcept { return cap_storage().load(std::memory_order_relaxed); }

void set_max_bits(std::size_t cap) noexcept { cap_storage().store(cap, std::memory_order_relaxed); }

std::size_t checked_pow(std::size_t base, std::size_t exponent, std::size_t cap) noexcept {
    std::size_t result = 1;
    for (std::size_t i = 0; i < exponent; ++i) {
        if (base != 0 && result > cap / base) {
            return 0;
        }
        result *= base;
    }
    return result > cap ? 0 : result;
}

}  // namespace cantor
