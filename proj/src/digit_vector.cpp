#include "cantor/digit_vector.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "cantor/dependence.hpp"
#include "cantor/errors.hpp"
#include "cantor/limits.hpp"

namespace cantor {
namespace {

void check_weight(std::size_t base, std::size_t weight) {
    if (base < 3) {
        throw error(errc::degenerate_vector, "base " + std::to_string(base) + " is below 3");
    }
    if (weight < 2 || weight > base - 1) {
        throw error(errc::degenerate_vector, "weight " + std::to_string(weight) + " outside 2.." +
                                                 std::to_string(base - 1));
    }
}

std::size_t checked_length(std::size_t base, std::size_t exponent) {
    const std::size_t len = checked_pow(base, exponent, max_bits());
    if (len == 0) {
        throw error(errc::resource_limit, std::to_string(base) + "^" + std::to_string(exponent) +
                                              " exceeds the length cap of " + std::to_string(max_bits()));
    }
    return len;
}

}  // namespace

DigitVector::DigitVector(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
    cumulative_.resize(bits_.size() + 1, 0);
    for (std::size_t i = 0; i < bits_.size(); ++i) {
        cumulative_[i + 1] = cumulative_[i] + bits_[i];
    }
}

DigitVector DigitVector::validate(std::size_t base, std::span<const std::uint8_t> bits) {
    if (bits.size() != base) {
        throw error(errc::length_mismatch, "expected " + std::to_string(base) + " bits, got " +
                                               std::to_string(bits.size()));
    }
    std::size_t weight = 0;
    for (auto b : bits) {
        if (b > 1) {
            throw error(errc::invalid_data, "vector entries must be 0 or 1");
        }
        weight += b;
    }
    check_weight(base, weight);
    return DigitVector(std::vector<std::uint8_t>(bits.begin(), bits.end()));
}

DigitVector DigitVector::from_bit_string(std::string_view text) {
    std::vector<std::uint8_t> bits;
    bits.reserve(text.size());
    for (char c : text) {
        if (c != '0' && c != '1') {
            throw error(errc::parse_error, "bit strings use only 0 and 1, got '" + std::string(text) + "'");
        }
        bits.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return validate(bits.size(), bits);
}

DigitVector DigitVector::from_digits(std::size_t base, std::span<const std::size_t> digits) {
    std::vector<std::uint8_t> bits(base, 0);
    for (std::size_t d : digits) {
        if (d >= base) {
            throw error(errc::index_out_of_range, "digit " + std::to_string(d) + " out of range for base " +
                                                      std::to_string(base));
        }
        if (bits[d]) {
            throw error(errc::invalid_data, "digit " + std::to_string(d) + " listed twice");
        }
        bits[d] = 1;
    }
    return validate(base, bits);
}

std::size_t DigitVector::cumulative(std::size_t k) const {
    if (k > base()) {
        throw error(errc::index_out_of_range, "g(" + std::to_string(k) + ") needs k <= " + std::to_string(base()));
    }
    return cumulative_[k];
}

DigitSet DigitVector::digit_set() const {
    DigitSet s;
    s.base = base();
    for (std::size_t i = 0; i < bits_.size(); ++i) {
        if (bits_[i]) s.digits.push_back(i);
    }
    return s;
}

std::string DigitVector::bit_string() const {
    std::string out;
    out.reserve(bits_.size());
    for (auto b : bits_) out += static_cast<char>('0' + b);
    return out;
}

bool DigitSet::contains(std::size_t d) const { return std::binary_search(digits.begin(), digits.end(), d); }

DigitVector validate(std::size_t base, std::span<const std::uint8_t> bits) {
    return DigitVector::validate(base, bits);
}

std::size_t cumulative_digit(const DigitVector& v, std::size_t k) { return v.cumulative(k); }

DigitVector vector_from_cumulative(std::span<const long long> g) {
    if (g.size() < 4) {
        throw error(errc::invalid_cumulative, "a g-table needs at least 4 entries");
    }
    if (g[0] != 0) {
        throw error(errc::invalid_cumulative, "g(0) must be 0");
    }
    std::vector<std::uint8_t> bits;
    bits.reserve(g.size() - 1);
    for (std::size_t k = 0; k + 1 < g.size(); ++k) {
        const long long step = g[k + 1] - g[k];
        if (step != 0 && step != 1) {
            throw error(errc::invalid_cumulative, "g(" + std::to_string(k + 1) + ") - g(" + std::to_string(k) +
                                                      ") is not 0 or 1");
        }
        bits.push_back(static_cast<std::uint8_t>(step));
    }
    const long long total = g.back();
    const long long n = static_cast<long long>(bits.size());
    if (total < 2 || total > n - 1) {
        throw error(errc::invalid_cumulative, "g(N) = " + std::to_string(total) + " outside 2.." +
                                                  std::to_string(n - 1));
    }
    return DigitVector::validate(bits.size(), bits);
}

DigitVector kronecker(const DigitVector& left, const DigitVector& right) {
    const std::size_t nl = left.base();
    const std::size_t nr = right.base();
    if (nl > max_bits() / nr) {
        throw error(errc::resource_limit, "Kronecker product length exceeds the length cap of " +
                                              std::to_string(max_bits()));
    }
    std::vector<std::uint8_t> bits(nl * nr, 0);
    for (std::size_t m = 0; m < nl; ++m) {
        if (!left.bit(m)) continue;
        for (std::size_t n = 0; n < nr; ++n) {
            bits[n + m * nr] = right.bits()[n];
        }
    }
    return DigitVector::validate(bits.size(), bits);
}

DigitVector power(const DigitVector& v, std::size_t n) {
    if (n == 0) {
        throw error(errc::out_of_range, "Kronecker power needs n >= 1");
    }
    checked_length(v.base(), n);
    DigitVector out = v;
    for (std::size_t i = 1; i < n; ++i) {
        out = kronecker(out, v);
    }
    return out;
}

DigitVector reverse(const DigitVector& v) {
    std::vector<std::uint8_t> bits(v.bits().rbegin(), v.bits().rend());
    return DigitVector::validate(bits.size(), bits);
}

DigitVector canonical_root(const DigitVector& v) {
    const std::size_t n = v.base();
    const PerfectPower pp = perfect_power_root(n);
    // Smallest J first: N = J^k with k = exponent/t for each divisor t.
    for (unsigned t = 1; t < pp.exponent; ++t) {
        if (pp.exponent % t != 0) continue;
        const std::size_t j = checked_pow(pp.root, t, n);
        const std::size_t k = pp.exponent / t;
        if (j < 3) continue;
        const std::size_t lead = n / j;
        std::vector<std::uint8_t> bits(j, 0);
        for (std::size_t i = 0; i < n; ++i) {
            if (v.bit(i)) bits[i / lead] = 1;
        }
        const std::size_t weight = static_cast<std::size_t>(std::count(bits.begin(), bits.end(), 1));
        if (weight < 2 || weight > j - 1) continue;
        const DigitVector root = DigitVector::validate(j, bits);
        if (power(root, k) == v) {
            return root;
        }
    }
    return v;
}

std::optional<EquivalenceWitness> equivalence_witness(const DigitVector& a, const DigitVector& b) {
    const auto cp = common_power(a.base(), b.base());
    if (!cp) {
        return std::nullopt;
    }
    const std::size_t l = std::lcm<std::size_t>(cp->left, cp->right);
    checked_length(cp->root, l);
    const std::size_t pa = l / cp->left;
    const std::size_t pb = l / cp->right;
    DigitVector lifted = power(a, pa);
    if (!(lifted == power(b, pb))) {
        return std::nullopt;
    }
    return EquivalenceWitness{cp->root, pa, pb, std::move(lifted)};
}

bool equivalent(const DigitVector& a, const DigitVector& b) {
    if (a.base() == b.base()) {
        return a == b;
    }
    return equivalence_witness(a, b).has_value();
}

std::vector<DigitVector> enumerate_vectors(std::size_t base) {
    if (base < 3) {
        return {};
    }
    if (base >= 63 || (std::size_t{1} << base) > max_bits()) {
        throw error(errc::resource_limit, "enumerating base " + std::to_string(base) + " exceeds the length cap");
    }
    std::vector<DigitVector> out;
    std::vector<std::uint8_t> bits(base);
    const std::uint64_t total = std::uint64_t{1} << base;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        // b_0 is the most significant bit so masks run in bit-string order.
        std::size_t weight = 0;
        for (std::size_t i = 0; i < base; ++i) {
            bits[i] = static_cast<std::uint8_t>((mask >> (base - 1 - i)) & 1U);
            weight += bits[i];
        }
        if (weight >= 2 && weight <= base - 1) {
            out.push_back(DigitVector::validate(base, bits));
        }
    }
    return out;
}

}  // namespace cantor
