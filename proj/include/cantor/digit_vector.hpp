#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cantor {

struct DigitSet;

/// Binary representation (b_0, ..., b_{N-1}) of a non-degenerate Cantor set:
/// base N >= 3 and 2 <= weight <= N - 1. Degenerate vectors cannot be
/// constructed, so every function taking a DigitVector may assume validity.
class DigitVector {
public:
    /// Throws degenerate_vector or length_mismatch.
    static DigitVector validate(std::size_t base, std::span<const std::uint8_t> bits);
    /// Bit string such as "1101"; the base is its length.
    static DigitVector from_bit_string(std::string_view bits);
    static DigitVector from_digits(std::size_t base, std::span<const std::size_t> digits);

    std::size_t base() const noexcept { return bits_.size(); }
    std::size_t weight() const noexcept { return cumulative_.back(); }
    bool bit(std::size_t i) const noexcept { return bits_[i] != 0; }
    const std::vector<std::uint8_t>& bits() const noexcept { return bits_; }

    /// g(k) = b_0 + ... + b_{k-1} for 0 <= k <= N; throws index_out_of_range.
    std::size_t cumulative(std::size_t k) const;
    /// The full table g(0..N), unchecked access for hot loops.
    std::span<const std::size_t> cumulative_table() const noexcept { return cumulative_; }

    DigitSet digit_set() const;
    std::string bit_string() const;

    friend bool operator==(const DigitVector& a, const DigitVector& b) { return a.bits_ == b.bits_; }
    friend bool operator<(const DigitVector& a, const DigitVector& b) {
        if (a.base() != b.base()) return a.base() < b.base();
        return a.bits_ < b.bits_;
    }

private:
    explicit DigitVector(std::vector<std::uint8_t> bits);

    std::vector<std::uint8_t> bits_;
    std::vector<std::size_t> cumulative_;
};

/// Digit set D of a base-N Cantor set, strictly increasing.
struct DigitSet {
    std::size_t base = 0;
    std::vector<std::size_t> digits;

    bool contains(std::size_t d) const;
    DigitVector to_vector() const { return DigitVector::from_digits(base, digits); }

    friend bool operator==(const DigitSet&, const DigitSet&) = default;
};

DigitVector validate(std::size_t base, std::span<const std::uint8_t> bits);

std::size_t cumulative_digit(const DigitVector& v, std::size_t k);

/// Inverse of the g-table: b_k = g(k+1) - g(k). Throws invalid_cumulative
/// when g(0) != 0, a step leaves {0, 1}, or g(N) is outside {2, ..., N-1}.
DigitVector vector_from_cumulative(std::span<const long long> g_values);

/// (left ⊗ right)(n + m * N_right) = left_m * right_n.
DigitVector kronecker(const DigitVector& left, const DigitVector& right);

/// n-fold Kronecker power; throws resource_limit when N^n exceeds max_bits().
DigitVector power(const DigitVector& v, std::size_t n);

DigitVector reverse(const DigitVector& v);

/// Shortest R with v = R^{⊗k} for some k >= 1.
DigitVector canonical_root(const DigitVector& v);

struct EquivalenceWitness {
    std::uint64_t common_base;  // J
    std::size_t left_power;     // left is lifted to left^{⊗left_power}
    std::size_t right_power;
    DigitVector lifted_vector;  // the common lift, base J^{lcm}
};

/// True iff F_a = F_b. Independent bases are never equivalent; dependent
/// bases are compared after lifting both to a common Kronecker power.
bool equivalent(const DigitVector& a, const DigitVector& b);

/// The lift that proves a ≡ b, or nullopt when they are not equivalent.
std::optional<EquivalenceWitness> equivalence_witness(const DigitVector& a, const DigitVector& b);

/// All valid vectors of the given base, in lexicographic bit order.
std::vector<DigitVector> enumerate_vectors(std::size_t base);

}  // namespace cantor
