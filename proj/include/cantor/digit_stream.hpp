#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "cantor/expansion.hpp"
#include "cantor/rational.hpp"

namespace cantor {

/// Lazily generated base-M digit sequence 0.d_1 d_2 d_3 ... standing in for
/// a (typically irrational) point of [0,1]. Digits are cached as they are
/// fetched, so a stream is a growable prefix of a fixed infinite sequence.
///
/// Not thread-safe: fetching mutates the cache. Copies are independent and
/// produce the same digits.
class DigitStream {
public:
    using Generator = std::function<Digit(std::size_t index)>;

    /// I.i.d. digits drawn uniformly from `alphabet` by a seeded mt19937_64.
    static DigitStream seeded(std::size_t base, std::vector<Digit> alphabet, std::uint64_t seed);
    /// Digit at 0-based index i is fn(i).
    static DigitStream from_function(std::size_t base, Generator fn);
    /// Digits of an eventually periodic expansion.
    static DigitStream from_expansion(const PeriodicExpansion& e);

    std::size_t base() const noexcept { return base_; }

    /// 0-based: digit(0) is the first digit after the radix point.
    Digit digit(std::size_t index);
    std::span<const Digit> prefix(std::size_t length);
    /// Exact value of the first `length` digits.
    Rational prefix_value(std::size_t length);
    std::size_t fetched() const noexcept { return cache_.size(); }

private:
    DigitStream() = default;
    void fill_to(std::size_t length);

    std::size_t base_ = 2;
    std::vector<Digit> cache_;
    std::vector<Digit> alphabet_;
    std::mt19937_64 engine_;
    Generator generator_;
};

/// Re-expands a stream in another base using exact interval arithmetic. A
/// target digit is emitted only when every point consistent with the fetched
/// source prefix shares it, so emitted digits are never guessed. Holds a
/// reference to `source`, which must outlive the converter.
class BaseConverter {
public:
    BaseConverter(DigitStream& source, std::size_t target_base, std::size_t fetch_budget);

    /// Next target digit, or nullopt when the source fetch budget ran out
    /// before the digit was determined.
    std::optional<Digit> next();

    std::size_t target_base() const noexcept { return target_; }
    std::size_t source_digits_used() const noexcept { return consumed_; }

private:
    DigitStream* source_;
    std::size_t target_;
    std::size_t budget_;
    std::size_t consumed_ = 0;
    // Current interval is [lo/den, (lo + width)/den] in rescaled coordinates.
    BigInt lo_ = 0;
    BigInt width_ = 1;
    BigInt den_ = 1;
};

/// First `count` base-`target` digits of the stream; throws
/// insufficient_prefix when more than `fetch_budget` source digits would be
/// needed. Same-base requests return the stream digits directly.
std::vector<Digit> convert_digits(DigitStream& source, std::size_t target_base, std::size_t count,
                                  std::size_t fetch_budget);

/// Default fetch budget for converting `count` digits between two bases.
std::size_t default_fetch_budget(std::size_t source_base, std::size_t target_base, std::size_t count);

}  // namespace cantor
