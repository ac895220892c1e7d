#pragma once

#include <cstddef>
#include <cstdint>
#include <variant>
#include <vector>

#include "cantor/digit_stream.hpp"
#include "cantor/digit_vector.hpp"
#include "cantor/rational.hpp"

namespace cantor {

/// Sampler for the invariant measure mu_B: i.i.d. uniform base-N digits
/// over D.
struct MuSampler {
    DigitVector vector;
    std::uint64_t seed;
};

/// Stream i is seeded with seed + i; each has at least `depth` digits
/// fetched.
std::vector<DigitStream> sample_mu(const MuSampler& sampler, std::size_t count, std::size_t depth);

struct FrequencyReport {
    std::size_t base;
    std::vector<std::size_t> counts;
    std::size_t total = 0;
    double max_deviation = 0.0;  // max_d |counts[d]/total - 1/base|

    double frequency(std::size_t digit) const;
    void add(const FrequencyReport& other);
};

/// Counts the first `count` base-M digits of x, each certified by exact
/// interval containment. Throws insufficient_prefix.
FrequencyReport digit_frequency(DigitStream& x, std::size_t target_base, std::size_t count);

/// Aggregate base-M digit counts over `samples` mu_B draws (seed + i),
/// optionally split across `jobs` threads. Deterministic in the seed.
FrequencyReport aggregate_frequency(const DigitVector& v, std::size_t target_base, std::size_t digits,
                                    std::size_t samples, std::uint64_t seed, unsigned jobs = 1);

/// Smallest prefix depth for which h * M^(L-1) * N^-depth < 10^-3.
std::size_t weyl_required_depth(std::size_t stream_base, std::size_t m, std::size_t h, std::size_t length);

/// |sum_{n<L} e(h M^n x)|, fractional parts computed exactly, summed in
/// double precision. Stream inputs use a depth-digit prefix and throw
/// insufficient_prefix when it is too short.
double weyl_sum(DigitStream& x, std::size_t m, std::size_t h, std::size_t length, std::size_t depth);
double weyl_sum(const Rational& x, std::size_t m, std::size_t h, std::size_t length);

/// Median of |sum|/L over mu_B samples seeded seed + i.
double weyl_median_ratio(const DigitVector& v, std::size_t m, std::size_t h, std::size_t length,
                         std::size_t samples, std::uint64_t seed);

struct CharacterBound {
    double average;  // |1/d sum_k e(t eps_k / N^j)|
    double cosine;   // |cos(pi t |eps_a - eps_b| / N^j)| for the maximizing pair
    bool holds;      // average <= cosine + 1e-12
};

CharacterBound character_bound(const DigitSet& digits, std::size_t t, std::size_t j);
bool character_bound_check(const DigitSet& digits, std::size_t t, std::size_t j);

/// Fraction of mu_a samples whose first `depth` base-N_b digits all lie in
/// D_b (membership not refuted).
double intersection_rate(const DigitVector& a, const DigitVector& b, std::size_t count, std::size_t depth,
                         std::uint64_t seed, unsigned jobs = 1);

/// max_k |empirical CDF(p_k) - F(p_k)| for `count` depth-digit mu samples,
/// each sample taken at its prefix value.
double empirical_cdf_distance(const DigitVector& v, std::size_t count, std::size_t depth, std::uint64_t seed,
                              const std::vector<Rational>& probes);

}  // namespace cantor
