#pragma once

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <map>
#include <mutex>
#include <utility>
#include <variant>
#include <vector>

#include "cantor/cdf.hpp"
#include "cantor/digit_stream.hpp"
#include "cantor/digit_vector.hpp"
#include "cantor/rational.hpp"

namespace cantor {

/// Queryable black-box CDF. Either simulates a hidden vector exactly or
/// replays a table of stored samples. Every query is counted and logged;
/// counters are atomic and the log is mutex-guarded.
class CdfOracle {
public:
    using SampleTable = std::map<Rational, Rational>;

    static CdfOracle hidden(DigitVector v);
    static CdfOracle table(SampleTable samples);

    CdfOracle(const CdfOracle&) = delete;
    CdfOracle& operator=(const CdfOracle&) = delete;
    CdfOracle(CdfOracle&& other) noexcept;

    /// F(x). Table mode throws missing_sample for unlisted x.
    Rational query(const Rational& x);
    /// Classification of F on a probe stream. Hidden mode only.
    Classification query_stream(DigitStream& x, std::size_t depth);

    std::size_t rational_queries() const noexcept { return rational_queries_.load(); }
    std::size_t stream_queries() const noexcept { return stream_queries_.load(); }
    std::size_t total_queries() const noexcept { return rational_queries() + stream_queries(); }
    void reset_counts();

    /// (x, F(x)) for every rational query, in query order.
    std::vector<std::pair<Rational, Rational>> query_log() const;

    const DigitVector* hidden_vector() const noexcept;

private:
    using Mode = std::variant<DigitVector, SampleTable>;
    explicit CdfOracle(Mode mode) : mode_(std::move(mode)) {}

    Mode mode_;
    std::atomic<std::size_t> rational_queries_{0};
    std::atomic<std::size_t> stream_queries_{0};
    mutable std::mutex log_mutex_;
    std::vector<std::pair<Rational, Rational>> log_;
};

/// Queries k/N for k = 1..N-1 (exactly N-1 queries). Throws
/// inconsistent_samples when the increments do not fit a base-N vector.
DigitVector reconstruct_known_n(CdfOracle& oracle, std::size_t base);

/// The ℓ used by conditional sampling: smallest positive integer with
/// 2^(ℓ+1) > N - 1.
std::size_t conditional_depth(std::size_t base);

/// Pair-probe point 2m/N^(ℓ+1) + sum_{n=1..ℓ} (2m-1)/N^n.
Rational pair_probe(std::size_t base, std::size_t m, std::size_t ell);

/// Adaptive reconstruction with at most floor(N/2) queries. A forward scan
/// over digit pairs finds the weight and first kept digit, then a mirrored
/// scan over the reversed vector (sampled through 1 - F(1 - x)) fills the
/// rest. Throws unclassifiable_sample when a value fits no pair pattern.
DigitVector conditional_reconstruct(CdfOracle& oracle, std::size_t base);

/// Two distinct base-N vectors whose CDFs agree at every given point, for
/// fewer than floor(N/2) points. Throws no_gap_found when none exists.
std::pair<DigitVector, DigitVector> indistinguishable_pair(std::size_t base, const std::vector<Rational>& points);

/// A probe x_{M,D_i}: a stream over a two-digit set {first, second} of base M.
struct StreamProbe {
    std::size_t base;
    std::size_t first;
    std::size_t second;
    DigitStream stream;
};

/// One probe per two-element digit set of `base`, seeded deterministically.
/// A candidate stream is rejected and redrawn when its first 2*depth digits
/// repeat with a period of at most depth/2.
std::vector<StreamProbe> make_probes(std::size_t base, std::uint64_t seed, std::size_t depth);

/// Union of the D_i whose probes classify as IrrationalAtDepth. An empty
/// result means the base is ruled out.
DigitSet infer_digit_set(CdfOracle& oracle, std::size_t base, std::vector<StreamProbe>& probes,
                         std::size_t depth);

/// {m/M^2 : 2 <= M <= K, 1 <= m < M^2}, sorted and deduplicated.
std::vector<Rational> s2_points(std::size_t bound);

struct UniquenessSet {
    std::size_t bound;
    std::vector<Rational> rational_points;
    std::vector<StreamProbe> stream_probes;
};

UniquenessSet build_uniqueness_set(std::size_t bound, std::uint64_t seed,
                                   std::size_t depth = default_classify_depth);

/// (5/6)K^3 - (3/2)K^2 + (5/3)K, the size bound on the full sampling set.
Rational uniqueness_size_bound(std::size_t bound);

struct BoundedReconstruction {
    DigitVector vector;                   // canonical root of the survivors
    std::vector<DigitVector> survivors;   // all candidates left after winnowing
    std::vector<std::size_t> eliminated;  // bases ruled out by the stream phase
};

/// Full pipeline for a hidden scale factor <= K: per-base digit-set
/// inference from stream probes, then exact winnowing on s2_points(K).
/// Throws no_candidate or ambiguous.
BoundedReconstruction reconstruct_bounded_k(CdfOracle& oracle, std::size_t bound, std::size_t depth,
                                            std::uint64_t seed);

/// Every valid vector of base 3..K, grouped by CDF-equivalence class.
struct HypothesisClass {
    std::size_t bound;
    std::vector<DigitVector> vectors;
    /// One representative (a canonical root) per class.
    std::vector<DigitVector> representatives;
    /// class_of[i] indexes `representatives` for vectors[i].
    std::vector<std::size_t> class_of;
};

HypothesisClass hypothesis_class(std::size_t bound);

/// Greedy set cover over the pool {m/M^2 : M <= K}: repeatedly adds the
/// point separating the most still-unseparated class pairs.
std::vector<Rational> bruteforce_distinguishing_set(std::size_t bound);

/// True iff every pair of non-equivalent vectors of base <= K differs at
/// some point.
bool verify_uniqueness(std::size_t bound, const std::vector<Rational>& points);

/// Compares two vectors of bases N^L and N^M on the grid {m / N^(L+M)}.
/// Throws not_dependent when the bases share no common power.
bool depfix_check(const DigitVector& left, const DigitVector& right);

}  // namespace cantor
