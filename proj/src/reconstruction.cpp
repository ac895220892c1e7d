#include "cantor/reconstruction.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <string>

#include "cantor/dependence.hpp"
#include "cantor/errors.hpp"
#include "cantor/limits.hpp"

namespace cantor {
namespace {

Rational ratio(std::size_t num, std::size_t den) {
    return Rational(static_cast<long long>(num), static_cast<long long>(den));
}

Rational inverse_power(std::size_t w, std::size_t e) { return Rational(BigInt(1), big_pow(w, e)); }

// 1/W + 1/W^2 + ... + 1/W^ell
Rational geometric_head(std::size_t w, std::size_t ell) {
    Rational sum = 0;
    for (std::size_t n = 1; n <= ell; ++n) sum += inverse_power(w, n);
    return sum;
}

struct PairValues {
    Rational zero_zero;
    Rational one_zero;
    Rational zero_one;
    Rational one_one;
};

// F at the pair probe for digits (2m-2, 2m-1), given g(2m-2) = g and weight W.
PairValues pair_values(std::size_t g, std::size_t w, std::size_t ell) {
    const Rational head = geometric_head(w, ell);
    const Rational tail = inverse_power(w, ell + 1);
    const Rational gg(static_cast<long long>(g));
    return {gg / Rational(static_cast<long long>(w)), (gg + 1) / Rational(static_cast<long long>(w)),
            gg * head + (gg + 1) * tail, (gg + 1) * head + (gg + 2) * tail};
}

[[noreturn]] void unclassifiable(const Rational& x, const Rational& value) {
    throw error(errc::unclassifiable_sample, "F(" + x.str() + ") = " + value.str() +
                                                 " fits no digit-pair pattern; the scale factor is probably wrong");
}

std::uint64_t probe_seed(std::uint64_t seed, std::size_t base, std::size_t first, std::size_t second,
                         std::size_t attempt) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(base), static_cast<std::uint32_t>(first),
                      static_cast<std::uint32_t>(second), static_cast<std::uint32_t>(attempt)};
    std::uint32_t out[2];
    seq.generate(out, out + 2);
    return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

bool short_periodic(std::span<const Digit> digits, std::size_t max_period) {
    for (std::size_t p = 1; p <= max_period && p < digits.size(); ++p) {
        bool periodic = true;
        for (std::size_t i = 0; i + p < digits.size(); ++i) {
            if (digits[i] != digits[i + p]) {
                periodic = false;
                break;
            }
        }
        if (periodic) return true;
    }
    return false;
}

std::vector<Rational> signature(const DigitVector& v, const std::vector<Rational>& points) {
    std::vector<Rational> out;
    out.reserve(points.size());
    for (const auto& x : points) out.push_back(eval(v, x));
    return out;
}

std::vector<Rational> square_pool(std::size_t bound) {
    std::vector<Rational> pool;
    for (std::size_t m = 2; m <= bound; ++m) {
        const std::size_t den = m * m;
        for (std::size_t k = 1; k < den; ++k) pool.push_back(ratio(k, den));
    }
    std::sort(pool.begin(), pool.end());
    pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
    return pool;
}

}  // namespace

CdfOracle CdfOracle::hidden(DigitVector v) { return CdfOracle(Mode(std::move(v))); }

CdfOracle CdfOracle::table(SampleTable samples) { return CdfOracle(Mode(std::move(samples))); }

CdfOracle::CdfOracle(CdfOracle&& other) noexcept
    : mode_(std::move(other.mode_)),
      rational_queries_(other.rational_queries_.load()),
      stream_queries_(other.stream_queries_.load()) {
    std::lock_guard lock(other.log_mutex_);
    log_ = std::move(other.log_);
}

Rational CdfOracle::query(const Rational& x) {
    Rational value;
    if (const auto* v = std::get_if<DigitVector>(&mode_)) {
        value = eval(*v, x);
    } else {
        const auto& table = std::get<SampleTable>(mode_);
        const auto it = table.find(x);
        if (it == table.end()) {
            throw error(errc::missing_sample, "no stored sample at x = " + x.str());
        }
        value = it->second;
    }
    ++rational_queries_;
    std::lock_guard lock(log_mutex_);
    log_.emplace_back(x, value);
    return value;
}

Classification CdfOracle::query_stream(DigitStream& x, std::size_t depth) {
    const auto* v = std::get_if<DigitVector>(&mode_);
    if (!v) {
        throw error(errc::invalid_data, "a sample table cannot answer stream queries");
    }
    ++stream_queries_;
    return classify(*v, x, depth);
}

void CdfOracle::reset_counts() {
    rational_queries_ = 0;
    stream_queries_ = 0;
    std::lock_guard lock(log_mutex_);
    log_.clear();
}

std::vector<std::pair<Rational, Rational>> CdfOracle::query_log() const {
    std::lock_guard lock(log_mutex_);
    return log_;
}

const DigitVector* CdfOracle::hidden_vector() const noexcept { return std::get_if<DigitVector>(&mode_); }

DigitVector reconstruct_known_n(CdfOracle& oracle, std::size_t base) {
    if (base < 3) {
        throw error(errc::out_of_range, "scale factor must be at least 3");
    }
    std::vector<Rational> values{Rational(0)};
    for (std::size_t k = 1; k < base; ++k) values.push_back(oracle.query(ratio(k, base)));
    values.emplace_back(1);

    std::vector<std::uint8_t> bits(base, 0);
    std::size_t weight = 0;
    for (std::size_t k = 0; k < base; ++k) {
        const Rational step = values[k + 1] - values[k];
        if (step.sign() < 0) {
            throw error(errc::inconsistent_samples, "samples decrease between " + ratio(k, base).str() + " and " +
                                                        ratio(k + 1, base).str());
        }
        if (step.sign() > 0) {
            bits[k] = 1;
            ++weight;
        }
    }
    if (weight < 2 || weight > base - 1) {
        throw error(errc::inconsistent_samples, std::to_string(weight) + " nonzero increments cannot come from a base-" +
                                                    std::to_string(base) + " vector");
    }
    const Rational expected = ratio(1, weight);
    for (std::size_t k = 0; k < base; ++k) {
        if (bits[k] && values[k + 1] - values[k] != expected) {
            throw error(errc::inconsistent_samples, "increment on [" + ratio(k, base).str() + ", " +
                                                        ratio(k + 1, base).str() + "] is " +
                                                        (values[k + 1] - values[k]).str() + ", expected " +
                                                        expected.str());
        }
    }
    return DigitVector::validate(base, bits);
}

std::size_t conditional_depth(std::size_t base) {
    std::size_t ell = 1;
    while ((std::size_t{1} << (ell + 1)) <= base - 1) ++ell;
    return ell;
}

Rational pair_probe(std::size_t base, std::size_t m, std::size_t ell) {
    Rational x = Rational(BigInt(static_cast<unsigned long>(2 * m)), big_pow(base, ell + 1));
    for (std::size_t n = 1; n <= ell; ++n) {
        x += Rational(BigInt(static_cast<unsigned long>(2 * m - 1)), big_pow(base, n));
    }
    return x;
}

DigitVector conditional_reconstruct(CdfOracle& oracle, std::size_t base) {
    if (base < 3) {
        throw error(errc::out_of_range, "scale factor must be at least 3");
    }
    const std::size_t n = base;
    const std::size_t half = n / 2;
    const std::size_t ell = conditional_depth(n);
    std::vector<std::uint8_t> bits(n, 0);
    std::size_t weight = 0;
    std::size_t m = 1;

    // Forward scan: leading pairs are zero until the first kept digit.
    for (;; ++m) {
        if (2 * m == n) {
            // Only the last pair is left and the weight is at least 2.
            bits[n - 2] = bits[n - 1] = 1;
            return DigitVector::validate(n, bits);
        }
        if (2 * m > n) {
            throw error(errc::unclassifiable_sample, "every pair probe returned 0");
        }
        const Rational x = pair_probe(n, m, ell);
        const Rational value = oracle.query(x);
        if (value.is_zero()) continue;

        std::size_t matches = 0;
        for (std::size_t w = 2; w <= n - 1; ++w) {
            const PairValues pv = pair_values(0, w, ell);
            const std::pair<int, int> found = value == pv.one_zero   ? std::pair{1, 0}
                                              : value == pv.zero_one ? std::pair{0, 1}
                                              : value == pv.one_one  ? std::pair{1, 1}
                                                                     : std::pair{-1, -1};
            if (found.first < 0) continue;
            ++matches;
            weight = w;
            bits[2 * m - 2] = static_cast<std::uint8_t>(found.first);
            bits[2 * m - 1] = static_cast<std::uint8_t>(found.second);
        }
        if (matches != 1) unclassifiable(x, value);
        break;
    }

    const std::size_t forward_ones = bits[2 * m - 2] + bits[2 * m - 1];
    auto finish = [&]() {
        std::size_t total = 0;
        for (auto b : bits) total += b;
        if (total != weight) {
            throw error(errc::unclassifiable_sample, "recovered digits do not add up to the weight " +
                                                         std::to_string(weight));
        }
        return DigitVector::validate(n, bits);
    };
    auto fill_middle = [&](std::size_t index, std::size_t others) {
        if (others > weight || weight - others > 1) {
            throw error(errc::unclassifiable_sample, "weight " + std::to_string(weight) +
                                                         " leaves no valid middle digit");
        }
        bits[index] = static_cast<std::uint8_t>(weight - others);
    };

    if (2 * m == n) return finish();
    if (2 * m + 1 == n) {
        fill_middle(n - 1, forward_ones);
        return finish();
    }

    // Mirrored scan over the reversed vector, sampled through 1 - F(1 - x).
    std::size_t reversed_ones = 0;
    for (std::size_t mm = 1; mm + m <= half; ++mm) {
        const std::size_t hi = n - 1 - (2 * mm - 2);
        const std::size_t lo = n - 1 - (2 * mm - 1);
        if (forward_ones + reversed_ones == weight) {
            continue;  // all kept digits already found
        }
        const Rational x = pair_probe(n, mm, ell);
        const Rational value = Rational(1) - oracle.query(Rational(1) - x);
        const PairValues pv = pair_values(reversed_ones, weight, ell);
        std::vector<std::pair<int, int>> found;
        if (value == pv.zero_zero) found.emplace_back(0, 0);
        if (value == pv.one_zero) found.emplace_back(1, 0);
        if (value == pv.zero_one) found.emplace_back(0, 1);
        if (value == pv.one_one) found.emplace_back(1, 1);
        if (found.size() != 1) unclassifiable(Rational(1) - x, Rational(1) - value);
        bits[hi] = static_cast<std::uint8_t>(found[0].first);
        bits[lo] = static_cast<std::uint8_t>(found[0].second);
        reversed_ones += bits[hi] + bits[lo];
    }
    if (n % 2 == 1) {
        fill_middle(2 * m, forward_ones + reversed_ones);
    }
    return finish();
}

std::pair<DigitVector, DigitVector> indistinguishable_pair(std::size_t base, const std::vector<Rational>& points) {
    if (base < 4) {
        throw error(errc::out_of_range, "indistinguishable pairs need N >= 4");
    }
    auto empty_between = [&](std::size_t lo, std::size_t hi) {
        const Rational a = ratio(lo, base);
        const Rational b = ratio(hi, base);
        return std::none_of(points.begin(), points.end(), [&](const Rational& x) { return a < x && x < b; });
    };
    for (std::size_t i = 0; i + 1 < base; ++i) {
        if (!empty_between(i, i + 2)) continue;
        for (std::size_t j = 0; j < base; ++j) {
            if (j == i || j == i + 1 || !empty_between(j, j + 1)) continue;
            std::vector<std::uint8_t> b(base, 0);
            std::vector<std::uint8_t> c(base, 0);
            b[i + 1] = 1;
            c[i] = 1;
            b[j] = c[j] = 1;
            return {DigitVector::validate(base, b), DigitVector::validate(base, c)};
        }
    }
    throw error(errc::no_gap_found, "every candidate gap contains a sample point");
}

std::vector<StreamProbe> make_probes(std::size_t base, std::uint64_t seed, std::size_t depth) {
    constexpr std::size_t max_attempts = 1000;
    std::vector<StreamProbe> out;
    for (std::size_t a = 0; a < base; ++a) {
        for (std::size_t b = a + 1; b < base; ++b) {
            bool accepted = false;
            for (std::size_t attempt = 0; attempt < max_attempts && !accepted; ++attempt) {
                auto stream = DigitStream::seeded(base, {static_cast<Digit>(a), static_cast<Digit>(b)},
                                                  probe_seed(seed, base, a, b, attempt));
                if (short_periodic(stream.prefix(2 * depth), depth / 2)) continue;
                out.push_back({base, a, b, std::move(stream)});
                accepted = true;
            }
            if (!accepted) {
                throw error(errc::resource_limit, "could not draw an aperiodic probe");
            }
        }
    }
    return out;
}

DigitSet infer_digit_set(CdfOracle& oracle, std::size_t base, std::vector<StreamProbe>& probes, std::size_t depth) {
    std::vector<bool> seen(base, false);
    for (auto& probe : probes) {
        if (probe.base != base) continue;
        if (std::holds_alternative<IrrationalAtDepth>(oracle.query_stream(probe.stream, depth))) {
            seen[probe.first] = seen[probe.second] = true;
        }
    }
    DigitSet out;
    out.base = base;
    for (std::size_t d = 0; d < base; ++d) {
        if (seen[d]) out.digits.push_back(d);
    }
    return out;
}

std::vector<Rational> s2_points(std::size_t bound) { return square_pool(bound); }

UniquenessSet build_uniqueness_set(std::size_t bound, std::uint64_t seed, std::size_t depth) {
    if (bound < 3) {
        throw error(errc::out_of_range, "the scale bound K must be at least 3");
    }
    UniquenessSet out{bound, s2_points(bound), {}};
    for (std::size_t m = 3; m <= bound; ++m) {
        auto probes = make_probes(m, seed, depth);
        std::move(probes.begin(), probes.end(), std::back_inserter(out.stream_probes));
    }
    return out;
}

Rational uniqueness_size_bound(std::size_t bound) {
    const Rational k(static_cast<long long>(bound));
    return Rational(5, 6) * k * k * k - Rational(3, 2) * k * k + Rational(5, 3) * k;
}

BoundedReconstruction reconstruct_bounded_k(CdfOracle& oracle, std::size_t bound, std::size_t depth,
                                            std::uint64_t seed) {
    UniquenessSet set = build_uniqueness_set(bound, seed, depth);
    BoundedReconstruction out{DigitVector::from_bit_string("101"), {}, {}};
    std::vector<DigitVector> candidates;
    for (std::size_t m = 3; m <= bound; ++m) {
        const DigitSet digits = infer_digit_set(oracle, m, set.stream_probes, depth);
        if (digits.digits.size() < 2 || digits.digits.size() > m - 1) {
            out.eliminated.push_back(m);
            continue;
        }
        candidates.push_back(digits.to_vector());
    }
    std::vector<Rational> answers;
    answers.reserve(set.rational_points.size());
    for (const auto& x : set.rational_points) answers.push_back(oracle.query(x));
    for (auto& c : candidates) {
        if (signature(c, set.rational_points) == answers) out.survivors.push_back(std::move(c));
    }
    if (out.survivors.empty()) {
        throw error(errc::no_candidate, "no base in 3.." + std::to_string(bound) + " fits the samples");
    }
    const DigitVector root = canonical_root(out.survivors.front());
    for (const auto& s : out.survivors) {
        if (!(canonical_root(s) == root)) {
            throw error(errc::ambiguous, "survivors " + s.bit_string() + " and " + out.survivors.front().bit_string() +
                                             " are not equivalent");
        }
    }
    out.vector = root;
    return out;
}

HypothesisClass hypothesis_class(std::size_t bound) {
    HypothesisClass out{bound, {}, {}, {}};
    std::map<DigitVector, std::size_t> index;
    for (std::size_t n = 3; n <= bound; ++n) {
        for (auto& v : enumerate_vectors(n)) {
            const DigitVector root = canonical_root(v);
            auto [it, inserted] = index.try_emplace(root, out.representatives.size());
            if (inserted) out.representatives.push_back(root);
            out.class_of.push_back(it->second);
            out.vectors.push_back(std::move(v));
        }
    }
    return out;
}

std::vector<Rational> bruteforce_distinguishing_set(std::size_t bound) {
    const HypothesisClass hc = hypothesis_class(bound);
    const std::vector<Rational> pool = square_pool(bound);
    std::vector<std::vector<Rational>> table;
    table.reserve(hc.representatives.size());
    for (const auto& r : hc.representatives) table.push_back(signature(r, pool));

    // Partition refinement: block[i] labels the representatives that no
    // chosen point separates yet.
    std::vector<std::size_t> block(hc.representatives.size(), 0);
    std::vector<Rational> chosen;
    for (;;) {
        std::map<std::size_t, std::size_t> block_size;
        for (auto b : block) ++block_size[b];
        if (std::all_of(block_size.begin(), block_size.end(), [](const auto& e) { return e.second == 1; })) break;

        std::size_t best = pool.size();
        std::size_t best_gain = 0;
        for (std::size_t p = 0; p < pool.size(); ++p) {
            std::map<std::pair<std::size_t, Rational>, std::size_t> groups;
            for (std::size_t i = 0; i < block.size(); ++i) ++groups[{block[i], table[i][p]}];
            std::size_t unseparated = 0;
            for (const auto& [key, count] : groups) unseparated += count * (count - 1) / 2;
            std::size_t total = 0;
            for (const auto& [key, count] : block_size) total += count * (count - 1) / 2;
            if (total - unseparated > best_gain) {
                best_gain = total - unseparated;
                best = p;
            }
        }
        if (best == pool.size()) {
            throw error(errc::resource_limit, "the candidate pool cannot separate every class");
        }
        chosen.push_back(pool[best]);
        std::map<std::pair<std::size_t, Rational>, std::size_t> relabel;
        for (std::size_t i = 0; i < block.size(); ++i) {
            auto [it, inserted] = relabel.try_emplace({block[i], table[i][best]}, relabel.size());
            block[i] = it->second;
        }
    }
    return chosen;
}

bool verify_uniqueness(std::size_t bound, const std::vector<Rational>& points) {
    const HypothesisClass hc = hypothesis_class(bound);
    std::map<std::vector<Rational>, std::size_t> seen;
    for (const auto& r : hc.representatives) {
        if (!seen.try_emplace(signature(r, points), 0).second) return false;
    }
    return true;
}

bool depfix_check(const DigitVector& left, const DigitVector& right) {
    const auto cp = common_power(left.base(), right.base());
    if (!cp) {
        throw error(errc::not_dependent, "bases " + std::to_string(left.base()) + " and " +
                                             std::to_string(right.base()) + " share no common power");
    }
    const std::size_t grid = checked_pow(cp->root, cp->left + cp->right, max_bits());
    if (grid == 0) {
        throw error(errc::resource_limit, "comparison grid exceeds the length cap");
    }
    for (std::size_t k = 1; k < grid; ++k) {
        const Rational x = ratio(k, grid);
        if (eval(left, x) != eval(right, x)) return false;
    }
    return true;
}

}  // namespace cantor
